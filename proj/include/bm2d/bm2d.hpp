#pragma once

// Planar convex-geometry toolkit: hexagon sandwiches, covering homotheties,
// and machine-checkable Banach-Mazur distance certificates.

#include "bm2d/affine.hpp"
#include "bm2d/certificates.hpp"
#include "bm2d/covering.hpp"
#include "bm2d/errors.hpp"
#include "bm2d/estimator.hpp"
#include "bm2d/families.hpp"
#include "bm2d/geometry.hpp"
#include "bm2d/hexagon.hpp"
#include "bm2d/io.hpp"
#include "bm2d/lp2d.hpp"
#include "bm2d/polygon.hpp"
#include "bm2d/rational.hpp"
#include "bm2d/shapes.hpp"
#include "bm2d/svg.hpp"
