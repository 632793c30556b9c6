#pragma once

#include "bm2d/affine.hpp"
#include "bm2d/polygon.hpp"

namespace bm2d {

// The one-parameter polygon families sandwiching a body around its inscribed
// affine-regular hexagon, and the small fixed hexagon used by the diameter
// pipeline.

/// Lower body: hull of (0, 2a/(1+a)), (+-1,1), (+-2,2), (+-1,3), a in [0,1].
template <class S>
ConvexPolygon<S> make_lower(const S& a) {
    if (a < S(0) || a > S(1)) throw DomainError("make_lower: a outside [0,1]");
    S apex_y = S(2) * a / (S(1) + a);
    std::vector<Point<S>> pts = {
        {S(0), apex_y}, {S(1), S(1)}, {S(-1), S(1)}, {S(2), S(2)},
        {S(-2), S(2)},  {S(1), S(3)}, {S(-1), S(3)},
    };
    return convex_hull(std::move(pts));
}

/// Upper body: the 10-point hull for a < 1/2, the 12-point hull for a >= 1/2.
template <class S>
ConvexPolygon<S> make_upper(const S& a) {
    if (a < S(0) || a > S(1)) throw DomainError("make_upper: a outside [0,1]");
    std::vector<Point<S>> pts;
    auto pm = [&pts](const S& x, const S& y) {
        pts.push_back({x, y});
        pts.push_back({-x, y});
    };
    S half = scalar_traits<S>::from_fraction(1, 2);
    pm(a, a);
    if (a >= half) {
        pm(S(3) - S(2) * a, S(1));
        pm(S(3) - a, S(1) + a);
    } else {
        pm(S(2) + a, S(2) - a);
    }
    pm(S(3) - a, S(3) - a);
    pm(S(3) - S(2) * a, S(3));
    pm(a, S(4) - a);
    return convex_hull(std::move(pts));
}

/// The canonical inscribed hexagon (+-1,1), (+-2,2), (+-1,3), in CCW order
/// starting from (1,1). Equals the vertex set of make_lower(1).
template <class S>
std::array<Point<S>, 6> canonical_hexagon() {
    return {Point<S>{S(1), S(1)}, {S(2), S(2)}, {S(1), S(3)},
            {S(-1), S(3)}, {S(-2), S(2)}, {S(-1), S(1)}};
}

/// Small hexagon H with vertices (0,4/3), (+-1,5/3), (+-1,7/3), (0,8/3). Its
/// alternate side lines meet at the vertices of make_lower(1).
template <class S>
ConvexPolygon<S> hexagon_h() {
    auto f = [](long long p, long long q) { return scalar_traits<S>::from_fraction(p, q); };
    std::vector<Point<S>> pts = {
        {S(0), f(4, 3)}, {S(1), f(5, 3)}, {S(1), f(7, 3)},
        {S(0), f(8, 3)}, {S(-1), f(7, 3)}, {S(-1), f(5, 3)},
    };
    return convex_hull(std::move(pts));
}

/// Affine map sending the canonical hexagon to hexagon_h (vertex to vertex).
template <class S>
AffineMap<S> canonical_to_h() {
    auto f = [](long long p, long long q) { return scalar_traits<S>::from_fraction(p, q); };
    std::array<Point<S>, 3> src = {Point<S>{S(1), S(1)}, {S(2), S(2)}, {S(1), S(3)}};
    std::array<Point<S>, 3> dst = {Point<S>{S(1), f(5, 3)}, {S(1), f(7, 3)}, {S(0), f(8, 3)}};
    return affine_from_points(src, dst);
}

} // namespace bm2d
