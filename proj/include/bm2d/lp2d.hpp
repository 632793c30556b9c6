#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bm2d/geometry.hpp"

namespace bm2d {

/// ax*x + ay*y <= b
struct LinCon {
    double ax, ay, b;
};

/// Incremental two-variable linear feasibility: clips a large bounding box by
/// each halfplane in turn; returns an interior representative (vertex average)
/// of the feasible region, or nullopt when it becomes empty.
// The box bound caps intersection-vertex magnitudes, and with them the
// floating-point error of the returned representative (~box * 1e-16); 1e6
// comfortably covers every substituted-variable range used in this project.
inline std::optional<PointD> feasible_point_2d(std::span<const LinCon> cons, double box = 1e6) {
    std::vector<PointD> poly = {{-box, -box}, {box, -box}, {box, box}, {-box, box}};
    std::vector<PointD> next;
    for (const auto& c : cons) {
        next.clear();
        std::size_t n = poly.size();
        for (std::size_t i = 0; i < n; ++i) {
            const PointD& p = poly[i];
            const PointD& q = poly[(i + 1) % n];
            double vp = c.ax * p.x + c.ay * p.y - c.b;
            double vq = c.ax * q.x + c.ay * q.y - c.b;
            if (vp <= 0) next.push_back(p);
            if ((vp < 0 && vq > 0) || (vp > 0 && vq < 0)) {
                double t = vp / (vp - vq);
                next.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
            }
        }
        poly.swap(next);
        if (poly.empty()) return std::nullopt;
    }
    PointD c{0, 0};
    for (const auto& p : poly) c = c + p;
    return PointD{c.x / double(poly.size()), c.y / double(poly.size())};
}

/// a*t <= b
struct LinCon1 {
    double a, b;
};

/// One-variable version; returns the interval midpoint when feasible.
inline std::optional<double> feasible_point_1d(std::span<const LinCon1> cons, double box = 1e9) {
    double lo = -box, hi = box;
    for (const auto& c : cons) {
        if (c.a > 0)
            hi = std::min(hi, c.b / c.a);
        else if (c.a < 0)
            lo = std::max(lo, c.b / c.a);
        else if (c.b < 0)
            return std::nullopt;
        if (lo > hi) return std::nullopt;
    }
    return 0.5 * (lo + hi);
}

} // namespace bm2d
