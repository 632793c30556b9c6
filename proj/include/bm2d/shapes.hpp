#pragma once

#include <random>

#include "bm2d/polygon.hpp"

namespace bm2d {

/// Regular k-gon inscribed in a circle of the given radius (default: the
/// smooth-body proxy resolution used throughout, k = 256).
inline PolygonD regular_ngon(int k, double radius = 1.0, PointD center = {0, 0}) {
    if (k < 3) throw DomainError("regular_ngon: k < 3");
    std::vector<PointD> pts;
    pts.reserve(k);
    for (int i = 0; i < k; ++i) {
        double th = 2.0 * 3.14159265358979323846 * i / k;
        pts.push_back({center.x + radius * std::cos(th), center.y + radius * std::sin(th)});
    }
    return convex_hull(std::move(pts));
}

inline PolygonD unit_square() {
    return convex_hull<double>({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
}

/// Random convex polygon with 5..12 hull vertices and coordinates in
/// [-10, 10], driven by the caller's generator for reproducibility.
inline PolygonD random_polygon(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nverts(5, 12);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int target = nverts(rng);
        std::vector<PointD> pts;
        pts.reserve(3 * target);
        for (int i = 0; i < 3 * target; ++i) pts.push_back({coord(rng), coord(rng)});
        try {
            PolygonD hull = convex_hull(std::move(pts));
            if ((int)hull.size() >= 5 && (int)hull.size() <= 12) return hull;
        } catch (const DegenerateInput&) {
        }
    }
    throw DegenerateInput("random_polygon: generation failed");
}

} // namespace bm2d
