#pragma once

#include <algorithm>
#include <vector>

#include "bm2d/geometry.hpp"

namespace bm2d {

/// Convex polygon in canonical form: CCW vertex order, first vertex is the
/// lexicographic minimum, no repeated vertices, no three consecutive collinear
/// vertices, positive area.
template <class S>
class ConvexPolygon {
public:
    ConvexPolygon() = default;

    /// Wraps an already-canonical vertex list (validated).
    static ConvexPolygon from_canonical(std::vector<Point<S>> verts) {
        ConvexPolygon p;
        p.verts_ = std::move(verts);
        p.validate();
        return p;
    }

    const std::vector<Point<S>>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    const Point<S>& operator[](std::size_t i) const { return verts_[i % verts_.size()]; }

    S signed_area2() const {  // twice the area
        S s(0);
        for (std::size_t i = 0; i < verts_.size(); ++i)
            s += cross(verts_[i], verts_[(i + 1) % verts_.size()]);
        return s;
    }

    Point<S> centroid() const {
        S a2(0);
        Point<S> c{S(0), S(0)};
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            const auto& p = verts_[i];
            const auto& q = verts_[(i + 1) % verts_.size()];
            S w = cross(p, q);
            a2 += w;
            c.x += w * (p.x + q.x);
            c.y += w * (p.y + q.y);
        }
        S k = S(3) * a2;
        return {c.x / k, c.y / k};
    }

private:
    void validate() const {
        if (verts_.size() < 3) throw DegenerateInput("polygon: fewer than 3 vertices");
        std::size_t n = verts_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (orient2(verts_[i], verts_[(i + 1) % n], verts_[(i + 2) % n]) <= S(0))
                throw DegenerateInput("polygon: vertices not in strictly convex CCW position");
        }
        for (std::size_t i = 1; i < n; ++i)
            if (lex_less(verts_[i], verts_[0]))
                throw DegenerateInput("polygon: first vertex is not the lexicographic minimum");
    }

    std::vector<Point<S>> verts_;
};

using PolygonD = ConvexPolygon<double>;
using PolygonQ = ConvexPolygon<Rational>;

/// Andrew monotone chain. Collinear chain points are merged; the result starts
/// at the lexicographic minimum. Exact for rational inputs.
template <class S>
ConvexPolygon<S> convex_hull(std::vector<Point<S>> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point<S>& a, const Point<S>& b) { return lex_less(a, b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw DegenerateInput("convex_hull: fewer than 3 distinct points");

    std::size_t n = pts.size();
    std::vector<Point<S>> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && orient2(h[k - 2], h[k - 1], pts[i]) <= S(0)) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lo = k + 1; i-- > 0;) {  // upper chain
        while (k >= lo && orient2(h[k - 2], h[k - 1], pts[i]) <= S(0)) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);  // last point repeats the first
    if (h.size() < 3) throw DegenerateInput("convex_hull: all points collinear");
    return ConvexPolygon<S>::from_canonical(std::move(h));
}

/// One halfplane per edge; their intersection is exactly P.
template <class S>
std::vector<HalfPlane<S>> to_halfplanes(const ConvexPolygon<S>& P) {
    std::vector<HalfPlane<S>> hs;
    hs.reserve(P.size());
    for (std::size_t i = 0; i < P.size(); ++i) {
        Point<S> d = P[i + 1] - P[i];
        Point<S> n{d.y, -d.x};  // outward for CCW order
        hs.push_back({n, dot(n, P[i])});
    }
    return hs;
}

template <class S>
bool contains_point(const ConvexPolygon<S>& P, const Point<S>& q, bool strict = false) {
    for (std::size_t i = 0; i < P.size(); ++i) {
        S o = orient2(P[i], P[i + 1], q);
        if (strict ? o <= S(0) : o < S(0)) return false;
    }
    return true;
}

/// Convexity makes the vertex test sufficient.
template <class S>
bool contains_polygon(const ConvexPolygon<S>& outer, const ConvexPolygon<S>& inner) {
    for (const auto& v : inner.vertices())
        if (!contains_point(outer, v)) return false;
    return true;
}

/// Worst signed violation of any vertex of `inner` against the edge lines of
/// `outer`, normalized by edge length. <= 0 means contained.
inline double containment_violation(const PolygonD& outer, const PolygonD& inner) {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < outer.size(); ++i) {
        PointD d = outer[i + 1] - outer[i];
        double len = norm(d);
        for (const auto& v : inner.vertices())
            worst = std::max(worst, -orient2(outer[i], outer[i + 1], v) / len);
    }
    return worst;
}

template <class S>
ConvexPolygon<double> to_double(const ConvexPolygon<S>& P) {
    std::vector<PointD> v;
    v.reserve(P.size());
    for (const auto& p : P.vertices()) v.push_back(to_double(p));
    return PolygonD::from_canonical(std::move(v));
}

inline PolygonQ to_rational(const PolygonD& P, std::uint64_t cap = 1000000) {
    std::vector<PointQ> v;
    v.reserve(P.size());
    for (const auto& p : P.vertices()) v.push_back(to_rational(p, cap));
    return convex_hull(std::move(v));
}

inline double perimeter(const PolygonD& P) {
    double s = 0;
    for (std::size_t i = 0; i < P.size(); ++i) s += dist(P[i], P[i + 1]);
    return s;
}

/// Max pairwise vertex distance.
inline double diameter(const PolygonD& P) {
    double d = 0;
    for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = i + 1; j < P.size(); ++j) d = std::max(d, dist(P[i], P[j]));
    return d;
}

/// Point at perimeter fraction t (mod 1) along the boundary, CCW from vertex 0.
inline PointD boundary_point(const PolygonD& P, double t) {
    t -= std::floor(t);
    double target = t * perimeter(P);
    for (std::size_t i = 0; i < P.size(); ++i) {
        double len = dist(P[i], P[i + 1]);
        if (target <= len || i + 1 == P.size()) {
            double u = len > 0 ? target / len : 0.0;
            u = std::min(u, 1.0);
            return P[i] + u * (P[i + 1] - P[i]);
        }
        target -= len;
    }
    return P[0];  // unreachable
}

/// Unique boundary point on the ray origin + t*dir, t > 0, for a strictly
/// interior origin. Exact for rational inputs.
template <class S>
Point<S> ray_boundary_intersection(const ConvexPolygon<S>& P, const Point<S>& origin,
                                   const Point<S>& dir) {
    if (dir.x == S(0) && dir.y == S(0)) throw DomainError("ray_boundary_intersection: zero direction");
    if (!contains_point(P, origin, /*strict=*/true))
        throw OriginNotInterior("ray_boundary_intersection: origin not strictly interior");
    for (std::size_t i = 0; i < P.size(); ++i) {
        Point<S> e = P[i + 1] - P[i];
        S den = cross(dir, e);
        if (den == S(0)) continue;  // ray parallel to this edge
        Point<S> w = P[i] - origin;
        S t = cross(w, e) / den;   // along the ray
        S u = cross(w, dir) / den; // along the edge
        if (t > S(0) && u >= S(0) && u <= S(1))
            return {origin.x + t * dir.x, origin.y + t * dir.y};
    }
    throw DomainError("ray_boundary_intersection: no boundary hit (degenerate input)");
}

} // namespace bm2d
