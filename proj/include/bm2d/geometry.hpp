#pragma once

#include <cmath>
#include <optional>

#include "bm2d/rational.hpp"

namespace bm2d {

template <class S>
struct Point {
    S x{}, y{};

    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(const S& s, const Point& p) { return {s * p.x, s * p.y}; }
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

using PointD = Point<double>;
using PointQ = Point<Rational>;

template <class S> inline S dot(const Point<S>& a, const Point<S>& b) { return a.x * b.x + a.y * b.y; }
template <class S> inline S cross(const Point<S>& a, const Point<S>& b) { return a.x * b.y - a.y * b.x; }

/// Twice the signed area of triangle (a, b, c); > 0 for a CCW turn.
template <class S>
inline S orient2(const Point<S>& a, const Point<S>& b, const Point<S>& c) {
    return cross(b - a, c - a);
}

inline double norm(const PointD& p) { return std::hypot(p.x, p.y); }
inline double dist(const PointD& a, const PointD& b) { return norm(a - b); }

template <class S>
inline bool lex_less(const Point<S>& a, const Point<S>& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

inline PointD to_double(const PointQ& p) { return {to_double(p.x), to_double(p.y)}; }
inline PointD to_double(const PointD& p) { return p; }
inline PointQ to_rational(const PointD& p, std::uint64_t cap = 1000000) {
    return {rational_from_double(p.x, cap), rational_from_double(p.y, cap)};
}

/// {p : normal . p <= offset}; normal need not be unit length.
template <class S>
struct HalfPlane {
    Point<S> normal;
    S offset{};

    S violation(const Point<S>& p) const { return dot(normal, p) - offset; }
    bool contains(const Point<S>& p, bool strict = false) const {
        S v = violation(p);
        return strict ? v < S(0) : v <= S(0);
    }
};

using HalfPlaneD = HalfPlane<double>;
using HalfPlaneQ = HalfPlane<Rational>;

/// Intersection of the lines through (p1, p2) and (p3, p4); nullopt when parallel.
template <class S>
inline std::optional<Point<S>> line_intersection(const Point<S>& p1, const Point<S>& p2,
                                                 const Point<S>& p3, const Point<S>& p4) {
    Point<S> d1 = p2 - p1, d2 = p4 - p3;
    S den = cross(d1, d2);
    if (den == S(0)) return std::nullopt;
    S t = cross(p3 - p1, d2) / den;
    return Point<S>{p1.x + t * d1.x, p1.y + t * d1.y};
}

/// Ratio |pv| / |qv| for collinear points p, q, v with q != v, computed without
/// square roots so it is exact for rational inputs.
template <class S>
inline S collinear_ratio(const Point<S>& p, const Point<S>& q, const Point<S>& v) {
    Point<S> dq = q - v;
    Point<S> dp = p - v;
    if (scalar_abs(dq.x) >= scalar_abs(dq.y)) {
        if (dq.x == S(0)) throw DomainError("collinear_ratio: q == v");
        return scalar_abs(dp.x / dq.x);
    }
    return scalar_abs(dp.y / dq.y);
}

} // namespace bm2d
