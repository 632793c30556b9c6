#pragma once

#include <array>

#include "bm2d/polygon.hpp"

namespace bm2d {

/// x |-> linear * x + shift, with invertible linear part.
template <class S>
struct AffineMap {
    S a{1}, b{0}, c{0}, d{1};  // row-major 2x2 linear part
    Point<S> shift{S(0), S(0)};

    S det() const { return a * d - b * c; }

    Point<S> operator()(const Point<S>& p) const {
        return {a * p.x + b * p.y + shift.x, c * p.x + d * p.y + shift.y};
    }

    static AffineMap identity() { return {}; }

    AffineMap inverse() const {
        S dt = checked_det(*this);
        AffineMap inv{d / dt, -b / dt, -c / dt, a / dt, {S(0), S(0)}};
        Point<S> s = inv(shift);
        inv.shift = {-s.x, -s.y};
        return inv;
    }

    /// this after other: (this o other)(x) = this(other(x)).
    AffineMap compose(const AffineMap& other) const {
        AffineMap m;
        m.a = a * other.a + b * other.c;
        m.b = a * other.b + b * other.d;
        m.c = c * other.a + d * other.c;
        m.d = c * other.b + d * other.d;
        m.shift = (*this)(other.shift);
        return m;
    }

    static S checked_det(const AffineMap& m) {
        S dt = m.det();
        if constexpr (scalar_traits<S>::exact) {
            if (dt == S(0)) throw SingularMap("affine map: zero determinant");
        } else {
            if (std::abs(to_double(dt)) < 1e-12) throw SingularMap("affine map: determinant below 1e-12");
        }
        return dt;
    }
};

using AffineMapD = AffineMap<double>;
using AffineMapQ = AffineMap<Rational>;

/// The unique affine map sending src[i] -> dst[i], i = 0,1,2.
template <class S>
AffineMap<S> affine_from_points(const std::array<Point<S>, 3>& src, const std::array<Point<S>, 3>& dst) {
    Point<S> e1 = src[1] - src[0], e2 = src[2] - src[0];
    S den = cross(e1, e2);
    if (den == S(0)) throw SingularMap("affine_from_points: collinear source points");
    Point<S> f1 = dst[1] - dst[0], f2 = dst[2] - dst[0];
    // linear part L with L*e1 = f1, L*e2 = f2
    AffineMap<S> m;
    m.a = (f1.x * e2.y - f2.x * e1.y) / den;
    m.b = (f2.x * e1.x - f1.x * e2.x) / den;
    m.c = (f1.y * e2.y - f2.y * e1.y) / den;
    m.d = (f2.y * e1.x - f1.y * e2.x) / den;
    Point<S> img{m.a * src[0].x + m.b * src[0].y, m.c * src[0].x + m.d * src[0].y};
    m.shift = dst[0] - img;
    AffineMap<S>::checked_det(m);
    return m;
}

template <class S>
ConvexPolygon<S> apply_map(const AffineMap<S>& T, const ConvexPolygon<S>& P) {
    AffineMap<S>::checked_det(T);
    std::vector<Point<S>> v;
    v.reserve(P.size());
    for (const auto& p : P.vertices()) v.push_back(T(p));
    return convex_hull(std::move(v));
}

/// x |-> center + ratio * (x - center), ratio > 0.
template <class S>
struct Homothety {
    Point<S> center;
    S ratio;

    Point<S> operator()(const Point<S>& p) const {
        return {center.x + ratio * (p.x - center.x), center.y + ratio * (p.y - center.y)};
    }

    AffineMap<S> to_affine() const {
        return {ratio, S(0), S(0), ratio,
                {(S(1) - ratio) * center.x, (S(1) - ratio) * center.y}};
    }

    /// this o other, itself a homothety when ratio*other.ratio != 1.
    S composed_ratio(const Homothety& other) const { return ratio * other.ratio; }
};

using HomothetyD = Homothety<double>;
using HomothetyQ = Homothety<Rational>;

template <class S>
Homothety<S> make_homothety(const Point<S>& center, const S& ratio) {
    if (!(ratio > S(0))) throw DomainError("homothety: ratio must be positive");
    return {center, ratio};
}

template <class S>
ConvexPolygon<S> apply_homothety(const Homothety<S>& h, const ConvexPolygon<S>& P) {
    std::vector<Point<S>> v;
    v.reserve(P.size());
    for (const auto& p : P.vertices()) v.push_back(h(p));
    return convex_hull(std::move(v));
}

AffineMapQ inline to_rational(const AffineMapD& m, std::uint64_t cap = 1000000) {
    return {rational_from_double(m.a, cap), rational_from_double(m.b, cap),
            rational_from_double(m.c, cap), rational_from_double(m.d, cap),
            to_rational(m.shift, cap)};
}

AffineMapD inline to_double(const AffineMapQ& m) {
    return {to_double(m.a), to_double(m.b), to_double(m.c), to_double(m.d), to_double(m.shift)};
}

} // namespace bm2d
