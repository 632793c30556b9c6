#pragma once

#include "bm2d/families.hpp"
#include "bm2d/lp2d.hpp"

namespace bm2d {

// Covering homotheties: closed-form ratios for covering an upper body U_b by
// a homothetic image of a lower body L_a, and an independent bisection oracle
// for minimal covering ratios.

template <class S>
struct CoverCertificate {
    S a, b;
    S ratio;
    Point<S> center;
    ConvexPolygon<S> covered;  // U_b
    ConvexPolygon<S> coverer;  // h(L_a)
    bool exact;
};

/// Per-point expansion requirements f1, f2, f3 and the crossing points c1, c2
/// of the center-selection envelope.
template <class S>
struct EnvelopeBreakdown {
    S c1, c2, c_star;
    S f1, f2, f3;
    S lambda;
};

/// Containment re-check: exact for rational scalars; for floats the
/// containments in this module are often tight, so roundoff slack is allowed.
template <class S>
void require_contains(const ConvexPolygon<S>& outer, const ConvexPolygon<S>& inner,
                      const char* context) {
    if constexpr (scalar_traits<S>::exact) {
        if (!contains_polygon(outer, inner)) throw VerificationFailure(context);
    } else {
        if (containment_violation(outer, inner) > 1e-9) throw VerificationFailure(context);
    }
}

template <class S>
void require_half_open(const S& a, const S& b) {
    S half = scalar_traits<S>::from_fraction(1, 2);
    if (a < S(0) || a >= half || b < S(0) || b >= half)
        throw DomainError("covering: a, b must lie in [0, 1/2)");
}

/// Minimal closed-form ratio for covering U_b by a homothety of L_a when
/// a, b in [0, 1/2).
template <class S>
S lambda_half(const S& a, const S& b) {
    require_half_open(a, b);
    S threshold = S(3) * a / (S(2) * (S(1) + S(2) * a));
    if (b <= threshold) return S(1) + (S(1) - b) * (S(1) + S(2) * a) / (S(2) + a);
    return scalar_traits<S>::from_fraction(3, 2);
}

template <class S>
EnvelopeBreakdown<S> cover_center(const S& a, const S& b) {
    require_half_open(a, b);
    EnvelopeBreakdown<S> e;
    e.c1 = S(6) * a / (S(1) + S(2) * a);
    e.c2 = S(4) * b;
    e.c_star = std::max(e.c1, e.c2);
    const S& c = e.c_star;
    // f1, f2 have removable 0/0 limits at a = 0 resp. b = 0
    S den1 = c + a * c - S(2) * a;
    e.f1 = (a == S(0)) ? S(0) : S(2) * a * (S(1) - b) / den1;
    e.f2 = (b == S(0)) ? S(0) : S(2) * b / c;
    e.f3 = S(2) * (S(1) - b) / (S(4) - c);
    e.lambda = S(1) + e.f3;
    return e;
}

/// Lemma-style covering for a, b in [0, 1/2): ratio lambda_half(a, b),
/// center (0, max{c1, c2}). The containment is re-checked; exact for
/// rational scalars.
template <class S>
CoverCertificate<S> cover_small_b(const S& a, const S& b) {
    auto env = cover_center(a, b);
    CoverCertificate<S> cert;
    cert.a = a;
    cert.b = b;
    cert.ratio = env.lambda;
    cert.center = {S(0), env.c_star};
    cert.covered = make_upper(b);
    cert.coverer = apply_homothety(Homothety<S>{cert.center, cert.ratio}, make_lower(a));
    cert.exact = scalar_traits<S>::exact;
    require_contains(cert.coverer, cert.covered, "cover_small_b: containment check failed");
    return cert;
}

/// Covering for b in [1/2, 1]: ratio 2-b, center (0, 2), any a in [0, 1].
template <class S>
CoverCertificate<S> cover_big_b(const S& a, const S& b) {
    S half = scalar_traits<S>::from_fraction(1, 2);
    if (a < S(0) || a > S(1)) throw DomainError("cover_big_b: a outside [0,1]");
    if (b < half || b > S(1)) throw DomainError("cover_big_b: b outside [1/2,1]");
    CoverCertificate<S> cert;
    cert.a = a;
    cert.b = b;
    cert.ratio = S(2) - b;
    cert.center = {S(0), S(2)};
    cert.covered = make_upper(b);
    cert.coverer = apply_homothety(Homothety<S>{cert.center, cert.ratio}, make_lower(a));
    cert.exact = scalar_traits<S>::exact;
    require_contains(cert.coverer, cert.covered, "cover_big_b: containment check failed");
    return cert;
}

enum class CenterConstraint { Free, YAxis };

namespace detail {

inline double support(const PolygonD& Q, const PointD& dir) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : Q.vertices()) best = std::max(best, dot(dir, v));
    return best;
}

// Q subset of h_{lambda,c}(P) iff for every halfplane (n, d) of P:
//   max_v n.v + (lambda - 1) n.c <= lambda d.
// With z := (lambda - 1) c the constraints are linear in z, and feasibility is
// monotone in lambda.
// Returns the translation z of the map x -> lambda*x + z, or nullopt.
inline std::optional<PointD> cover_feasible_z(const std::vector<HalfPlaneD>& hp,
                                              const std::vector<double>& supQ, double lambda,
                                              CenterConstraint cc) {
    if (cc == CenterConstraint::Free) {
        std::vector<LinCon> cons;
        cons.reserve(hp.size());
        for (std::size_t j = 0; j < hp.size(); ++j)
            cons.push_back({hp[j].normal.x, hp[j].normal.y, lambda * hp[j].offset - supQ[j]});
        return feasible_point_2d(cons);
    }
    std::vector<LinCon1> cons;
    cons.reserve(hp.size());
    for (std::size_t j = 0; j < hp.size(); ++j)
        cons.push_back({hp[j].normal.y, lambda * hp[j].offset - supQ[j]});
    auto zy = feasible_point_1d(cons);
    if (!zy) return std::nullopt;
    return PointD{0, *zy};
}

// Recover a homothety center from z; near ratio 1 the center diverges (the
// map degenerates to a translation), so callers needing the exact map should
// use the z form instead.
inline PointD center_from_z(const PointD& z, double lambda) {
    double s = lambda - 1.0;
    if (std::abs(s) < 1e-12) return PointD{0, 0};
    return PointD{z.x / s, z.y / s};
}

inline std::optional<PointD> cover_feasible(const std::vector<HalfPlaneD>& hp,
                                            const std::vector<double>& supQ, double lambda,
                                            CenterConstraint cc) {
    auto z = cover_feasible_z(hp, supQ, lambda, cc);
    if (!z) return std::nullopt;
    return center_from_z(*z, lambda);
}

} // namespace detail

/// Minimal ratio lambda such that some homothety of P with that ratio contains
/// Q (center optionally restricted to the y axis). Bisection to 1e-9. Returns
/// the ratio and the translation z of the witnessing map x -> lambda*x + z.
inline std::pair<double, PointD> min_cover_z(const PolygonD& P, const PolygonD& Q,
                                             CenterConstraint cc = CenterConstraint::Free,
                                             double lower_seed = 1e-9, double upper_seed = 64.0) {
    auto hp = to_halfplanes(P);
    for (auto& h : hp) {  // unit normals for conditioning
        double n = norm(h.normal);
        h.normal.x /= n;
        h.normal.y /= n;
        h.offset /= n;
    }
    std::vector<double> supQ(hp.size());
    for (std::size_t j = 0; j < hp.size(); ++j) supQ[j] = detail::support(Q, hp[j].normal);

    double lo = std::max(1e-9, lower_seed), hi = upper_seed;
    auto at_hi = detail::cover_feasible_z(hp, supQ, hi, cc);
    if (!at_hi) throw Infeasible("min_cover_ratio: infeasible at upper seed");
    if (auto z0 = detail::cover_feasible_z(hp, supQ, lo, cc)) return {lo, *z0};
    PointD z = *at_hi;
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        if (auto c = detail::cover_feasible_z(hp, supQ, mid, cc)) {
            hi = mid;
            z = *c;
        } else {
            lo = mid;
        }
    }
    return {hi, z};
}

/// As min_cover_z, but reports the homothety center (ill-conditioned near
/// ratio 1; use min_cover_z when the map itself is needed).
inline std::pair<double, PointD> min_cover_ratio(const PolygonD& P, const PolygonD& Q,
                                                 CenterConstraint cc = CenterConstraint::Free,
                                                 double lower_seed = 1e-9, double upper_seed = 64.0) {
    auto [lam, z] = min_cover_z(P, Q, cc, lower_seed, upper_seed);
    return {lam, detail::center_from_z(z, lam)};
}

} // namespace bm2d
