#pragma once

#include <array>

#include "bm2d/covering.hpp"
#include "bm2d/families.hpp"

namespace bm2d {

// Inscribed affine-regular hexagons and the sandwich L_a c T(body) c U_a
// built from them.

struct InscribedHexagon {
    std::array<PointD, 6> v;  // CCW, indices mod 6
    PointD center;
    double residual = 0;  // max boundary distance over the six vertices
};

struct HexagonFrame {
    std::array<PointD, 6> M, V, B, U, W, Ustar, Wstar;
    std::array<double, 6> a{};
    std::size_t j = 0;  // argmin a_i, smallest index on ties
    double a_min = 0;
};

struct SandwichCertificate {
    double a = 0;
    AffineMapD T;
    PolygonD lower;  // L_a
    PolygonD upper;  // U_a
    InscribedHexagon hex;
    HexagonFrame frame;
    double residual = 0;
};

struct SandwichReport {
    double lower_violation = 0;   // worst signed violation of L_a against T(body)
    double upper_violation = 0;   // worst signed violation of T(body) against U_a
    double twelve_gon_violation = 0;
    double c_cut_violation = 0;   // only meaningful when a < 1/2
    bool pass = false;
};

namespace detail {

struct EdgeFrame {
    std::vector<HalfPlaneD> hp;  // unit normals
    double diam;
    double min_edge;
    double area;
};

inline EdgeFrame edge_frame(const PolygonD& body) {
    EdgeFrame f;
    f.hp = to_halfplanes(body);
    f.area = 0.5 * body.signed_area2();
    f.min_edge = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < body.size(); ++i)
        f.min_edge = std::min(f.min_edge, dist(body[i], body[i + 1]));
    for (auto& h : f.hp) {
        double n = norm(h.normal);
        h.normal.x /= n;
        h.normal.y /= n;
        h.offset /= n;
    }
    f.diam = diameter(body);
    return f;
}

/// Signed distance to the boundary: negative inside, positive outside (near
/// the edge zone, which is where we evaluate it).
inline double signed_boundary_distance(const EdgeFrame& f, const PointD& p) {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& h : f.hp) m = std::max(m, h.violation(p));
    return m;
}

/// Boundary crossing points of the midpoint curve (h + body)/2 against the
/// midpoint region (g + body)/2, i.e. centers O with 2O - h and 2O - g both on
/// the body boundary.
inline std::vector<PointD> midpoint_curve_crossings(const PolygonD& body, const EdgeFrame& f,
                                                    const PointD& h, const PointD& g) {
    // Halfplanes of (g + body)/2: n.x <= (d + n.g)/2 for each body halfplane.
    std::vector<double> off(f.hp.size());
    for (std::size_t j = 0; j < f.hp.size(); ++j)
        off[j] = 0.5 * (f.hp[j].offset + dot(f.hp[j].normal, g));

    std::vector<PointD> out;
    std::size_t n = body.size();
    for (std::size_t i = 0; i < n; ++i) {
        PointD p{0.5 * (h.x + body[i].x), 0.5 * (h.y + body[i].y)};
        PointD q{0.5 * (h.x + body[(i + 1) % n].x), 0.5 * (h.y + body[(i + 1) % n].y)};
        double t_in = 0.0, t_out = 1.0;
        bool enter_strict = false, exit_strict = false;
        for (std::size_t j = 0; j < f.hp.size() && t_in <= t_out; ++j) {
            double vp = dot(f.hp[j].normal, p) - off[j];
            double vq = dot(f.hp[j].normal, q) - off[j];
            if (vp <= 0 && vq <= 0) continue;
            if (vp > 0 && vq > 0) {
                t_in = 1;
                t_out = 0;
                break;
            }
            double t = vp / (vp - vq);
            if (vp > 0) {  // entering
                if (t > t_in) { t_in = t; enter_strict = true; }
            } else {  // leaving
                if (t < t_out) { t_out = t; exit_strict = true; }
            }
        }
        if (t_in > t_out) continue;
        if (enter_strict) out.push_back(p + t_in * (q - p));
        if (exit_strict) out.push_back(p + t_out * (q - p));
    }
    return out;
}

struct HexEval {
    bool valid = false;
    PointD center;
    double score = std::numeric_limits<double>::infinity();  // max |sd| of H3, H6
};

/// Evaluates the sandwich solver residual at boundary parameters (s, u) of the
/// first two hexagon vertices. `hint` picks the center branch by proximity.
inline HexEval eval_hexagon_params(const PolygonD& body, const EdgeFrame& f, double s, double u,
                                   const PointD* hint = nullptr) {
    PointD h1 = boundary_point(body, s);
    PointD h2 = boundary_point(body, u);
    if (dist(h1, h2) < 1e-12 * f.diam) return {};
    HexEval best;
    for (const PointD& o : midpoint_curve_crossings(body, f, h1, h2)) {
        // positive orientation, and no degenerate slivers: a Besicovitch
        // hexagon of area >= 2/3 of the body always exists, so requiring half
        // the body area never empties the solution set
        if (3.0 * cross(h1 - o, h2 - o) < 0.5 * f.area) continue;
        if (!contains_point(body, o, /*strict=*/true)) continue;
        PointD h3 = h2 - h1 + o;
        PointD h6 = h1 - h2 + o;
        double sc = std::max(std::abs(signed_boundary_distance(f, h3)),
                             std::abs(signed_boundary_distance(f, h6)));
        double key = hint ? dist(o, *hint) : sc;
        double best_key = hint ? (best.valid ? dist(best.center, *hint)
                                             : std::numeric_limits<double>::infinity())
                               : best.score;
        if (!best.valid || key < best_key) best = {true, o, sc};
    }
    return best;
}

inline InscribedHexagon assemble_hexagon(const PolygonD& body, const EdgeFrame& f, double s,
                                         double u, const PointD& center) {
    InscribedHexagon hex;
    hex.center = center;
    hex.v[0] = boundary_point(body, s);
    hex.v[1] = boundary_point(body, u);
    hex.v[2] = hex.v[1] - hex.v[0] + center;
    hex.v[3] = PointD{2 * center.x, 2 * center.y} - hex.v[0];
    hex.v[4] = PointD{2 * center.x, 2 * center.y} - hex.v[1];
    hex.v[5] = hex.v[0] - hex.v[1] + center;
    hex.residual = 0;
    for (const auto& p : hex.v)
        hex.residual = std::max(hex.residual, std::abs(signed_boundary_distance(f, p)));
    return hex;
}

/// Fast path: a hexagonal body whose own vertices already satisfy the
/// affine-regularity recurrence is its own inscribed hexagon.
inline std::optional<InscribedHexagon> own_vertex_hexagon(const PolygonD& body, const EdgeFrame& f) {
    if (body.size() != 6) return std::nullopt;
    PointD o{0, 0};
    for (const auto& v : body.vertices()) o = o + v;
    o = (1.0 / 6.0) * o;
    for (std::size_t i = 0; i < 6; ++i) {
        PointD expect = body[i + 1] - body[i] + o;
        if (dist(expect, body[(i + 2) % 6]) > 1e-9 * f.diam) return std::nullopt;
    }
    InscribedHexagon hex;
    hex.center = o;
    for (std::size_t i = 0; i < 6; ++i) hex.v[i] = body[i];
    hex.residual = 0;
    return hex;
}

} // namespace detail

/// Finds an inscribed affine-regular hexagon: 64x64 coarse grid over the
/// boundary parameters of the first two vertices, then damped Newton on the
/// 2-D residual (signed boundary distances of H3 and H6), with a compass
/// search fallback near parametrization kinks.
inline InscribedHexagon find_inscribed_hexagon(const PolygonD& body) {
    auto f = detail::edge_frame(body);
    if (auto own = detail::own_vertex_hexagon(body, f)) return *own;

    const double tol = std::max(1e-8 * f.diam, 1e-4 * f.min_edge);

    // coarse grid: keep the best candidate per cell, then seed the polish
    // stage from several well-separated ones (the residual landscape has
    // spurious local minima across center branches)
    const int G = 64;
    struct Seed {
        double s, u, score;
        PointD center;
    };
    std::vector<Seed> cells;
    for (int i = 0; i < G; ++i) {
        for (int k = 0; k < G; ++k) {
            double s = (i + 0.5) / G, u = (k + 0.5) / G;
            auto e = detail::eval_hexagon_params(body, f, s, u);
            if (e.valid) cells.push_back({s, u, e.score, e.center});
        }
    }
    if (cells.empty())
        throw ConvergenceFailure("find_inscribed_hexagon: no feasible center on the coarse grid",
                                 std::numeric_limits<double>::infinity());
    std::sort(cells.begin(), cells.end(),
              [](const Seed& a, const Seed& b) { return a.score < b.score; });
    std::vector<Seed> seeds;
    auto wrap_gap = [](double a, double b) {
        double d = std::abs(a - b);
        return std::min(d, 1.0 - d);
    };
    for (const auto& c : cells) {
        bool close = false;
        for (const auto& s : seeds)
            if (wrap_gap(c.s, s.s) < 3.0 / G && wrap_gap(c.u, s.u) < 3.0 / G) close = true;
        if (!close) seeds.push_back(c);
        if (seeds.size() >= 12) break;
    }

    auto residual2 = [&](double ss, double uu, const PointD& hh) -> std::optional<std::array<double, 2>> {
        auto e = detail::eval_hexagon_params(body, f, ss, uu, &hh);
        if (!e.valid) return std::nullopt;
        PointD h1 = boundary_point(body, ss), h2 = boundary_point(body, uu);
        PointD h3 = h2 - h1 + e.center, h6 = h1 - h2 + e.center;
        return std::array<double, 2>{detail::signed_boundary_distance(f, h3),
                                     detail::signed_boundary_distance(f, h6)};
    };

    // damped Newton with numerical Jacobian, center branch tracked by hint,
    // compass fallback across parametrization kinks
    auto polish = [&](Seed seed) -> Seed {
        double s = seed.s, u = seed.u, score = seed.score;
        PointD hint = seed.center;
        const int budget = 200;
        const double fd = 1e-7;
        for (int it = 0; it < budget && score > 1e-13 * f.diam; ++it) {
            auto r0 = residual2(s, u, hint);
            if (!r0) break;
            auto rs = residual2(s + fd, u, hint);
            auto ru = residual2(s, u + fd, hint);
            if (!rs || !ru) break;
            double j00 = ((*rs)[0] - (*r0)[0]) / fd, j01 = ((*ru)[0] - (*r0)[0]) / fd;
            double j10 = ((*rs)[1] - (*r0)[1]) / fd, j11 = ((*ru)[1] - (*r0)[1]) / fd;
            double det = j00 * j11 - j01 * j10;
            double ds, du;
            if (std::abs(det) > 1e-14) {
                ds = -(j11 * (*r0)[0] - j01 * (*r0)[1]) / det;
                du = -(-j10 * (*r0)[0] + j00 * (*r0)[1]) / det;
            } else {
                // Tikhonov-damped least squares for (near-)singular Jacobians
                double mu = 1e-8 + 1e-3 * std::sqrt(j00 * j00 + j01 * j01 + j10 * j10 + j11 * j11);
                double a = j00 * j00 + j10 * j10 + mu, b = j00 * j01 + j10 * j11;
                double c = b, d = j01 * j01 + j11 * j11 + mu;
                double g0 = j00 * (*r0)[0] + j10 * (*r0)[1];
                double g1 = j01 * (*r0)[0] + j11 * (*r0)[1];
                double dd = a * d - b * c;
                ds = -(d * g0 - b * g1) / dd;
                du = -(-c * g0 + a * g1) / dd;
            }
            double step_cap = 0.25;
            double len = std::hypot(ds, du);
            if (len > step_cap) {
                ds *= step_cap / len;
                du *= step_cap / len;
            }
            bool improved = false;
            for (double alpha = 1.0; alpha > 1e-4; alpha *= 0.5) {
                auto e = detail::eval_hexagon_params(body, f, s + alpha * ds, u + alpha * du, &hint);
                if (e.valid && e.score < score) {
                    s += alpha * ds;
                    u += alpha * du;
                    hint = e.center;
                    score = e.score;
                    improved = true;
                    break;
                }
            }
            if (!improved) break;
        }
        if (score > 1e-13 * f.diam) {
            // Newton stalled: let the center re-pick the residual-minimizing
            // branch before the compass stage
            auto free_branch = detail::eval_hexagon_params(body, f, s, u);
            if (free_branch.valid && free_branch.score < score) {
                hint = free_branch.center;
                score = free_branch.score;
            }
            double step = 1.0 / (2 * G);
            while (step > 1e-12 && score > 1e-13 * f.diam) {
                bool moved = false;
                const double dirs[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
                for (const auto& d : dirs) {
                    auto e = detail::eval_hexagon_params(body, f, s + d[0] * step, u + d[1] * step,
                                                         &hint);
                    if (e.valid && e.score < score) {
                        s += d[0] * step;
                        u += d[1] * step;
                        hint = e.center;
                        score = e.score;
                        moved = true;
                    }
                }
                if (!moved) step *= 0.5;
            }
        }
        return {s, u, score, hint};
    };

    Seed best{0, 0, std::numeric_limits<double>::infinity(), {}};
    for (const auto& seed : seeds) {
        Seed r = polish(seed);
        if (r.score < best.score) best = r;
        if (best.score <= 1e-13 * f.diam) break;
    }

    double s = best.s, u = best.u;
    PointD hint = best.center;
    auto fin = detail::eval_hexagon_params(body, f, s, u, &hint);
    if (!fin.valid || fin.score > tol)
        throw ConvergenceFailure("find_inscribed_hexagon: residual target unmet",
                                 fin.valid ? fin.score : std::numeric_limits<double>::infinity());
    return detail::assemble_hexagon(body, f, s, u, fin.center);
}

/// Frame of midpoints, side-line intersections, and the per-side ratios a_i.
inline HexagonFrame build_frame(const PolygonD& body, const InscribedHexagon& hex) {
    auto f = detail::edge_frame(body);
    const double eps = 1e-9 * f.diam;
    HexagonFrame fr;
    const auto& H = hex.v;
    const PointD& O = hex.center;
    for (std::size_t i = 0; i < 6; ++i) {
        const PointD& hi = H[i];
        const PointD& hn = H[(i + 1) % 6];
        fr.M[i] = 0.5 * (hi + hn);
        fr.V[i] = PointD{2 * fr.M[i].x, 2 * fr.M[i].y} - O;
        fr.B[i] = ray_boundary_intersection(body, O, fr.M[i] - O);
        if (dist(fr.B[i], fr.V[i]) <= eps) {
            // body boundary reaches the side-line crossing: the limit ratio is 0
            fr.U[i] = fr.V[i];
            fr.W[i] = fr.V[i];
            fr.a[i] = 0;
            continue;
        }
        auto u = line_intersection(hn, fr.B[i], hi, fr.V[i]);
        auto w = line_intersection(hi, fr.B[i], hn, fr.V[i]);
        if (!u || !w) {  // B_i on the side line itself, so U_i = H_i exactly
            fr.U[i] = hi;
            fr.W[i] = hn;
            fr.a[i] = 1;
            continue;
        }
        fr.U[i] = *u;
        fr.W[i] = *w;
        double ai = dist(fr.U[i], fr.V[i]) / dist(hi, fr.V[i]);
        if (ai < 0 && ai > -1e-9) ai = 0;
        if (ai > 1 && ai < 1 + 1e-9) ai = 1;
        fr.a[i] = std::clamp(ai, 0.0, 1.0);
    }
    fr.j = 0;
    for (std::size_t i = 1; i < 6; ++i)
        if (fr.a[i] < fr.a[fr.j]) fr.j = i;
    fr.a_min = fr.a[fr.j];
    for (std::size_t i = 0; i < 6; ++i) {
        const double a = fr.a_min;
        fr.Ustar[i] = fr.V[i] + a * (H[i] - fr.V[i]);
        fr.Wstar[i] = fr.V[i] + a * (H[(i + 1) % 6] - fr.V[i]);
    }
    return fr;
}

/// Affine map sending hexagon vertices H_{j+1}..H_{j+3} to (1,1), (2,2), (1,3)
/// (central symmetry carries the remaining three).
inline AffineMapD sandwich_map(const InscribedHexagon& hex, std::size_t j) {
    std::array<PointD, 3> src = {hex.v[(j + 1) % 6], hex.v[(j + 2) % 6], hex.v[(j + 3) % 6]};
    std::array<PointD, 3> dst = {PointD{1, 1}, PointD{2, 2}, PointD{1, 3}};
    return affine_from_points(src, dst);
}

inline SandwichReport verify_sandwich(const PolygonD& body, const SandwichCertificate& cert,
                                      double tol) {
    SandwichReport rep;
    PolygonD image = apply_map(cert.T, body);
    rep.lower_violation = containment_violation(image, cert.lower);
    rep.upper_violation = containment_violation(cert.upper, image);

    // the 12-gon U_i* W_i* step behind the upper containment
    std::vector<PointD> twelve;
    for (std::size_t i = 0; i < 6; ++i) {
        twelve.push_back(cert.T(cert.frame.Ustar[i]));
        twelve.push_back(cert.T(cert.frame.Wstar[i]));
    }
    rep.twelve_gon_violation = containment_violation(convex_hull(std::move(twelve)), image);

    rep.c_cut_violation = 0;
    if (cert.a < 0.5) {
        // Inside the corner triangle (1,1)-(3,1)-(2,2) the image must stay on
        // the hexagon side of the cut through (1,1) and (2+a,2-a); mirrored on
        // the left.  Outside the triangle the cut line does not constrain the
        // body (the lower family reaches beyond it near (a,a)).
        const double a = cert.a;
        auto in_triangle = [&](PointD q, double sgn) {
            PointD t0{sgn * 1, 1}, t1{sgn * 3, 1}, t2{sgn * 2, 2};
            if (sgn < 0) std::swap(t0, t1);  // keep CCW orientation
            return orient2(t0, t1, q) >= -tol && orient2(t1, t2, q) >= -tol &&
                   orient2(t2, t0, q) >= -tol;
        };
        PointD p{1, 1}, c{2 + a, 2 - a};
        PointD pm{-p.x, p.y}, cm{-c.x, c.y};
        for (const auto& v : image.vertices()) {
            if (in_triangle(v, 1.0))
                rep.c_cut_violation =
                    std::max(rep.c_cut_violation, -orient2(p, c, v) / dist(p, c));
            if (in_triangle(v, -1.0))
                rep.c_cut_violation =
                    std::max(rep.c_cut_violation, orient2(pm, cm, v) / dist(pm, cm));
        }
    }
    rep.pass = rep.lower_violation <= tol && rep.upper_violation <= tol &&
               rep.twelve_gon_violation <= tol &&
               (cert.a >= 0.5 || rep.c_cut_violation <= tol);
    return rep;
}

/// Exact re-verification of a sandwich certificate for rational input bodies:
/// T and a are rationalized (continued-fraction rounding, capped denominator)
/// and both containments are re-checked in exact arithmetic.  Violations are
/// reported in unnormalized line-equation units (twice the triangle area), so
/// zero means exact containment.
struct ExactSandwichReport {
    Rational lower_violation{0};
    Rational upper_violation{0};
    bool pass(const Rational& slack = Rational(0)) const {
        return lower_violation <= slack && upper_violation <= slack;
    }
};

namespace detail {

inline Rational containment_violation_exact(const PolygonQ& outer, const PolygonQ& inner) {
    Rational worst = -1;
    bool first = true;
    for (std::size_t i = 0; i < outer.size(); ++i)
        for (const auto& v : inner.vertices()) {
            Rational viol = -orient2(outer[i], outer[i + 1], v);
            if (first || viol > worst) worst = viol;
            first = false;
        }
    return worst;
}

} // namespace detail

inline ExactSandwichReport verify_sandwich_exact(const PolygonQ& body,
                                                 const SandwichCertificate& cert,
                                                 long long den_cap = 1000000) {
    AffineMap<Rational> T{rational_from_double(cert.T.a, den_cap),
                          rational_from_double(cert.T.b, den_cap),
                          rational_from_double(cert.T.c, den_cap),
                          rational_from_double(cert.T.d, den_cap),
                          {rational_from_double(cert.T.shift.x, den_cap),
                           rational_from_double(cert.T.shift.y, den_cap)}};
    Rational a = rational_from_double(cert.a, den_cap);
    if (a < 0) a = 0;
    if (a > 1) a = 1;
    PolygonQ image = apply_map(T, body);
    ExactSandwichReport rep;
    rep.lower_violation = detail::containment_violation_exact(image, make_lower(a));
    rep.upper_violation = detail::containment_violation_exact(make_upper(a), image);
    return rep;
}

/// Lemma-style sandwich certificate L_a c T(body) c U_a.
inline SandwichCertificate sandwich(const PolygonD& body) {
    InscribedHexagon hex = find_inscribed_hexagon(body);
    HexagonFrame frame = build_frame(body, hex);
    SandwichCertificate cert;
    cert.a = frame.a_min;
    cert.T = sandwich_map(hex, frame.j);
    cert.lower = make_lower(cert.a);
    cert.upper = make_upper(cert.a);
    cert.hex = hex;
    cert.frame = frame;
    cert.residual = hex.residual;
    return cert;
}

} // namespace bm2d
