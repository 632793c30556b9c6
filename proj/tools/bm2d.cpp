// Command-line front end: body I/O, sandwich/cover/bm/certificate subcommands,
// the verify-paper umbrella report, and deterministic SVG figure emission.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "bm2d/bm2d.hpp"

namespace {

using nlohmann::json;
using namespace bm2d;

constexpr const char* kVersion = "1.0.0";

double now_seconds() {
    using clk = std::chrono::steady_clock;
    static const clk::time_point t0 = clk::now();
    return std::chrono::duration<double>(clk::now() - t0).count();
}

struct RunReport {
    std::string tool;
    json inputs = json::object();
    json checks = json::array();
    json extra = json::object();

    explicit RunReport(std::string name) : tool(std::move(name)) {}

    void add_input(const std::string& path) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(fnv1a(read_file(path))));
        inputs[path] = buf;
    }

    void check(const std::string& name, bool ok, double margin, double runtime) {
        checks.push_back({{"name", name},
                          {"status", ok ? "pass" : "fail"},
                          {"margin", margin},
                          {"runtime", runtime}});
    }

    bool pass() const {
        for (const auto& c : checks)
            if (c["status"] != "pass") return false;
        return true;
    }

    json to_json() const {
        json out = {{"tool", tool},
                    {"version", kVersion},
                    {"inputs", inputs},
                    {"checks", checks},
                    {"pass", pass()}};
        for (auto it = extra.begin(); it != extra.end(); ++it) out[it.key()] = it.value();
        return out;
    }
};

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

// ---------------------------------------------------------------------------

int cmd_sandwich(const std::string& in, const std::string& out, bool exact, double tol_opt) {
    RunReport rep("sandwich");
    rep.add_input(in);
    Body body = parse_body_file(in);
    PolygonD P = body.as_double();
    double tol = tol_opt > 0 ? tol_opt : 1e-7 * diameter(P);

    double t0 = now_seconds();
    SandwichCertificate cert = sandwich(P);
    SandwichReport vr = verify_sandwich(P, cert, tol);
    double t1 = now_seconds();
    rep.check("lower containment L_a in T(body)", vr.lower_violation <= tol, tol - vr.lower_violation,
              t1 - t0);
    rep.check("upper containment T(body) in U_a", vr.upper_violation <= tol, tol - vr.upper_violation,
              0.0);
    rep.check("12-gon step", vr.twelve_gon_violation <= tol, tol - vr.twelve_gon_violation, 0.0);
    if (cert.a < 0.5)
        rep.check("C-point cuts", vr.c_cut_violation <= tol, tol - vr.c_cut_violation, 0.0);
    if (exact && body.exact()) {
        double t2 = now_seconds();
        auto er = verify_sandwich_exact(std::get<PolygonQ>(body.poly), cert);
        rep.check("exact re-verification (rationalized T)", er.pass(), 0.0, now_seconds() - t2);
        rep.extra["exact_violations"] = {{"lower", to_string(er.lower_violation)},
                                         {"upper", to_string(er.upper_violation)}};
    }
    rep.extra["certificate"] = to_json(cert);
    emit(rep.to_json(), out);
    return rep.pass() ? 0 : 1;
}

int cmd_cover(const std::string& a_str, const std::string& b_str, bool oracle, bool exact,
              const std::string& out) {
    RunReport rep("cover");
    Rational aq = parse_rational(a_str), bq = parse_rational(b_str);
    Rational half(1, 2);
    double t0 = now_seconds();
    bool contained = true;
    if (exact) {
        try {
            auto cert = bq < half ? cover_small_b(aq, bq) : cover_big_b(aq, bq);
            rep.extra["certificate"] = to_json(cert);
        } catch (const VerificationFailure&) {
            contained = false;
        }
    } else {
        double a = to_double(aq), b = to_double(bq);
        try {
            auto cert = b < 0.5 ? cover_small_b(a, b) : cover_big_b(a, b);
            rep.extra["certificate"] = to_json(cert);
        } catch (const VerificationFailure&) {
            contained = false;
        }
    }
    rep.check("covering containment", contained, 0.0, now_seconds() - t0);
    if (oracle && bq < half && aq < half) {
        double a = to_double(aq), b = to_double(bq);
        double t1 = now_seconds();
        auto [lam, c] = min_cover_ratio(make_lower(a), make_upper(b), CenterConstraint::YAxis);
        double formula = lambda_half(a, b);
        rep.extra["oracle"] = {{"min_cover_ratio", lam}, {"formula", formula},
                               {"center_y", c.y}};
        rep.check("oracle agreement |oracle - formula| <= 1e-6", std::abs(lam - formula) <= 1e-6,
                  1e-6 - std::abs(lam - formula), now_seconds() - t1);
    }
    emit(rep.to_json(), out);
    return rep.pass() ? 0 : 1;
}

int cmd_bm(const std::string& in_a, const std::string& in_b, int starts, std::uint64_t seed,
           const std::string& out) {
    RunReport rep("bm");
    rep.add_input(in_a);
    rep.add_input(in_b);
    PolygonD A = parse_body_file(in_a).as_double();
    PolygonD B = parse_body_file(in_b).as_double();
    EstimatorConfig cfg;
    cfg.starts = starts;
    cfg.seed = seed;
    double t0 = now_seconds();
    EstimateResult r = bm_estimate(A, B, cfg);
    double dt = now_seconds() - t0;
    rep.check("witness inner containment", r.inner_violation <= 1e-7, 1e-7 - r.inner_violation, dt);
    rep.check("witness outer containment", r.outer_violation <= 1e-7, 1e-7 - r.outer_violation, 0.0);
    rep.extra["bound"] = r.bound;
    rep.extra["witness_T"] = to_json(r.witness);
    rep.extra["outer_homothety"] = to_json(r.outer);
    rep.extra["swapped"] = r.swapped;
    rep.extra["per_start_values"] = r.per_start;
    emit(rep.to_json(), out);
    return rep.pass() ? 0 : 1;
}

int cmd_diameter_cert(const std::string& in_a, const std::string& in_b, const std::string& out) {
    RunReport rep("diameter-cert");
    rep.add_input(in_a);
    rep.add_input(in_b);
    PolygonD A = parse_body_file(in_a).as_double();
    PolygonD B = parse_body_file(in_b).as_double();
    double tol = 1e-7 * std::max(diameter(A), diameter(B));
    double t0 = now_seconds();
    DistanceCertificate cert = diameter_bound(A, B);
    double dt = now_seconds() - t0;
    double cap = diameter_constant() + 1e-9;
    rep.check("chain containments verified", cert.worst_violation <= tol,
              tol - cert.worst_violation, dt);
    rep.check("bound <= (19-sqrt(73))/4 + 1e-9", cert.bound <= cap, cap - cert.bound, 0.0);
    rep.extra["certificate"] = to_json(cert);
    emit(rep.to_json(), out);
    return rep.pass() ? 0 : 1;
}

int cmd_radius_cert(const std::string& in_b, const std::string& out) {
    RunReport rep("radius-cert");
    rep.add_input(in_b);
    PolygonD B = parse_body_file(in_b).as_double();
    double tol = 1e-7 * std::max(diameter(B), 8.0);
    double t0 = now_seconds();
    DistanceCertificate cert = radius_bound(B);
    double dt = now_seconds() - t0;
    double cap = to_double(radius_constant_exact()) + 1e-9;
    rep.check("chain containments verified", cert.worst_violation <= tol,
              tol - cert.worst_violation, dt);
    rep.check("bound <= 117/70 + 1e-9", cert.bound <= cap, cap - cert.bound, 0.0);
    rep.extra["certificate"] = to_json(cert);
    emit(rep.to_json(), out);
    return rep.pass() ? 0 : 1;
}

int cmd_verify_paper(int grid, bool exact, const std::string& out) {
    RunReport rep("verify-paper");
    PipelineConfig cfg;
    cfg.grid = grid;

    {
        double t0 = now_seconds();
        GridReport r1 = verify_theorem1_grid(cfg);
        double dt = now_seconds() - t0;
        for (const auto& c : r1.checks) rep.check("thm1: " + c.name, c.pass, c.margin, dt);
    }
    {
        double t0 = now_seconds();
        GridReport r2 = verify_theorem2_grid(cfg);
        double dt = now_seconds() - t0;
        for (const auto& c : r2.checks) rep.check("thm2: " + c.name, c.pass, c.margin, dt);
    }
    {
        // covering oracle grid, 1/16 steps on [0, 1/2)
        double t0 = now_seconds();
        double worst = 0;
        bool dominance = true;
        for (int i = 0; i < 8; ++i)
            for (int k = 0; k < 8; ++k) {
                double a = i / 16.0, b = k / 16.0;
                double formula = lambda_half(a, b);
                auto [lam, c] = min_cover_ratio(make_lower(a), make_upper(b),
                                                CenterConstraint::YAxis);
                worst = std::max(worst, std::abs(lam - formula));
                auto [lam_free, cf] = min_cover_ratio(make_lower(a), make_upper(b));
                if (lam_free > formula + 1e-9) dominance = false;
            }
        double dt = now_seconds() - t0;
        rep.check("cover oracle: |min_cover_ratio - lambda_half| <= 1e-6 on 1/16 grid",
                  worst <= 1e-6, 1e-6 - worst, dt);
        rep.check("cover oracle: free-center ratio <= formula + 1e-9", dominance, 0.0, 0.0);
    }
    {
        // sandwich regressions
        double t0 = now_seconds();
        PolygonD hex = make_lower(1.0);
        auto ch = sandwich(hex);
        rep.check("sandwich: hexagon a = 1 +- 1e-6", std::abs(ch.a - 1.0) <= 1e-6,
                  1e-6 - std::abs(ch.a - 1.0), now_seconds() - t0);

        t0 = now_seconds();
        std::vector<PointD> tv = {{0, 0}, {3, 0}, {0, 3}};
        PolygonD tri = convex_hull(std::move(tv));
        auto ct = sandwich(tri);
        rep.check("sandwich: triangle a <= 1e-6", ct.a <= 1e-6, 1e-6 - ct.a, now_seconds() - t0);

        t0 = now_seconds();
        PolygonD disk = regular_ngon(256);
        auto cd = sandwich(disk);
        double target = std::sqrt(3.0) - 1.0;
        rep.check("sandwich: 256-gon |a - (sqrt(3)-1)| <= 1e-3",
                  std::abs(cd.a - target) <= 1e-3, 1e-3 - std::abs(cd.a - target),
                  now_seconds() - t0);
        for (auto* pr : {&ch, &ct, &cd}) {
            const PolygonD& body = pr == &ch ? hex : (pr == &ct ? tri : disk);
            auto vr = verify_sandwich(body, *pr, 1e-7 * diameter(body));
            rep.check("sandwich: certificate re-verifies (a=" + std::to_string(pr->a) + ")",
                      vr.pass, 0.0, 0.0);
        }
        if (exact) {
            auto eh = verify_sandwich_exact(to_rational(hex), ch);
            auto et = verify_sandwich_exact(to_rational(tri), ct);
            rep.check("sandwich: hexagon exact re-verification, zero violation", eh.pass(), 0.0,
                      0.0);
            rep.check("sandwich: triangle exact re-verification, zero violation", et.pass(), 0.0,
                      0.0);
        }
    }
    {
        // estimator regressions
        double t0 = now_seconds();
        auto e1 = bm_estimate(unit_square(), regular_ngon(6));
        rep.check("estimator: d(square, hexagon) in [1.5, 1.52]",
                  e1.bound >= 1.5 && e1.bound <= 1.52, 1.52 - e1.bound, now_seconds() - t0);
        t0 = now_seconds();
        auto e2 = bm_estimate(regular_ngon(5), regular_ngon(3));
        rep.check("estimator: d(pentagon, triangle) in [2.1180, 2.14]",
                  e2.bound >= 2.1180 && e2.bound <= 2.14, 2.14 - e2.bound, now_seconds() - t0);
    }
    emit(rep.to_json(), out);
    return rep.pass() ? 0 : 1;
}

int cmd_render(const std::string& in, const std::string& a_str, const std::string& style,
               const std::string& out) {
    std::vector<SvgItem> items;
    const std::string dotted = "fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"2,3\"";
    const std::string dashed = "fill=\"none\" stroke=\"#cc3333\" stroke-dasharray=\"8,4\"";
    const std::string solid = "fill=\"none\" stroke=\"#000000\"";
    const std::string thin = "fill=\"none\" stroke=\"#3366cc\" stroke-width=\"0.8\"";
    const std::string dot = "fill=\"#3366cc\"";
    const std::string text = "font-family=\"monospace\" font-size=\"12\"";

    if (in.empty()) {
        double a = to_double(parse_rational(a_str));
        items.push_back({make_upper(a), dotted});
        items.push_back({make_lower(a), solid});
    } else {
        PolygonD body = parse_body_file(in).as_double();
        SandwichCertificate cert = sandwich(body);
        if (style == "frame") {
            items.push_back({body, solid});
            std::vector<PointD> hv(cert.hex.v.begin(), cert.hex.v.end());
            items.push_back({convex_hull(std::move(hv)), thin});
            for (std::size_t i = 0; i < 6; ++i) {
                items.push_back({cert.frame.U[i], dot});
                items.push_back({SvgLabel{cert.frame.U[i], "U" + std::to_string(i + 1)}, text});
                items.push_back({cert.frame.W[i], dot});
                items.push_back({SvgLabel{cert.frame.W[i], "W" + std::to_string(i + 1)}, text});
                items.push_back({SvgLabel{cert.frame.V[i], "V" + std::to_string(i + 1)}, text});
            }
        } else {
            items.push_back({cert.upper, dotted});
            items.push_back({apply_map(cert.T, body), dashed});
            items.push_back({cert.lower, solid});
        }
    }
    std::string svg = render_svg(items);
    if (out.empty())
        std::cout << svg;
    else
        write_file(out, svg);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar convex-geometry toolkit: hexagon sandwiches, covering homotheties, "
                 "and verified Banach-Mazur distance bounds"};
    app.require_subcommand(1);

    std::string in, in_b, out, a_str = "0", b_str = "0", style = "sandwich";
    bool exact = false, oracle = false;
    double tol = 0;
    int grid = 64, starts = 64;
    std::uint64_t seed = 0x42;

    auto* sw = app.add_subcommand("sandwich", "Sandwich certificate L_a in T(body) in U_a");
    sw->add_option("--in", in, "body JSON")->required();
    sw->add_option("--out", out, "output JSON path (default: stdout)");
    sw->add_flag("--exact", exact, "exact re-verification for rational bodies");
    sw->add_option("--tol", tol, "verification tolerance (default 1e-7 x diameter)");

    auto* cv = app.add_subcommand("cover", "Covering homothety certificate for (L_a, U_b)");
    cv->add_option("--a", a_str, "parameter a as p/q")->required();
    cv->add_option("--b", b_str, "parameter b as p/q")->required();
    cv->add_flag("--oracle", oracle, "compare against the bisection oracle");
    cv->add_flag("--exact", exact, "exact rational certificate");
    cv->add_option("--out", out, "output JSON path");

    auto* bm = app.add_subcommand("bm", "Numeric Banach-Mazur distance upper bound");
    bm->add_option("A", in, "body A JSON")->required();
    bm->add_option("B", in_b, "body B JSON")->required();
    bm->add_option("--starts", starts, "multistart count");
    bm->add_option("--seed", seed, "random seed");
    bm->add_option("--out", out, "output JSON path");

    auto* dc = app.add_subcommand("diameter-cert", "Verified diameter-route distance bound");
    dc->add_option("A", in, "body A JSON")->required();
    dc->add_option("B", in_b, "body B JSON")->required();
    dc->add_option("--out", out, "output JSON path");

    auto* rc = app.add_subcommand("radius-cert", "Verified radius-route distance bound");
    rc->add_option("B", in, "body JSON")->required();
    rc->add_option("--out", out, "output JSON path");

    auto* vp = app.add_subcommand("verify-paper", "Run the full verification suite");
    vp->add_option("--grid", grid, "rational grid resolution");
    vp->add_flag("--exact", exact, "include exact re-verification records");
    vp->add_option("--out", out, "output JSON path");

    auto* rd = app.add_subcommand("render", "Deterministic SVG figures");
    rd->add_option("--in", in, "body JSON (figure of its sandwich)");
    rd->add_option("--a", a_str, "family parameter for the L_a/U_a figure (no --in)");
    rd->add_option("--style", style, "sandwich | frame")
        ->check(CLI::IsMember({"sandwich", "frame"}));
    rd->add_option("--out", out, "output SVG path (default: stdout)");

    try {
        app.parse(argc, argv);
        if (sw->parsed()) return cmd_sandwich(in, out, exact, tol);
        if (cv->parsed()) return cmd_cover(a_str, b_str, oracle, exact, out);
        if (bm->parsed()) return cmd_bm(in, in_b, starts, seed, out);
        if (dc->parsed()) return cmd_diameter_cert(in, in_b, out);
        if (rc->parsed()) return cmd_radius_cert(in, out);
        if (vp->parsed()) return cmd_verify_paper(grid, exact, out);
        if (rd->parsed()) return cmd_render(in, a_str, style, out);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;  // help exits 0, usage errors exit 2
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    }
}
