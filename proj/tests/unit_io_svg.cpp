#include <doctest.h>

#include "bm2d/bm2d.hpp"

using namespace bm2d;
using nlohmann::json;

namespace {

const std::string kDotted = "fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"2,3\"";
const std::string kSolid = "fill=\"none\" stroke=\"#000000\"";
const std::string kThin = "fill=\"none\" stroke=\"#3366cc\" stroke-width=\"0.8\"";
const std::string kDot = "fill=\"#3366cc\"";
const std::string kText = "font-family=\"monospace\" font-size=\"12\"";

std::string golden_path(const std::string& name) {
    return std::string(BM2D_TEST_DIR) + "/golden/" + name;
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("parse the exact heptagon example") {
    json j = json::parse(R"({"vertices":[[0,"2/5"],[1,1],[2,2],[1,3],[-1,3],[-2,2],[-1,1]]})");
    Body b = parse_body_json(j);
    REQUIRE(b.exact());
    const PolygonQ& P = std::get<PolygonQ>(b.poly);
    CHECK(P.size() == 7);
    PolygonQ L = make_lower(Rational(1, 4));
    REQUIRE(L.size() == 7);
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(P[i].x == L[i].x);
        CHECK(P[i].y == L[i].y);
    }
}

TEST_CASE("parse numeric bodies in float mode") {
    json j = json::parse(R"({"vertices":[[0,0],[1,0],[1,1],[0,1]]})");
    Body b = parse_body_json(j);
    CHECK(!b.exact());
    CHECK(b.as_double().size() == 4);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_body_json(json::parse(R"({"points":[[0,0]]})")), ParseError);
    CHECK_THROWS_AS(parse_body_json(json::parse(R"({"vertices":[[0,0],[1]]})")), ParseError);
    CHECK_THROWS_AS(parse_body_json(json::parse(R"({"vertices":[[0,0],[1,true]]})")), ParseError);
    // two points: valid JSON, degenerate geometry
    CHECK_THROWS_AS(parse_body_json(json::parse(R"({"vertices":[[0,0],[1,0]]})")),
                    DegenerateInput);
    CHECK_THROWS_AS(parse_body_file("/nonexistent/body.json"), ParseError);
}

TEST_CASE("exact round trip through JSON") {
    PolygonQ P = make_upper(Rational(3, 8));
    Body b = parse_body_json(to_json(P));
    REQUIRE(b.exact());
    const PolygonQ& Q = std::get<PolygonQ>(b.poly);
    REQUIRE(Q.size() == P.size());
    for (std::size_t i = 0; i < P.size(); ++i) {
        CHECK(Q[i].x == P[i].x);
        CHECK(Q[i].y == P[i].y);
    }
}

TEST_CASE("certificate JSON carries the full chain") {
    std::vector<PointD> tv = {{0, 0}, {3, 0}, {0, 3}};
    PolygonD tri = convex_hull(std::move(tv));
    DistanceCertificate cert = radius_bound(tri);
    json j = to_json(cert);
    CHECK(j["bound"].get<double>() == doctest::Approx(5.0 / 3.0));
    CHECK(j["chain"].size() == cert.chain.size());
    for (const auto& link : j["chain"]) CHECK(link["violation"].get<double>() <= 1e-6);
}

TEST_CASE("digest is deterministic") {
    CHECK(fnv1a("") == 14695981039346656037ull);
    CHECK(fnv1a("bm2d") == fnv1a("bm2d"));
    CHECK(fnv1a("bm2d") != fnv1a("bm2e"));
}

TEST_CASE("empty SVG scene is a valid canvas") {
    std::string svg = render_svg({});
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg == render_svg({}));  // byte-identical
}

TEST_CASE("SVG output is deterministic and stays on canvas") {
    std::vector<SvgItem> items;
    items.push_back({make_upper(0.5), kDotted});
    items.push_back({make_lower(0.5), kSolid});
    std::string a = render_svg(items);
    std::string b = render_svg(items);
    CHECK(a == b);
    // all emitted coordinates are inside the canvas
    std::size_t pos = 0;
    while ((pos = a.find("points=\"", pos)) != std::string::npos) {
        pos += 8;
        std::size_t end = a.find('"', pos);
        std::string coords = a.substr(pos, end - pos);
        double v = 0;
        const char* s = coords.c_str();
        char* e = nullptr;
        while (*s) {
            v = std::strtod(s, &e);
            if (e == s) { ++s; continue; }
            CHECK(v >= -1e-6);
            CHECK(v <= 640.0 + 1e-6);
            s = e;
        }
        pos = end;
    }
}

TEST_CASE("golden SVG: L_1/2 and U_1/2 families figure") {
    std::vector<SvgItem> items;
    items.push_back({make_upper(0.5), kDotted});
    items.push_back({make_lower(0.5), kSolid});
    CHECK(render_svg(items) == read_file(golden_path("families_half.svg")));
}

TEST_CASE("golden SVG: triangle hexagon-frame figure") {
    std::vector<PointD> tv = {{0, 0}, {3, 0}, {0, 3}};
    PolygonD tri = convex_hull(std::move(tv));
    SandwichCertificate cert = sandwich(tri);
    std::vector<SvgItem> items;
    items.push_back({tri, kSolid});
    std::vector<PointD> hv(cert.hex.v.begin(), cert.hex.v.end());
    items.push_back({convex_hull(std::move(hv)), kThin});
    for (std::size_t i = 0; i < 6; ++i) {
        items.push_back({cert.frame.U[i], kDot});
        items.push_back({SvgLabel{cert.frame.U[i], "U" + std::to_string(i + 1)}, kText});
        items.push_back({cert.frame.W[i], kDot});
        items.push_back({SvgLabel{cert.frame.W[i], "W" + std::to_string(i + 1)}, kText});
        items.push_back({SvgLabel{cert.frame.V[i], "V" + std::to_string(i + 1)}, kText});
    }
    CHECK(render_svg(items) == read_file(golden_path("triangle_frame.svg")));
}

} // TEST_SUITE
