#include <doctest.h>

#include "bm2d/bm2d.hpp"

using namespace bm2d;

TEST_SUITE("geometry") {

TEST_CASE("convex hull merges collinear chains: L_1 seven points become a hexagon") {
    // the apex (0, 2a/(1+a)) at a=1 is (0,1), collinear with (+-1, 1)
    PolygonQ L1 = make_lower(Rational(1));
    CHECK(L1.size() == 6);
    for (const auto& v : L1.vertices()) CHECK(v != PointQ{Rational(0), Rational(1)});
}

TEST_CASE("hull canonicalization: CCW, lexicographic minimum first, idempotent") {
    std::vector<PointD> pts = {{2, 0}, {0, 0}, {1, 2}, {1, 1}, {0, 0}};  // duplicate + interior
    PolygonD P = convex_hull(std::move(pts));
    CHECK(P.size() == 3);
    CHECK(P[0].x == 0.0);
    CHECK(P[0].y == 0.0);
    CHECK(P.signed_area2() > 0);
    std::vector<PointD> again(P.vertices().begin(), P.vertices().end());
    PolygonD P2 = convex_hull(std::move(again));
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(P[i].x == P2[i].x);
        CHECK(P[i].y == P2[i].y);
    }
}

TEST_CASE("degenerate hulls throw") {
    std::vector<PointD> two = {{0, 0}, {1, 0}};
    CHECK_THROWS_AS(convex_hull(std::move(two)), DegenerateInput);
    std::vector<PointD> line = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    CHECK_THROWS_AS(convex_hull(std::move(line)), DegenerateInput);
    std::vector<PointD> dup = {{1, 2}, {1, 2}, {1, 2}};
    CHECK_THROWS_AS(convex_hull(std::move(dup)), DegenerateInput);
}

TEST_CASE("halfplane round trip: every vertex satisfies every halfplane") {
    PolygonQ P = make_upper(Rational(1, 4));
    auto hp = to_halfplanes(P);
    CHECK(hp.size() == P.size());
    for (const auto& h : hp)
        for (const auto& v : P.vertices()) CHECK(h.violation(v) <= Rational(0));
}

TEST_CASE("hull commutes with orientation-preserving affine maps") {
    std::vector<PointD> pts = {{0, 0}, {4, 1}, {3, 5}, {1, 4}, {2, 2}};
    PolygonD P = convex_hull(std::vector<PointD>(pts));
    AffineMapD T{2, 1, -0.5, 1.5, {3, -2}};
    PolygonD TP = apply_map(T, P);
    std::vector<PointD> mapped;
    for (const auto& p : pts) mapped.push_back(T(p));
    PolygonD hull_mapped = convex_hull(std::move(mapped));
    REQUIRE(TP.size() == hull_mapped.size());
    for (std::size_t i = 0; i < TP.size(); ++i) {
        CHECK(TP[i].x == doctest::Approx(hull_mapped[i].x).epsilon(1e-12));
        CHECK(TP[i].y == doctest::Approx(hull_mapped[i].y).epsilon(1e-12));
    }
}

TEST_CASE("boundary_point walks the perimeter") {
    PolygonD S = unit_square();  // [-1,1]^2, perimeter 8, starts at (-1,-1)
    PointD p0 = boundary_point(S, 0.0);
    CHECK(p0.x == doctest::Approx(-1.0));
    CHECK(p0.y == doctest::Approx(-1.0));
    PointD q = boundary_point(S, 0.25);  // two edge-lengths along: (1,-1) -> up
    CHECK(q.x == doctest::Approx(1.0));
    CHECK(q.y == doctest::Approx(-1.0));
    PointD h = boundary_point(S, 1.125);  // wraps: one unit along the bottom edge
    CHECK(h.x == doctest::Approx(0.0));
    CHECK(h.y == doctest::Approx(-1.0));
}

TEST_CASE("ray_boundary_intersection is exact for rationals") {
    PolygonQ S = to_rational(unit_square());
    PointQ hit = ray_boundary_intersection(S, PointQ{Rational(0), Rational(0)},
                                           PointQ{Rational(1), Rational(2)});
    CHECK(hit.x == Rational(1, 2));
    CHECK(hit.y == Rational(1));
    CHECK_THROWS_AS(ray_boundary_intersection(S, PointQ{Rational(5), Rational(0)},
                                              PointQ{Rational(1), Rational(0)}),
                    OriginNotInterior);
    CHECK_THROWS_AS(ray_boundary_intersection(S, PointQ{Rational(0), Rational(0)},
                                              PointQ{Rational(0), Rational(0)}),
                    DomainError);
}

TEST_CASE("rational parsing and formatting round trip") {
    CHECK(parse_rational("2/5") == Rational(2, 5));
    CHECK(parse_rational("-7/3") == Rational(-7, 3));
    CHECK(parse_rational("4") == Rational(4));
    CHECK(to_string(Rational(117, 70)) == "117/70");
    CHECK(parse_rational(to_string(Rational(-22, 7))) == Rational(-22, 7));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("rational_from_double: continued-fraction rounding") {
    CHECK(rational_from_double(0.5) == Rational(1, 2));
    CHECK(rational_from_double(to_double(Rational(1, 3))) == Rational(1, 3));
    CHECK(rational_from_double(-2.25) == Rational(-9, 4));
    CHECK(to_double(rational_from_double(0.1234567)) == doctest::Approx(0.1234567).epsilon(1e-9));
}

TEST_CASE("containment predicates and violation sign convention") {
    PolygonD outer = unit_square();
    std::vector<PointD> iv = {{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}};
    PolygonD inner = convex_hull(std::move(iv));
    CHECK(contains_polygon(outer, inner));
    CHECK(containment_violation(outer, inner) == doctest::Approx(-0.5));
    CHECK(containment_violation(inner, outer) == doctest::Approx(0.5));
    CHECK(contains_point(outer, PointD{1, 1}));           // boundary counts
    CHECK(!contains_point(outer, PointD{1, 1}, true));    // strict excludes it
    CHECK(!contains_point(outer, PointD{1.1, 0}));
}

TEST_CASE("affine maps: inverse, composition, singularity") {
    AffineMapD T{2, 1, 0, 3, {5, -1}};
    AffineMapD I = T.compose(T.inverse());
    CHECK(I.a == doctest::Approx(1));
    CHECK(I.b == doctest::Approx(0));
    CHECK(I.c == doctest::Approx(0));
    CHECK(I.d == doctest::Approx(1));
    CHECK(I.shift.x == doctest::Approx(0));
    CHECK(I.shift.y == doctest::Approx(0));
    AffineMapD S{1, 2, 2, 4, {0, 0}};
    CHECK_THROWS_AS((void)S.inverse(), SingularMap);

    AffineMap<Rational> TQ{Rational(1), Rational(1), Rational(1), Rational(1), {}};
    CHECK_THROWS_AS((void)TQ.inverse(), SingularMap);
}

TEST_CASE("affine_from_points reproduces the correspondences") {
    std::array<PointD, 3> src = {PointD{0, 0}, PointD{1, 0}, PointD{0, 1}};
    std::array<PointD, 3> dst = {PointD{2, 3}, PointD{4, 3}, PointD{2, 7}};
    AffineMapD T = affine_from_points(src, dst);
    for (int i = 0; i < 3; ++i) {
        CHECK(T(src[i]).x == doctest::Approx(dst[i].x));
        CHECK(T(src[i]).y == doctest::Approx(dst[i].y));
    }
    std::array<PointD, 3> degenerate = {PointD{0, 0}, PointD{1, 1}, PointD{2, 2}};
    CHECK_THROWS_AS(affine_from_points(degenerate, dst), SingularMap);
}

TEST_CASE("homothety as an affine map") {
    HomothetyD h{{0, 2}, 1.5};
    AffineMapD T = h.to_affine();
    PointD p{2, 2};
    CHECK(T(p).x == doctest::Approx(3.0));
    CHECK(T(p).y == doctest::Approx(2.0));
    CHECK(h(p).x == doctest::Approx(3.0));
    // center is a fixed point
    CHECK(h(PointD{0, 2}).x == doctest::Approx(0.0));
    CHECK(h(PointD{0, 2}).y == doctest::Approx(2.0));
}

TEST_CASE("two-variable linear feasibility") {
    std::vector<LinCon> cons = {{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}};
    auto p = feasible_point_2d(cons);
    REQUIRE(p.has_value());
    CHECK(std::abs(p->x) <= 1.0);
    CHECK(std::abs(p->y) <= 1.0);
    cons.push_back({1, 0, -2});  // x <= -2 contradicts x >= -1
    CHECK(!feasible_point_2d(cons).has_value());

    std::vector<LinCon1> one = {{1, 3}, {-1, 0}};  // 0 <= t <= 3
    auto t = feasible_point_1d(one);
    REQUIRE(t.has_value());
    CHECK(*t == doctest::Approx(1.5));
    one.push_back({1, -1});
    CHECK(!feasible_point_1d(one).has_value());
}

} // TEST_SUITE
