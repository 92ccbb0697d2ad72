#include <cmath>
#include <random>

#include "doctest.h"
#include "nfp/geometry.hpp"

using namespace nfp;

namespace {
constexpr double kEps = 1e-9;

Contour unit_square_ccw() { return Contour{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}; }
}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("orient basic cases") {
    CHECK(orient({0, 0}, {1, 0}, {0, 1}, kEps) == Orient::Left);
    CHECK(orient({0, 0}, {1, 0}, {2, 0}, kEps) == Orient::Collinear);
    CHECK(orient({0, 0}, {0, 1}, {1, 1}, kEps) == Orient::Right);
}

TEST_CASE("orient antisymmetry on random triples") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    for (int i = 0; i < 500; ++i) {
        const Point p{u(rng), u(rng)}, q{u(rng), u(rng)}, r{u(rng), u(rng)};
        const Orient a = orient(p, q, r, kEps);
        const Orient b = orient(p, r, q, kEps);
        if (a == Orient::Collinear) {
            CHECK(b == Orient::Collinear);
        } else {
            CHECK(b == (a == Orient::Left ? Orient::Right : Orient::Left));
        }
    }
}

TEST_CASE("segment intersection cases") {
    auto pts = segment_intersection({{0, 0}, {2, 0}}, {{1, -1}, {1, 1}}, kEps);
    REQUIRE(pts.size() == 1);
    CHECK(points_equal(pts[0], {1, 0}, kEps));

    pts = segment_intersection({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}}, kEps);
    REQUIRE(pts.size() == 2);
    CHECK(points_equal(pts[0], {1, 0}, kEps));
    CHECK(points_equal(pts[1], {2, 0}, kEps));

    CHECK(segment_intersection({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, kEps).empty());
}

TEST_CASE("segment intersection endpoint touch") {
    auto pts = segment_intersection({{0, 0}, {1, 0}}, {{1, 0}, {1, 1}}, kEps);
    REQUIRE(pts.size() == 1);
    CHECK(points_equal(pts[0], {1, 0}, kEps));
}

TEST_CASE("segment intersection is symmetric") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 300; ++i) {
        const Segment s{{u(rng), u(rng)}, {u(rng), u(rng)}};
        const Segment t{{u(rng), u(rng)}, {u(rng), u(rng)}};
        const auto a = segment_intersection(s, t, kEps);
        const auto b = segment_intersection(t, s, kEps);
        REQUIRE(a.size() == b.size());
        for (const Point& p : a) {
            bool found = false;
            for (const Point& q : b) found = found || points_equal(p, q, 1e-7);
            CHECK(found);
        }
    }
}

TEST_CASE("point in convex") {
    const Contour sq = unit_square_ccw();
    CHECK(point_in_convex({0.5, 0.5}, sq, kEps) == Containment::Inside);
    CHECK(point_in_convex({1, 0.5}, sq, kEps) == Containment::Boundary);
    CHECK(point_in_convex({2, 2}, sq, kEps) == Containment::Outside);
}

TEST_CASE("point in convex: vertices are boundary") {
    const Contour sq = unit_square_ccw();
    for (const Point& v : sq.pts) {
        CHECK(point_in_convex(v, sq, kEps) == Containment::Boundary);
    }
}

TEST_CASE("point in convex rejects non-convex rings") {
    const Contour arrow{{{0, 0}, {2, 0}, {1, 0.5}, {2, 1}, {0, 1}}};
    CHECK_THROWS_AS(point_in_convex({0.5, 0.5}, arrow, kEps), std::invalid_argument);
}

TEST_CASE("signed area") {
    CHECK(signed_area(unit_square_ccw()) == doctest::Approx(1.0));
    CHECK(signed_area(reversed(unit_square_ccw())) == doctest::Approx(-1.0));
    CHECK(signed_area(Contour{{{0, 0}, {2, 1}}}) == doctest::Approx(0.0));
}

TEST_CASE("signed area negates under reversal") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 100; ++i) {
        Contour c;
        for (int k = 0; k < 7; ++k) c.pts.push_back({u(rng), u(rng)});
        CHECK(signed_area(reversed(c)) == doctest::Approx(-signed_area(c)));
    }
}

TEST_CASE("transform") {
    const Contour tri{{{0, 0}, {1, 0}, {0, 1}}};
    const Contour refl = transform(tri, {0, 0}, true);
    CHECK(points_equal(refl[0], {0, 0}, kEps));
    CHECK(points_equal(refl[1], {-1, 0}, kEps));
    CHECK(points_equal(refl[2], {0, -1}, kEps));

    const Contour moved = transform(unit_square_ccw(), {2, 3}, false);
    CHECK(points_equal(moved[0], {2, 3}, kEps));
    CHECK(points_equal(moved[2], {3, 4}, kEps));

    // Reflection twice with offsets composes to a pure translation.
    const Contour twice = transform(transform(tri, {1, 2}, true), {3, -1}, true);
    for (std::size_t i = 0; i < tri.size(); ++i) {
        CHECK(points_equal(twice[i], tri[i] + Point{2, -3}, kEps));
    }
}

TEST_CASE("reflection preserves orientation") {
    CHECK(is_ccw(transform(unit_square_ccw(), {0, 0}, true)));
}

TEST_CASE("points equal uses chebyshev distance") {
    CHECK(points_equal({0, 0}, {0.5e-9, -0.9e-9}, 1e-9));
    CHECK(!points_equal({0, 0}, {1.1e-9, 0}, 1e-9));
}

TEST_CASE("simple polygon check") {
    CHECK(is_simple(unit_square_ccw(), kEps));
    const Contour bow{{{0, 0}, {1, 1}, {1, 0}, {0, 1}}};
    CHECK(!is_simple(bow, kEps));
}

TEST_CASE("collinear simplification drops midpoints") {
    const Contour mid{{{0, 0}, {0.5, 0}, {1, 0}, {1, 0.5}, {1, 1}, {0.5, 1}, {0, 1}, {0, 0.5}}};
    const Contour out = simplify_collinear(mid, kEps);
    REQUIRE(out.size() == 4);
    CHECK(signed_area(out) == doctest::Approx(1.0));
}

TEST_CASE("convexity check") {
    CHECK(is_convex(unit_square_ccw(), kEps));
    const Contour ell{{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}};
    CHECK(!is_convex(ell, kEps));
}

}  // TEST_SUITE
