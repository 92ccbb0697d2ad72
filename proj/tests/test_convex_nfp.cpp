#include <algorithm>
#include <random>

#include "doctest.h"
#include "nfp/convex_nfp.hpp"
#include "nfp/fixtures.hpp"

using namespace nfp;

namespace {
constexpr double kEps = 1e-9;

// Independent oracle: convex hull of all pairwise sums a + (ref - b).
Contour hull_of_sums(const Contour& stat, const Contour& orb, Point ref) {
    std::vector<Point> pts;
    for (const Point& a : stat.pts) {
        for (const Point& b : orb.pts) pts.push_back(a + (ref - b));
    }
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point& a, const Point& b) {
                              return a.x == b.x && a.y == b.y;
                          }),
              pts.end());
    if (pts.size() < 3) return Contour{pts};
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size(); i-- > 1;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i - 1] - hull[k - 2]) <= 0.0)
            --k;
        hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);
    return Contour{hull};
}

bool same_ring(const Contour& a, const Contour& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t off = 0; off < b.size(); ++off) {
        bool all = true;
        for (std::size_t i = 0; i < a.size() && all; ++i) {
            all = points_equal(a[i], b[(i + off) % b.size()], tol);
        }
        if (all) return true;
    }
    return false;
}
}  // namespace

TEST_SUITE("convex_nfp") {

TEST_CASE("unit squares give a 2x2 square") {
    const Contour sq{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
    const NfpComponent c = convex_nfp(sq, sq, {0, 0}, kEps);
    CHECK(same_ring(c.contour, Contour{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}}, 1e-9));
}

TEST_CASE("point-like orbital leaves the stationary contour") {
    const Contour tri{{{0, 0}, {2, 0}, {0, 2}}};
    const double t = 1e-12;
    const Contour tiny{{{0, 0}, {t, 0}, {0, t}}};
    const NfpComponent c = convex_nfp(tri, tiny, {0, 0}, kEps);
    CHECK(std::abs(signed_area(c.contour) - signed_area(tri)) < 1e-9);
}

TEST_CASE("random pairs match the hull-of-sums oracle") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const Piece a = random_convex_piece(rng, 8, 10.0);
        const Piece b = random_convex_piece(rng, 8, 10.0);
        const NfpComponent c = convex_nfp(a.outer, b.outer, b.reference, 1e-9);
        const Contour want = hull_of_sums(a.outer, b.outer, b.reference);
        CAPTURE(i);
        CHECK(same_ring(c.contour, want, 1e-7));
    }
}

TEST_CASE("reflection symmetry of swapped arguments") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 100; ++i) {
        const Piece a = random_convex_piece(rng, 7, 5.0);
        const Piece b = random_convex_piece(rng, 7, 5.0);
        const NfpComponent ab = convex_nfp(a.outer, b.outer, {0, 0}, 1e-9);
        const NfpComponent ba = convex_nfp(b.outer, a.outer, {0, 0}, 1e-9);
        CHECK(same_ring(ab.contour, transform(ba.contour, {0, 0}, true), 1e-7));
    }
}

TEST_CASE("output vertex count is bounded by the edge sum") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 100; ++i) {
        const Piece a = random_convex_piece(rng, 10, 20.0);
        const Piece b = random_convex_piece(rng, 10, 20.0);
        const NfpComponent c = convex_nfp(a.outer, b.outer, {0, 0}, 1e-9);
        CHECK(c.contour.size() <= a.outer.size() + b.outer.size());
        CHECK(is_convex(c.contour, 1e-6));
        CHECK(is_ccw(c.contour));
    }
}

TEST_CASE("non-convex input is rejected") {
    const Contour ell{{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}};
    const Contour sq{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
    CHECK_THROWS_AS(convex_nfp(ell, sq, {0, 0}, kEps), std::invalid_argument);
}

}  // TEST_SUITE
