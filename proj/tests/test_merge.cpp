#include <random>

#include "doctest.h"
#include "nfp/decompose.hpp"
#include "nfp/extract.hpp"
#include "nfp/fixtures.hpp"
#include "nfp/merge.hpp"

using namespace nfp;

namespace {
constexpr double kEps = 1e-9;

NfpComponent square_at(Point lo, double side) {
    return {Contour{{lo, lo + Point{side, 0}, lo + Point{side, side}, lo + Point{0, side}}},
            -1, -1};
}

bool has_vertex(const NfpComponent& c, Point p) {
    for (const Point& q : c.contour.pts) {
        if (points_equal(p, q, 1e-9)) return true;
    }
    return false;
}
}  // namespace

TEST_SUITE("merge") {

TEST_CASE("disjoint components gain no intersection vertices") {
    auto comps = compute_intersections({square_at({0, 0}, 1), square_at({5, 5}, 1)}, kEps);
    CHECK(comps[0].contour.size() == 4);
    CHECK(comps[1].contour.size() == 4);
}

TEST_CASE("offset squares gain crossing vertices") {
    auto comps = compute_intersections({square_at({0, 0}, 1), square_at({0.5, 0.5}, 1)}, kEps);
    REQUIRE(comps.size() == 2);
    for (const NfpComponent& c : comps) {
        CHECK(c.contour.size() == 6);
        CHECK(has_vertex(c, {1, 0.5}));
        CHECK(has_vertex(c, {0.5, 1}));
    }
}

TEST_CASE("collinear edge overlap inserts the interval endpoints") {
    // Shared boundary segment from (1,0.5) to (1,1).
    auto comps = compute_intersections({square_at({0, 0}, 1), square_at({1, 0.5}, 1)}, kEps);
    CHECK(has_vertex(comps[0], {1, 0.5}));
    CHECK(has_vertex(comps[0], {1, 1}));
    CHECK(has_vertex(comps[1], {1, 1}));
    CHECK(has_vertex(comps[1], {1, 1.5}));
}

TEST_CASE("midpoint insertion doubles the vertex count") {
    NfpComponent sq = insert_midpoints(square_at({0, 0}, 2));
    CHECK(sq.contour.size() == 8);
    CHECK(has_vertex(sq, {1, 0}));

    auto comps = compute_intersections({square_at({0, 0}, 1), square_at({0.5, 0.5}, 1)}, kEps);
    const std::size_t before = comps[0].contour.size();
    comps = insert_midpoints(std::move(comps));
    CHECK(comps[0].contour.size() == 2 * before);
}

TEST_CASE("graph build aggregates and dedupes") {
    const auto single = insert_midpoints({square_at({0, 0}, 2)});
    MergeGraph g1 = build_graph({single}, kEps);
    CHECK(g1.alive_vertex_count() == 8);
    CHECK(g1.alive_edge_count() == 8);

    // Two squares sharing exactly one corner vertex.
    auto touching = insert_midpoints({square_at({0, 0}, 1), square_at({1, 1}, 1)});
    MergeGraph g2 = build_graph(touching, kEps);
    int shared = -1;
    for (std::size_t v = 0; v < g2.verts.size(); ++v) {
        if (points_equal(g2.verts[v].p, {1, 1}, 1e-9)) shared = static_cast<int>(v);
    }
    REQUIRE(shared >= 0);
    CHECK(g2.verts[static_cast<std::size_t>(shared)].out.size() == 2);
    CHECK(g2.verts[static_cast<std::size_t>(shared)].in.size() == 2);

    // Identical components collapse to a single edge set.
    auto dup = insert_midpoints({square_at({0, 0}, 1), square_at({0, 0}, 1)});
    MergeGraph g3 = build_graph(dup, kEps);
    CHECK(g3.alive_vertex_count() == 8);
    CHECK(g3.alive_edge_count() == 8);
}

TEST_CASE("containment removal keeps exactly the union boundary") {
    auto comps = insert_midpoints(
        compute_intersections({square_at({0, 0}, 1), square_at({0.5, 0.5}, 1)}, kEps));
    MergeGraph g = build_graph(comps, kEps);
    remove_contained(g, comps);
    for (const MergeGraph::Vertex& v : g.verts) {
        if (!v.alive) continue;
        // Surviving vertices are never strictly inside either square.
        for (const NfpComponent& c : comps) {
            CHECK(point_in_convex(v.p, simplify_collinear(c.contour, kEps), kEps) !=
                  Containment::Inside);
        }
    }
    // The union boundary of the two offset unit squares has area 1.75.
    NfpResult r = extract_all(g);
    REQUIRE(r.outer.size() == 1);
    CHECK(signed_area(r.outer[0]) == doctest::Approx(1.75));
}

TEST_CASE("containment removal leaves disjoint components alone") {
    auto comps = insert_midpoints({square_at({0, 0}, 1), square_at({5, 5}, 1)});
    MergeGraph g = build_graph(comps, kEps);
    const std::size_t ve = g.alive_vertex_count();
    const std::size_t ee = g.alive_edge_count();
    remove_contained(g, comps);
    CHECK(g.alive_vertex_count() == ve);
    CHECK(g.alive_edge_count() == ee);
}

TEST_CASE("a fully nested component vanishes") {
    auto comps = insert_midpoints({square_at({0, 0}, 4), square_at({1, 1}, 1)});
    MergeGraph g = build_graph(comps, kEps);
    remove_contained(g, comps);
    for (const MergeGraph::Vertex& v : g.verts) {
        if (v.alive) {
            CHECK(point_in_convex(v.p, comps[1].contour, kEps) == Containment::Outside);
        }
    }
    CHECK(g.alive_vertex_count() == 8);
}

TEST_CASE("degree balance after the full pipeline") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 20; ++i) {
        const Piece a = random_star_piece(rng, 8, 0.6, 2.0);
        const Piece b = random_star_piece(rng, 6, 0.4, 1.2);
        const ConvexDecomposition da = decompose(a, 1e-9);
        const ConvexDecomposition db = decompose(b, 1e-9);
        std::vector<NfpComponent> comps;
        for (const Contour& ca : da.components) {
            for (const Contour& cb : db.components) {
                comps.push_back(convex_nfp(ca, cb, b.reference, 1e-9));
            }
        }
        const double eps = nfp_epsilon(a, b, {});
        comps = insert_midpoints(compute_intersections(std::move(comps), eps));
        MergeGraph g = build_graph(comps, eps);
        remove_contained(g, comps);
        for (const MergeGraph::Vertex& v : g.verts) {
            if (!v.alive) continue;
            int n_out = 0, n_in = 0;
            for (int e : v.out) n_out += g.edges[static_cast<std::size_t>(e)].alive ? 1 : 0;
            for (int e : v.in) n_in += g.edges[static_cast<std::size_t>(e)].alive ? 1 : 0;
            CHECK(n_out == n_in);
        }
    }
}

TEST_CASE("gen_nfp on two unit squares") {
    Piece sq;
    sq.outer.pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    sq.reference = {0, 0};
    const NfpResult r = gen_nfp(sq, sq);
    REQUIRE(r.outer.size() == 1);
    CHECK(r.holes.empty());
    CHECK(r.slides.empty());
    CHECK(r.fits.empty());
    CHECK(signed_area(r.outer[0]) == doctest::Approx(4.0));
}

}  // TEST_SUITE
