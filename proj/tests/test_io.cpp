#include "doctest.h"
#include "nfp/io.hpp"
#include "nfp/merge.hpp"

using namespace nfp;

TEST_SUITE("io") {

TEST_CASE("unit square document parses") {
    const auto doc = parse_piece(R"({"name":"sq","outer":[[0,0],[1,0],[1,1],[0,1]]})");
    CHECK(doc.name == "sq");
    REQUIRE(doc.piece.outer.size() == 4);
    CHECK(is_ccw(doc.piece.outer));
    CHECK(points_equal(doc.piece.reference, {0, 0}, 1e-12));
}

TEST_CASE("clockwise outer ring is normalized with a warning") {
    std::vector<std::string> warnings;
    const auto doc =
        parse_piece(R"({"outer":[[0,0],[0,1],[1,1],[1,0]]})", &warnings);
    CHECK(is_ccw(doc.piece.outer));
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("outer") != std::string::npos);
}

TEST_CASE("invalid documents are rejected with located errors") {
    CHECK_THROWS_AS(parse_piece("not json"), std::runtime_error);
    CHECK_THROWS_AS(parse_piece(R"({"outer":[[0,0],[1,0]]})"), std::runtime_error);
    // Self-intersecting bow tie.
    CHECK_THROWS_AS(parse_piece(R"({"outer":[[0,0],[1,1],[1,0],[0,1]]})"), std::runtime_error);
    // Hole crossing the outer ring.
    CHECK_THROWS_AS(
        parse_piece(
            R"({"outer":[[0,0],[4,0],[4,4],[0,4]],"holes":[[[3,1],[6,1],[6,2],[3,2]]]})"),
        std::runtime_error);
}

TEST_CASE("piece round trip is value stable") {
    const std::string text =
        R"({"name":"ring","outer":[[0,0],[4,0],[4,4],[0,4]],"holes":[[[1,1],[1,3],[3,3],[3,1]]],"reference_point":[0.125,0.25]})";
    const auto doc = parse_piece(text);
    const std::string once = serialize_piece(doc);
    const std::string twice = serialize_piece(parse_piece(once));
    CHECK(once == twice);
}

TEST_CASE("nfp document round trip") {
    NfpDocument doc;
    doc.stationary = "a";
    doc.orbital = "b";
    doc.epsilon = 1.5e-9;
    doc.result.outer.push_back(Contour{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}});
    doc.result.holes.push_back(Contour{{{0.25, 0.25}, {0.5, 0.25}, {0.5, 0.5}}});
    doc.result.slides.push_back(Contour{{{2, 0}, {2, 1}}});
    doc.result.fits.push_back({3, 3});
    const std::string text = serialize_nfp(doc);
    const NfpDocument back = parse_nfp(text);
    CHECK(serialize_nfp(back) == text);
    CHECK(back.result.fits.size() == 1);
    CHECK(back.epsilon == doctest::Approx(1.5e-9));
}

TEST_CASE("svg rendering carries the expected structure") {
    NfpResult r;
    r.outer.push_back(Contour{{{0, 0}, {2, 0}, {2, 2}, {0, 2}}});
    const std::string convex_svg = render_svg(r);
    CHECK(convex_svg.find("evenodd") != std::string::npos);
    CHECK(convex_svg.find("<circle") == std::string::npos);

    r.fits.push_back({1, 1});
    r.slides.push_back(Contour{{{3, 0}, {3, 1}}});
    const std::string full_svg = render_svg(r);
    CHECK(full_svg.find("<circle") != std::string::npos);
    CHECK(full_svg.find("stroke-dasharray") != std::string::npos);

    const std::string empty_svg = render_svg(NfpResult{});
    CHECK(empty_svg.find("<svg") != std::string::npos);
    CHECK(empty_svg.find("</svg>") != std::string::npos);
}

TEST_CASE("serialization is deterministic") {
    Piece sq;
    sq.outer.pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    sq.reference = {0, 0};
    NfpDocument doc;
    doc.result = gen_nfp(sq, sq);
    doc.epsilon = nfp_epsilon(sq, sq, {});
    CHECK(serialize_nfp(doc) == serialize_nfp(doc));
    CHECK(render_svg(doc.result) == render_svg(doc.result));
}

}  // TEST_SUITE
