#pragma once

#include <random>
#include <string>

#include "nfp/geometry.hpp"

namespace nfp {

// Inclusive bound on a feature count; max < 0 means unbounded above.
struct CountBound {
    int min = 0;
    int max = 0;

    bool contains(int n) const { return n >= min && (max < 0 || n <= max); }
};

struct FixtureExpectation {
    CountBound outer;
    CountBound holes;
    CountBound slides;
    CountBound fits;
};

// A stationary/orbital pair with known NFP structure. The cases cover
// an enclosed pocket (one hole), a row of five pockets, a pocket whose
// width exactly matches the orbital (sliding fit), a cavity that fits
// the orbital exactly (single placement), and pockets of mixed sizes.
struct FixtureCase {
    std::string name;
    Piece stationary;
    Piece orbital;
    FixtureExpectation expected;
};

std::vector<FixtureCase> builtin_fixtures();

// Random convex polygon around the origin: convex hull of uniform
// points in a disc of the given radius. At least a triangle.
Piece random_convex_piece(std::mt19937_64& rng, int max_vertices, double radius);

// Random star-shaped polygon around the origin: jittered evenly spaced
// angles with radii in [r_min, r_max]. Simple by construction.
Piece random_star_piece(std::mt19937_64& rng, int vertices, double r_min, double r_max);

}  // namespace nfp
