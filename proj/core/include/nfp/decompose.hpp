#pragma once

#include "nfp/geometry.hpp"

namespace nfp {

struct ConvexDecomposition {
    Piece source;
    std::vector<Contour> components;  // each convex, CCW
};

struct DecompositionReport {
    bool convex_ok = false;
    bool coverage_ok = false;
    double area_delta = 0.0;
};

// Partition of the piece region into convex components. Holes are joined
// to the outer ring by bridge diagonals, the bridged ring is ear-clipped
// and triangles are merged back together while they stay convex.
// Throws std::invalid_argument on self-intersecting input.
ConvexDecomposition decompose(const Piece& p, double eps);

// Convexity sweep per component, component-area sum against the piece
// area and a Monte-Carlo membership cross-check.
DecompositionReport validate_decomposition(const ConvexDecomposition& d, double eps);

}  // namespace nfp
