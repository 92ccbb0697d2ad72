#pragma once

#include "nfp/geometry.hpp"

namespace nfp {

enum class BoolOpKind { OR, AND, XOR, NOT };

struct BoolConfig {
    double epsilon_rel = 1e-9;
};

// Polygon boolean operations through the merge-graph machinery: the two
// pieces' contours are intersected, midpointed and merged into one
// directed graph, then an operation-specific vertex-removal or
// edge-inversion rule is applied before outline extraction. Zero-area
// circuits are discarded. The result may be empty (AND of disjoint
// pieces) or disconnected (XOR).
// For NOT, A is the piece being subtracted from, B the subtracting one.
std::vector<Piece> boolean_op(const Piece& A, const Piece& B, BoolOpKind op,
                              const BoolConfig& cfg = {});

// Region area of a piece list: outer areas minus hole areas.
double region_area(const std::vector<Piece>& pieces);

// Region membership across a piece list, boundary-aware.
Containment point_in_pieces(Point p, const std::vector<Piece>& pieces, double eps);

}  // namespace nfp
