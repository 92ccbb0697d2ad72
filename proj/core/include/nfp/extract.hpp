#pragma once

#include "nfp/merge.hpp"

namespace nfp {

// Complete NFP: outer boundaries, enclosed holes, zero-area sliding
// circuits and isolated perfect-fit placement points.
struct NfpResult {
    std::vector<Contour> outer;   // CCW, positive area
    std::vector<Contour> holes;   // CW as extracted
    std::vector<Contour> slides;  // zero area, 2+ vertices
    std::vector<Point> fits;
};

enum class StartKind { Outline, Hole, PerfectFit };

struct StartClassification {
    StartKind kind = StartKind::PerfectFit;
    int edge = -1;  // incoming edge for Outline, outgoing for Hole
};

// Lexicographically minimal (x, then y) live vertex.
int find_start_vertex(const MergeGraph& g);

// Compares the edges incident to V as segments emanating from V
// (incoming edges reversed), by clockwise angle from the upward
// vertical ray. An exterior CCW circuit presents its incoming edge
// first in that sweep, a CW hole circuit presents its outgoing edge
// first; antiparallel ties are perfect-sliding holes.
StartClassification classify_start(const MergeGraph& g, int v);

// Walks one circuit (forward for outlines, reverse for holes) using the
// tightest-turn continuation rule, consuming its edges. Collinear joint
// vertices are discarded from the output. Throws std::runtime_error on
// a walk with no continuation.
Contour extract_circuit(MergeGraph& g, const StartClassification& start);

// Iterates start selection and circuit extraction until the graph is
// empty; zero-area circuits are routed to slides.
NfpResult extract_all(MergeGraph& g);

// Inverse of extraction, for round-trip checks: rebuilds a merge graph
// whose edges are exactly the circuits of the result.
MergeGraph rebuild_graph(const NfpResult& r, double eps);

BoundingBox bounding_box(const NfpResult& r);

}  // namespace nfp
