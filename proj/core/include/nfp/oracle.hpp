#pragma once

#include "nfp/decompose.hpp"
#include "nfp/extract.hpp"
#include "nfp/geometry.hpp"

namespace nfp {

struct OracleDisagreement {
    Point placement;
    bool oracle_overlap = false;  // intersection area above delta
    bool nfp_overlap = false;     // placement strictly inside the NFP region
};

struct OracleReport {
    int samples = 0;
    int agreements = 0;
    std::vector<OracleDisagreement> disagreements;
    double max_boundary_error = 0.0;

    bool ok() const { return disagreements.empty(); }
};

// Exact overlap area of A and B translated by t, via pairwise
// convex-convex clipping over the two decompositions. Deliberately
// independent of the merge pipeline.
double intersection_area(const Piece& A, const Piece& B, Point t, double eps);
double intersection_area(const ConvexDecomposition& da, const ConvexDecomposition& db,
                         Point t, double eps);

// Area of the intersection of two convex CCW contours
// (Sutherland-Hodgman clip).
double convex_clip_area(const Contour& subject, const Contour& clip);

// Membership of a placement in the NFP region (inside outer contours,
// outside holes), boundary band aware.
Containment nfp_membership(const NfpResult& nfp, Point t, double band);

// Grid comparison of gen_nfp output against direct intersection areas
// over the NFP bounding box inflated by 10%. Placements within the
// 2-epsilon contact band are checked for near-zero overlap instead;
// sub-delta overlaps within one grid cell of the boundary join the
// band as well, since the overlap area vanishes continuously there.
OracleReport verify_nfp(const Piece& A, const Piece& B, const NfpResult& nfp,
                        int grid_n, double eps);

struct RegionComponents {
    int exterior = 0;  // feasible components touching the grid border
    int interior = 0;  // enclosed feasible components (NFP holes)
};

// Flood fill of the feasible region (overlap area below delta) on the
// placement grid; counts connected components.
RegionComponents feasible_components(const Piece& A, const Piece& B, int grid_n, double eps);

}  // namespace nfp
