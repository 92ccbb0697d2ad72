#pragma once

#include "nfp/geometry.hpp"

namespace nfp {

// One convex NFP piece: the Minkowski sum of a stationary convex
// component with the reflected, reference-normalized orbital component.
struct NfpComponent {
    Contour contour;        // convex, CCW
    int stationary_id = -1;
    int orbital_id = -1;
};

// Slope-diagram construction: the edges of stat and of the reflected
// orbital component are merged in ascending polar-angle order starting
// from the lowest vertex. The result lives in the stationary frame;
// placing the orbital reference point inside it means overlap.
// Throws std::invalid_argument if either input is non-convex.
NfpComponent convex_nfp(const Contour& stat, const Contour& orb, Point ref, double eps);

}  // namespace nfp
