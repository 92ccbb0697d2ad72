#include "nfp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace nfp {
namespace {

double min_piece_area(const Piece& A, const Piece& B) {
    double aa = std::abs(signed_area(A.outer));
    for (const Contour& h : A.holes) aa -= std::abs(signed_area(h));
    double ab = std::abs(signed_area(B.outer));
    for (const Contour& h : B.holes) ab -= std::abs(signed_area(h));
    return std::min(aa, ab);
}

double boundary_distance(const NfpResult& nfp, Point t) {
    double d = std::numeric_limits<double>::infinity();
    auto ring_dist = [&](const Contour& c) {
        const std::size_t n = c.size();
        if (n == 1) { d = std::min(d, norm(t - c[0])); return; }
        for (std::size_t i = 0; i < n; ++i) {
            d = std::min(d, distance_point_segment(t, c[i], c[(i + 1) % n]));
        }
    };
    for (const Contour& c : nfp.outer) ring_dist(c);
    for (const Contour& c : nfp.holes) ring_dist(c);
    for (const Contour& c : nfp.slides) ring_dist(c);
    for (const Point& p : nfp.fits) d = std::min(d, norm(t - p));
    return d;
}

}  // namespace

double convex_clip_area(const Contour& subject, const Contour& clip) {
    std::vector<Point> poly(subject.pts);
    const std::size_t m = clip.size();
    for (std::size_t i = 0; i < m && !poly.empty(); ++i) {
        const Point a = clip[i];
        const Point b = clip[(i + 1) % m];
        const Point e = b - a;
        std::vector<Point> next;
        next.reserve(poly.size() + 2);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            const Point& p = poly[j];
            const Point& q = poly[(j + 1) % poly.size()];
            const double dp = cross(e, p - a);
            const double dq = cross(e, q - a);
            if (dp >= 0.0) next.push_back(p);
            if ((dp > 0.0 && dq < 0.0) || (dp < 0.0 && dq > 0.0)) {
                const double t = dp / (dp - dq);
                next.push_back(p + t * (q - p));
            }
        }
        poly = std::move(next);
    }
    if (poly.size() < 3) return 0.0;
    Contour c{std::move(poly)};
    return std::abs(signed_area(c));
}

double intersection_area(const ConvexDecomposition& da, const ConvexDecomposition& db,
                         Point t, double /*eps*/) {
    double total = 0.0;
    for (const Contour& ca : da.components) {
        for (const Contour& cb : db.components) {
            total += convex_clip_area(ca, transform(cb, t, false));
        }
    }
    return total;
}

double intersection_area(const Piece& A, const Piece& B, Point t, double eps) {
    const ConvexDecomposition da = decompose(A, eps);
    const ConvexDecomposition db = decompose(B, eps);
    return intersection_area(da, db, t, eps);
}

Containment nfp_membership(const NfpResult& nfp, Point t, double band) {
    if (boundary_distance(nfp, t) <= band) return Containment::Boundary;
    for (const Contour& o : nfp.outer) {
        if (point_in_ring(t, o, band) != Containment::Inside) continue;
        for (const Contour& h : nfp.holes) {
            if (point_in_ring(t, h, band) == Containment::Inside) return Containment::Outside;
        }
        return Containment::Inside;
    }
    return Containment::Outside;
}

OracleReport verify_nfp(const Piece& A, const Piece& B, const NfpResult& nfp,
                        int grid_n, double eps) {
    OracleReport rep;
    const double delta = 1e-6 * min_piece_area(A, B);
    const double band = 2.0 * eps;

    BoundingBox bb = bounding_box(nfp);
    const double inflate = 0.1;
    const double dx = std::max(bb.width(), 1e-12) * inflate;
    const double dy = std::max(bb.height(), 1e-12) * inflate;
    bb.min_x -= dx; bb.max_x += dx;
    bb.min_y -= dy; bb.max_y += dy;

    const ConvexDecomposition da = decompose(A, eps);
    const ConvexDecomposition db = decompose(B, eps);

    // One grid cell: the overlap area decays continuously to zero at the
    // NFP boundary, so a sample this close can sit below delta while
    // still being strictly inside. Such samples join the contact band.
    const double cell = std::hypot((bb.max_x - bb.min_x) / (grid_n - 1),
                                   (bb.max_y - bb.min_y) / (grid_n - 1));

    // Placements are sampled relative to B's reference point.
    for (int iy = 0; iy < grid_n; ++iy) {
        for (int ix = 0; ix < grid_n; ++ix) {
            const Point t{bb.min_x + (bb.max_x - bb.min_x) * ix / (grid_n - 1),
                          bb.min_y + (bb.max_y - bb.min_y) * iy / (grid_n - 1)};
            ++rep.samples;
            const double area = intersection_area(da, db, t - B.reference, eps);
            const Containment m = nfp_membership(nfp, t, band);
            if (m == Containment::Boundary) {
                // Contact band: grid points straddle the boundary, record
                // the worst overlap seen there instead of scoring it.
                rep.max_boundary_error = std::max(rep.max_boundary_error, area);
                ++rep.agreements;
                continue;
            }
            const bool oracle_overlap = area > delta;
            const bool nfp_overlap = m == Containment::Inside;
            if (oracle_overlap == nfp_overlap) {
                ++rep.agreements;
            } else if (nfp_overlap && area <= delta && boundary_distance(nfp, t) <= cell) {
                rep.max_boundary_error = std::max(rep.max_boundary_error, area);
                ++rep.agreements;
            } else {
                rep.disagreements.push_back({t, oracle_overlap, nfp_overlap});
            }
        }
    }
    return rep;
}

RegionComponents feasible_components(const Piece& A, const Piece& B, int grid_n, double eps) {
    const double delta = 1e-6 * min_piece_area(A, B);
    BoundingBox bb = bounding_box(A);
    {
        // Cover every possible contact placement of B's reference point.
        const BoundingBox bq = bounding_box(B);
        const double wx = bq.width() + 1.0;
        const double wy = bq.height() + 1.0;
        bb.min_x -= wx; bb.max_x += wx;
        bb.min_y -= wy; bb.max_y += wy;
    }
    const ConvexDecomposition da = decompose(A, eps);
    const ConvexDecomposition db = decompose(B, eps);

    std::vector<char> feasible(static_cast<std::size_t>(grid_n) * grid_n, 0);
    for (int iy = 0; iy < grid_n; ++iy) {
        for (int ix = 0; ix < grid_n; ++ix) {
            const Point t{bb.min_x + (bb.max_x - bb.min_x) * ix / (grid_n - 1),
                          bb.min_y + (bb.max_y - bb.min_y) * iy / (grid_n - 1)};
            const double area = intersection_area(da, db, t - B.reference, eps);
            feasible[static_cast<std::size_t>(iy) * grid_n + ix] = area <= delta ? 1 : 0;
        }
    }

    RegionComponents rc;
    std::vector<int> label(feasible.size(), -1);
    std::vector<std::size_t> stack;
    int next_label = 0;
    for (std::size_t s = 0; s < feasible.size(); ++s) {
        if (!feasible[s] || label[s] >= 0) continue;
        const int id = next_label++;
        bool touches_border = false;
        stack.assign(1, s);
        label[s] = id;
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            const int cy = static_cast<int>(cur) / grid_n;
            const int cx = static_cast<int>(cur) % grid_n;
            if (cx == 0 || cy == 0 || cx == grid_n - 1 || cy == grid_n - 1) touches_border = true;
            const int nx[4] = {cx - 1, cx + 1, cx, cx};
            const int ny[4] = {cy, cy, cy - 1, cy + 1};
            for (int k = 0; k < 4; ++k) {
                if (nx[k] < 0 || ny[k] < 0 || nx[k] >= grid_n || ny[k] >= grid_n) continue;
                const std::size_t idx = static_cast<std::size_t>(ny[k]) * grid_n + nx[k];
                if (feasible[idx] && label[idx] < 0) {
                    label[idx] = id;
                    stack.push_back(idx);
                }
            }
        }
        if (touches_border) ++rc.exterior; else ++rc.interior;
    }
    return rc;
}

}  // namespace nfp
