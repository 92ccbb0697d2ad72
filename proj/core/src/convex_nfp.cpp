#include "nfp/convex_nfp.hpp"

#include <algorithm>
#include <cmath>

namespace nfp {
namespace {

// Rotate the ring so it starts at the lowest vertex (min y, then min x).
Contour start_at_bottom(const Contour& c) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i].y < c[best].y || (c[i].y == c[best].y && c[i].x < c[best].x)) best = i;
    }
    Contour out;
    out.pts.reserve(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) out.pts.push_back(c[(best + k) % c.size()]);
    return out;
}

// Edge angle in [0, 2pi) from +x; for a CCW ring started at the bottom
// vertex the sequence is non-decreasing.
double edge_angle(Point e) {
    double a = std::atan2(e.y, e.x);
    if (a < 0.0) a += 2.0 * std::acos(-1.0);
    return a;
}

}  // namespace

NfpComponent convex_nfp(const Contour& stat, const Contour& orb, Point ref, double eps) {
    Contour s = simplify_collinear(stat, eps);
    if (!is_convex(s, eps)) {
        throw std::invalid_argument("convex_nfp: stationary contour is not convex CCW");
    }
    if (!is_convex(simplify_collinear(orb, eps), eps)) {
        throw std::invalid_argument("convex_nfp: orbital contour is not convex CCW");
    }
    // Point reflection through the reference point: ref - v. A reflection
    // is a half-turn rotation, so the ring stays CCW.
    Contour o;
    o.pts.reserve(orb.size());
    for (const Point& v : orb.pts) o.pts.push_back(ref - v);
    o = simplify_collinear(o, eps);

    s = start_at_bottom(s);
    o = start_at_bottom(o);

    const std::size_t n = s.size();
    const std::size_t m = o.size();
    NfpComponent out;
    Point cur = s[0] + o[0];
    out.contour.pts.push_back(cur);

    std::size_t i = 0, j = 0;
    while (i < n || j < m) {
        Point e;
        if (i >= n) {
            e = o[(j + 1) % m] - o[j];
            ++j;
        } else if (j >= m) {
            e = s[(i + 1) % n] - s[i];
            ++i;
        } else {
            const Point es = s[(i + 1) % n] - s[i];
            const Point eo = o[(j + 1) % m] - o[j];
            const double as = edge_angle(es);
            const double ao = edge_angle(eo);
            if (as <= ao) {
                e = es;
                ++i;
            } else {
                e = eo;
                ++j;
            }
        }
        cur = cur + e;
        out.contour.pts.push_back(cur);
    }
    // The walk closes back onto the start vertex.
    if (points_equal(out.contour.pts.front(), out.contour.pts.back(), eps)) {
        out.contour.pts.pop_back();
    }
    out.contour = simplify_collinear(out.contour, eps);
    return out;
}

}  // namespace nfp
