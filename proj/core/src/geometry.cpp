#include "nfp/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace nfp {

double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double norm(Point p) { return std::hypot(p.x, p.y); }

bool points_equal(Point a, Point b, double eps) {
    return std::abs(a.x - b.x) <= eps && std::abs(a.y - b.y) <= eps;
}

double BoundingBox::diagonal() const {
    return std::hypot(width(), height());
}

void BoundingBox::expand(Point p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
}

void BoundingBox::expand(const BoundingBox& other) {
    min_x = std::min(min_x, other.min_x);
    min_y = std::min(min_y, other.min_y);
    max_x = std::max(max_x, other.max_x);
    max_y = std::max(max_y, other.max_y);
}

Orient orient(Point p, Point q, Point r, double eps) {
    const Point u = q - p;
    const Point v = r - p;
    const double c = cross(u, v);
    // |c| / |u| is the distance of r from the supporting line of pq.
    const double tol = eps * std::max(norm(u), norm(v));
    if (c > tol) return Orient::Left;
    if (c < -tol) return Orient::Right;
    return Orient::Collinear;
}

double distance_point_segment(Point p, Point a, Point b) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 <= 0.0) return norm(p - a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return norm(p - (a + t * ab));
}

std::vector<Point> segment_intersection(const Segment& s, const Segment& t, double eps) {
    std::vector<Point> out;
    const Point r = s.b - s.a;
    const Point d = t.b - t.a;
    const double denom = cross(r, d);
    const double lr = norm(r);
    const double ld = norm(d);

    const Orient o1 = orient(s.a, s.b, t.a, eps);
    const Orient o2 = orient(s.a, s.b, t.b, eps);
    const Orient o3 = orient(t.a, t.b, s.a, eps);
    const Orient o4 = orient(t.a, t.b, s.b, eps);

    if (o1 == Orient::Collinear && o2 == Orient::Collinear) {
        // Collinear supports: project t onto s and intersect parameter intervals.
        const double len2 = dot(r, r);
        if (len2 <= 0.0) return out;
        double ta = dot(t.a - s.a, r) / len2;
        double tb = dot(t.b - s.a, r) / len2;
        if (ta > tb) std::swap(ta, tb);
        const double teps = eps / std::max(lr, eps);
        const double lo = std::max(0.0, ta);
        const double hi = std::min(1.0, tb);
        if (hi < lo - teps) return out;
        const Point pa = s.a + std::clamp(lo, 0.0, 1.0) * r;
        const Point pb = s.a + std::clamp(hi, 0.0, 1.0) * r;
        out.push_back(pa);
        if (!points_equal(pa, pb, eps)) out.push_back(pb);
        return out;
    }

    // Endpoint touches, evaluated before the proper-crossing test so that
    // near-degenerate configurations resolve to a shared vertex.
    const bool touch_ta = o1 == Orient::Collinear &&
                          distance_point_segment(t.a, s.a, s.b) <= eps;
    const bool touch_tb = o2 == Orient::Collinear &&
                          distance_point_segment(t.b, s.a, s.b) <= eps;
    const bool touch_sa = o3 == Orient::Collinear &&
                          distance_point_segment(s.a, t.a, t.b) <= eps;
    const bool touch_sb = o4 == Orient::Collinear &&
                          distance_point_segment(s.b, t.a, t.b) <= eps;
    if (touch_ta) out.push_back(t.a);
    if (touch_tb && !(touch_ta && points_equal(t.a, t.b, eps))) out.push_back(t.b);
    if (touch_sa) {
        bool dup = false;
        for (const Point& q : out) dup |= points_equal(q, s.a, eps);
        if (!dup) out.push_back(s.a);
    }
    if (touch_sb) {
        bool dup = false;
        for (const Point& q : out) dup |= points_equal(q, s.b, eps);
        if (!dup) out.push_back(s.b);
    }
    if (!out.empty()) return out;

    if (o1 != o2 && o3 != o4 && std::abs(denom) > 0.0) {
        const double u = cross(t.a - s.a, d) / denom;
        const double v = cross(t.a - s.a, r) / denom;
        const double ueps = eps / std::max(lr, eps);
        const double veps = eps / std::max(ld, eps);
        if (u >= -ueps && u <= 1.0 + ueps && v >= -veps && v <= 1.0 + veps) {
            out.push_back(s.a + std::clamp(u, 0.0, 1.0) * r);
        }
    }
    return out;
}

double signed_area(const Contour& c) {
    const std::size_t n = c.size();
    if (n < 3) return 0.0;
    double a = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = c[i];
        const Point& q = c[(i + 1) % n];
        a += p.x * q.y - q.x * p.y;
    }
    return 0.5 * a;
}

bool is_ccw(const Contour& c) { return signed_area(c) > 0.0; }

bool is_convex(const Contour& c, double eps) {
    const std::size_t n = c.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = c[i];
        const Point& b = c[(i + 1) % n];
        const Point& d = c[(i + 2) % n];
        if (orient(a, b, d, eps) == Orient::Right) return false;
    }
    return is_ccw(c);
}

Containment point_in_convex(Point p, const Contour& c, double eps) {
    if (!is_convex(c, eps)) {
        throw std::invalid_argument("point_in_convex: contour is not convex CCW");
    }
    const std::size_t n = c.size();
    bool boundary = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = c[i];
        const Point& b = c[(i + 1) % n];
        const Point e = b - a;
        const double len = norm(e);
        if (len <= 0.0) continue;
        const double d = cross(e, p - a) / len;  // signed distance, interior positive
        if (d < -eps) return Containment::Outside;
        if (d <= eps && distance_point_segment(p, a, b) <= eps) boundary = true;
    }
    return boundary ? Containment::Boundary : Containment::Inside;
}

Contour reversed(const Contour& c) {
    Contour out = c;
    std::reverse(out.pts.begin(), out.pts.end());
    return out;
}

Contour transform(const Contour& c, Point translate, bool reflect_origin) {
    Contour out;
    out.pts.reserve(c.size());
    for (const Point& p : c.pts) {
        Point q = reflect_origin ? Point{-p.x, -p.y} : p;
        out.pts.push_back(q + translate);
    }
    return out;
}

BoundingBox bounding_box(const Contour& c) {
    BoundingBox bb;
    if (c.size() == 0) return bb;
    bb.min_x = bb.max_x = c[0].x;
    bb.min_y = bb.max_y = c[0].y;
    for (const Point& p : c.pts) bb.expand(p);
    return bb;
}

BoundingBox bounding_box(const Piece& p) {
    return bounding_box(p.outer);
}

Containment point_in_ring(Point p, const Contour& c, double eps) {
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (distance_point_segment(p, c[i], c[(i + 1) % n]) <= eps) {
            return Containment::Boundary;
        }
    }
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = c[i];
        const Point& b = c[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double xhit = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < xhit) inside = !inside;
        }
    }
    return inside ? Containment::Inside : Containment::Outside;
}

bool is_simple(const Contour& c, double eps) {
    const std::size_t n = c.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Segment s{c[i], c[(i + 1) % n]};
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            const Segment t{c[j], c[(j + 1) % n]};
            auto pts = segment_intersection(s, t, eps);
            if (adjacent) {
                // Adjacent edges legitimately share one endpoint.
                if (pts.size() > 1) return false;
                continue;
            }
            if (!pts.empty()) return false;
        }
    }
    return true;
}

Contour simplify_collinear(const Contour& c, double eps) {
    Contour out;
    const std::size_t n = c.size();
    if (n <= 2) return c;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& prev = c[(i + n - 1) % n];
        const Point& cur = c[i];
        const Point& next = c[(i + 1) % n];
        if (points_equal(cur, next, eps)) continue;
        const Point u = cur - prev;
        const Point v = next - cur;
        if (orient(prev, cur, next, eps) == Orient::Collinear && dot(u, v) > 0.0) continue;
        out.pts.push_back(cur);
    }
    if (out.size() < 2) return c;
    return out;
}

double ToleranceConfig::absolute(double bbox_diagonal) const {
    return epsilon_rel * std::max(bbox_diagonal, 1.0);
}

}  // namespace nfp
