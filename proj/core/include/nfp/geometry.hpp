#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nfp {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

double cross(Point a, Point b);
double dot(Point a, Point b);
double norm(Point p);

// Chebyshev comparison against the snap tolerance.
bool points_equal(Point a, Point b, double eps);

struct Segment {
    Point a;
    Point b;
};

struct BoundingBox {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;

    double width() const { return max_x - min_x; }
    double height() const { return max_y - min_y; }
    double diagonal() const;
    void expand(Point p);
    void expand(const BoundingBox& other);
};

// Closed ring of vertices; the last vertex connects back to the first.
// Rings with 2 vertices are zero-area sliding circuits, single-vertex
// rings are perfect-fit points.
struct Contour {
    std::vector<Point> pts;

    std::size_t size() const { return pts.size(); }
    Point& operator[](std::size_t i) { return pts[i]; }
    const Point& operator[](std::size_t i) const { return pts[i]; }
};

struct Piece {
    Contour outer;                 // CCW
    std::vector<Contour> holes;    // CW
    Point reference;
};

enum class Orient { Left, Right, Collinear };
enum class Containment { Inside, Boundary, Outside };

// Sign of cross(q-p, r-p); Collinear when r lies within eps of the
// line through p and q (tolerance scales with the operand magnitudes).
Orient orient(Point p, Point q, Point r, double eps);

// Proper crossings give one point, endpoint touches give that endpoint,
// collinear overlaps give the two extreme points of the shared interval.
std::vector<Point> segment_intersection(const Segment& s, const Segment& t, double eps);

// c must be convex and CCW; throws std::invalid_argument otherwise.
Containment point_in_convex(Point p, const Contour& c, double eps);

// Shoelace area, positive for CCW rings.
double signed_area(const Contour& c);

bool is_ccw(const Contour& c);
bool is_convex(const Contour& c, double eps);

Contour reversed(const Contour& c);

// Optional point reflection through the origin followed by a translation.
Contour transform(const Contour& c, Point translate, bool reflect_origin);

BoundingBox bounding_box(const Contour& c);
BoundingBox bounding_box(const Piece& p);

double distance_point_segment(Point p, Point a, Point b);

// Even-odd test against a single (possibly non-convex) ring.
Containment point_in_ring(Point p, const Contour& c, double eps);

// Simple-polygon check: no two non-adjacent edges properly intersect.
bool is_simple(const Contour& c, double eps);

// Drops vertices joining collinear edges and consecutive duplicates.
Contour simplify_collinear(const Contour& c, double eps);

// Default relative tolerance; the absolute snap tolerance is
// epsilon_rel times the bounding-box diagonal of the inputs.
struct ToleranceConfig {
    double epsilon_rel = 1e-9;

    double absolute(double bbox_diagonal) const;
};

}  // namespace nfp
