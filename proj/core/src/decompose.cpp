#include "nfp/decompose.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

namespace nfp {
namespace {

struct Node {
    Point p;
    int prev = -1;
    int next = -1;
    bool alive = true;
};

double corner_cross(const std::vector<Node>& nodes, int i) {
    const Point& a = nodes[nodes[i].prev].p;
    const Point& b = nodes[i].p;
    const Point& c = nodes[nodes[i].next].p;
    return cross(b - a, c - b);
}

// Closed containment: a vertex on the candidate ear's boundary also
// blocks the clip, otherwise the cut diagonal can run exactly through
// it and leave a degenerate remainder ring.
bool blocks_ear(Point p, Point a, Point b, Point c, double margin, double eps) {
    if (points_equal(p, a, eps) || points_equal(p, b, eps) || points_equal(p, c, eps)) {
        return false;
    }
    const double d1 = cross(b - a, p - a);
    const double d2 = cross(c - b, p - b);
    const double d3 = cross(a - c, p - c);
    return d1 > margin && d2 > margin && d3 > margin;
}

// Does segment (a,b) properly cross any edge of the given rings?
// Shared snapped endpoints are not crossings.
bool bridge_blocked(Point a, Point b, const std::vector<const Contour*>& rings, double eps) {
    for (const Contour* ring : rings) {
        const std::size_t n = ring->size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point& c = (*ring)[i];
            const Point& d = (*ring)[(i + 1) % n];
            auto pts = segment_intersection({a, b}, {c, d}, eps);
            for (const Point& q : pts) {
                if (!points_equal(q, a, eps) && !points_equal(q, b, eps)) return true;
            }
        }
    }
    return false;
}

// Splice all holes into the outer ring through shortest non-crossing
// vertex-to-vertex bridges. Returns the combined weakly-simple ring.
std::vector<Point> bridge_holes(const Piece& p, double eps) {
    std::vector<Point> ring(p.outer.pts);
    std::vector<Contour> pending(p.holes);
    // Holes are stored CW which keeps the piece interior on the left
    // when the hole path is spliced into the CCW outer ring.
    for (Contour& h : pending) {
        if (signed_area(h) > 0.0) h = reversed(h);
    }

    while (!pending.empty()) {
        double best_len = std::numeric_limits<double>::infinity();
        std::size_t best_hole = 0, best_hv = 0, best_rv = 0;
        bool found = false;

        std::vector<const Contour*> obstacles;
        Contour ring_c{ring};
        obstacles.push_back(&ring_c);
        for (const Contour& h : pending) obstacles.push_back(&h);

        for (std::size_t hi = 0; hi < pending.size(); ++hi) {
            const Contour& h = pending[hi];
            for (std::size_t j = 0; j < h.size(); ++j) {
                for (std::size_t i = 0; i < ring.size(); ++i) {
                    const double len = norm(h[j] - ring[i]);
                    if (len >= best_len) continue;
                    if (bridge_blocked(ring[i], h[j], obstacles, eps)) continue;
                    best_len = len;
                    best_hole = hi;
                    best_hv = j;
                    best_rv = i;
                    found = true;
                }
            }
        }
        if (!found) {
            throw std::invalid_argument("decompose: cannot connect hole to outer boundary");
        }

        const Contour& h = pending[best_hole];
        std::vector<Point> merged;
        merged.reserve(ring.size() + h.size() + 2);
        for (std::size_t i = 0; i <= best_rv; ++i) merged.push_back(ring[i]);
        for (std::size_t k = 0; k <= h.size(); ++k) {
            merged.push_back(h[(best_hv + k) % h.size()]);
        }
        merged.push_back(ring[best_rv]);
        for (std::size_t i = best_rv + 1; i < ring.size(); ++i) merged.push_back(ring[i]);
        ring = std::move(merged);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best_hole));
    }
    return ring;
}

std::vector<std::array<int, 3>> ear_clip(std::vector<Node>& nodes, double area_tol, double eps) {
    std::vector<std::array<int, 3>> tris;
    int alive = static_cast<int>(nodes.size());
    int cur = 0;

    auto remove_node = [&](int i) {
        nodes[nodes[i].prev].next = nodes[i].next;
        nodes[nodes[i].next].prev = nodes[i].prev;
        nodes[i].alive = false;
        --alive;
    };

    int since_progress = 0;
    // Blocking margin: closed containment (points on the ear boundary
    // block) to keep cut diagonals off other vertices. On a numerical
    // deadlock, move toward strict containment and widen stepwise.
    double margin = -area_tol;
    while (alive > 3) {
        if (since_progress > alive + 1) {
            margin = margin < 0.0 ? area_tol : margin * 10.0;
            since_progress = 0;
            if (margin > 1e-3) {
                throw std::invalid_argument("decompose: ear clipping failed (self-intersecting input?)");
            }
        }
        if (!nodes[cur].alive) { cur = nodes[cur].next; continue; }
        const int a = nodes[cur].prev;
        const int b = cur;
        const int c = nodes[cur].next;
        const double cr = corner_cross(nodes, b);

        if (std::abs(cr) <= area_tol && dot(nodes[b].p - nodes[a].p, nodes[c].p - nodes[b].p) > 0.0) {
            remove_node(b);
            cur = c;
            since_progress = 0;
            continue;
        }
        if (cr > area_tol) {
            bool blocked = false;
            for (int w = nodes[c].next; w != a; w = nodes[w].next) {
                if (blocks_ear(nodes[w].p, nodes[a].p, nodes[b].p, nodes[c].p, margin, eps)) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) {
                tris.push_back({a, b, c});
                remove_node(b);
                cur = c;
                since_progress = 0;
                continue;
            }
        }
        cur = nodes[cur].next;
        ++since_progress;
    }
    // Last triangle.
    int i0 = cur;
    while (!nodes[i0].alive) i0 = nodes[i0].next;
    const int i1 = nodes[i0].next;
    const int i2 = nodes[i1].next;
    if (std::abs(cross(nodes[i1].p - nodes[i0].p, nodes[i2].p - nodes[i1].p)) > area_tol) {
        tris.push_back({i0, i1, i2});
    }
    return tris;
}

bool polygon_convex_indices(const std::vector<int>& poly, const std::vector<Node>& nodes, double area_tol) {
    const std::size_t n = poly.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = nodes[static_cast<std::size_t>(poly[i])].p;
        const Point& b = nodes[static_cast<std::size_t>(poly[(i + 1) % n])].p;
        const Point& c = nodes[static_cast<std::size_t>(poly[(i + 2) % n])].p;
        if (cross(b - a, c - b) < -area_tol) return false;
    }
    return true;
}

// Merge triangles across shared diagonals while the union stays convex.
std::vector<std::vector<int>> hertel_mehlhorn(std::vector<std::vector<int>> polys,
                                              const std::vector<Node>& nodes,
                                              double area_tol) {
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < polys.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < polys.size() && !merged; ++j) {
                const auto& P = polys[i];
                const auto& Q = polys[j];
                // Find a shared directed edge (u,v) in P with (v,u) in Q.
                for (std::size_t pi = 0; pi < P.size(); ++pi) {
                    const int u = P[pi];
                    const int v = P[(pi + 1) % P.size()];
                    std::size_t qi = Q.size();
                    for (std::size_t k = 0; k < Q.size(); ++k) {
                        if (Q[k] == v && Q[(k + 1) % Q.size()] == u) { qi = k; break; }
                    }
                    if (qi == Q.size()) continue;
                    std::vector<int> uni;
                    uni.reserve(P.size() + Q.size() - 2);
                    for (std::size_t k = (pi + 1) % P.size();; k = (k + 1) % P.size()) {
                        uni.push_back(P[k]);
                        if (P[k] == u && uni.size() > 1) break;
                        if (uni.size() > P.size()) break;
                    }
                    // uni now runs v..u along P; append Q interior path u+1..v-1.
                    for (std::size_t k = (qi + 2) % Q.size(); Q[k] != v; k = (k + 1) % Q.size()) {
                        uni.push_back(Q[k]);
                        if (uni.size() > P.size() + Q.size()) break;
                    }
                    if (uni.size() != P.size() + Q.size() - 2) continue;
                    if (!polygon_convex_indices(uni, nodes, area_tol)) continue;
                    polys[i] = std::move(uni);
                    polys.erase(polys.begin() + static_cast<std::ptrdiff_t>(j));
                    merged = true;
                    break;
                }
            }
        }
    }
    return polys;
}

}  // namespace

ConvexDecomposition decompose(const Piece& p, double eps) {
    ConvexDecomposition d;
    d.source = p;

    Piece norm_p = p;
    if (signed_area(norm_p.outer) < 0.0) norm_p.outer = reversed(norm_p.outer);
    if (!is_simple(norm_p.outer, eps)) {
        throw std::invalid_argument("decompose: outer ring is self-intersecting");
    }
    for (const Contour& h : norm_p.holes) {
        if (!is_simple(h, eps)) {
            throw std::invalid_argument("decompose: hole ring is self-intersecting");
        }
    }

    if (norm_p.holes.empty() && is_convex(simplify_collinear(norm_p.outer, eps), eps)) {
        d.components.push_back(norm_p.outer);
        return d;
    }

    const std::vector<Point> ring = bridge_holes(norm_p, eps);
    const double scale = bounding_box(norm_p).diagonal();
    const double area_tol = eps * std::max(scale, 1.0);

    std::vector<Node> nodes(ring.size());
    const int n = static_cast<int>(ring.size());
    for (int i = 0; i < n; ++i) {
        nodes[static_cast<std::size_t>(i)] = Node{ring[static_cast<std::size_t>(i)],
                                                  (i + n - 1) % n, (i + 1) % n, true};
    }

    auto tris = ear_clip(nodes, area_tol, eps);
    std::vector<std::vector<int>> polys;
    polys.reserve(tris.size());
    for (const auto& t : tris) polys.push_back({t[0], t[1], t[2]});
    polys = hertel_mehlhorn(std::move(polys), nodes, area_tol);

    for (const auto& poly : polys) {
        Contour c;
        c.pts.reserve(poly.size());
        for (int idx : poly) c.pts.push_back(nodes[static_cast<std::size_t>(idx)].p);
        c = simplify_collinear(c, eps);
        if (c.size() >= 3 && std::abs(signed_area(c)) > area_tol * scale) {
            d.components.push_back(std::move(c));
        }
    }
    return d;
}

DecompositionReport validate_decomposition(const ConvexDecomposition& d, double eps) {
    DecompositionReport rep;
    rep.convex_ok = true;
    for (const Contour& c : d.components) {
        if (!is_convex(c, eps)) rep.convex_ok = false;
    }

    double piece_area = std::abs(signed_area(d.source.outer));
    for (const Contour& h : d.source.holes) piece_area -= std::abs(signed_area(h));
    double comp_area = 0.0;
    for (const Contour& c : d.components) comp_area += signed_area(c);
    rep.area_delta = comp_area - piece_area;
    const bool area_ok = std::abs(rep.area_delta) <= 1e-6 * std::max(piece_area, 1.0);

    // Monte-Carlo membership agreement between piece region and components.
    const BoundingBox bb = bounding_box(d.source);
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_real_distribution<double> ux(bb.min_x, bb.max_x);
    std::uniform_real_distribution<double> uy(bb.min_y, bb.max_y);
    const int samples = 10000;
    int disagreements = 0;
    for (int s = 0; s < samples; ++s) {
        const Point q{ux(rng), uy(rng)};
        Containment in_piece = point_in_ring(q, d.source.outer, eps);
        if (in_piece == Containment::Inside) {
            for (const Contour& h : d.source.holes) {
                const Containment hc = point_in_ring(q, h, eps);
                if (hc == Containment::Inside) { in_piece = Containment::Outside; break; }
                if (hc == Containment::Boundary) { in_piece = Containment::Boundary; break; }
            }
        }
        if (in_piece == Containment::Boundary) continue;
        bool in_comp = false;
        for (const Contour& c : d.components) {
            // Ring test, not the convex one: the validator must keep
            // working on components that fail the convexity sweep.
            const Containment cc = point_in_ring(q, c, eps);
            if (cc != Containment::Outside) { in_comp = true; break; }
        }
        if (in_comp != (in_piece == Containment::Inside)) ++disagreements;
    }
    const bool mc_ok = disagreements <= samples / 1000;
    rep.coverage_ok = area_ok && mc_ok;
    return rep;
}

}  // namespace nfp
