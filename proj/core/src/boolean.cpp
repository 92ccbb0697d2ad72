#include "nfp/boolean.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nfp/decompose.hpp"
#include "nfp/extract.hpp"
#include "nfp/merge.hpp"

namespace nfp {
namespace {

constexpr std::uint8_t kFromA = 1;
constexpr std::uint8_t kFromB = 2;

Containment piece_containment(Point p, const Piece& piece, const ConvexDecomposition& d,
                              double eps) {
    auto on_ring = [&](const Contour& c) {
        const std::size_t n = c.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (distance_point_segment(p, c[i], c[(i + 1) % n]) <= eps) return true;
        }
        return false;
    };
    if (on_ring(piece.outer)) return Containment::Boundary;
    for (const Contour& h : piece.holes) {
        if (on_ring(h)) return Containment::Boundary;
    }
    for (const Contour& c : d.components) {
        if (point_in_convex(p, c, eps) != Containment::Outside) return Containment::Inside;
    }
    return Containment::Outside;
}

std::vector<NfpComponent> piece_contours(const Piece& p) {
    std::vector<NfpComponent> out;
    Piece q = p;
    if (signed_area(q.outer) < 0.0) q.outer = reversed(q.outer);
    out.push_back({q.outer, -1, -1});
    for (Contour h : q.holes) {
        if (signed_area(h) > 0.0) h = reversed(h);
        out.push_back({h, -1, -1});
    }
    return out;
}

// Inverting edges can collide with existing ones; keep one copy.
void drop_duplicate_edges(MergeGraph& g) {
    for (std::size_t v = 0; v < g.verts.size(); ++v) {
        if (!g.verts[v].alive) continue;
        const std::vector<int> out = g.verts[v].out;
        for (std::size_t i = 0; i < out.size(); ++i) {
            const MergeGraph::Edge& a = g.edges[static_cast<std::size_t>(out[i])];
            if (!a.alive) continue;
            for (std::size_t j = i + 1; j < out.size(); ++j) {
                const MergeGraph::Edge& b = g.edges[static_cast<std::size_t>(out[j])];
                if (b.alive && b.to == a.to && b.from == a.from) g.remove_edge(out[j]);
            }
        }
    }
}

// Operation rules can leave edgeless vertices or dangling open chains
// (a vertex with inflow but no outflow); neither can be part of a
// circuit, so peel them off before extraction.
void prune_isolated(MergeGraph& g) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < g.verts.size(); ++v) {
            MergeGraph::Vertex& vx = g.verts[v];
            if (!vx.alive) continue;
            int n_out = 0, n_in = 0;
            for (int e : vx.out) n_out += g.edges[static_cast<std::size_t>(e)].alive ? 1 : 0;
            for (int e : vx.in) n_in += g.edges[static_cast<std::size_t>(e)].alive ? 1 : 0;
            if (n_out == 0 || n_in == 0) {
                g.remove_vertex(static_cast<int>(v));
                changed = changed || n_out + n_in > 0;
            }
        }
    }
}

std::vector<Piece> assemble_pieces(std::vector<Contour> outers, std::vector<Contour> holes,
                                   double eps) {
    std::vector<Piece> pieces;
    pieces.reserve(outers.size());
    for (Contour& o : outers) {
        Piece p;
        p.outer = std::move(o);
        p.reference = p.outer.size() ? p.outer[0] : Point{};
        pieces.push_back(std::move(p));
    }
    for (Contour& h : holes) {
        std::size_t owner = pieces.size();
        double owner_area = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            bool contained = false;
            for (const Point& q : h.pts) {
                if (point_in_ring(q, pieces[i].outer, eps) == Containment::Inside) {
                    contained = true;
                    break;
                }
            }
            if (!contained) continue;
            const double a = std::abs(signed_area(pieces[i].outer));
            if (a < owner_area) { owner = i; owner_area = a; }
        }
        if (owner == pieces.size() && !pieces.empty()) owner = 0;
        if (owner < pieces.size()) pieces[owner].holes.push_back(std::move(h));
    }
    return pieces;
}

}  // namespace

std::vector<Piece> boolean_op(const Piece& A, const Piece& B, BoolOpKind op,
                              const BoolConfig& cfg) {
    BoundingBox bb = bounding_box(A);
    bb.expand(bounding_box(B));
    const double eps = ToleranceConfig{cfg.epsilon_rel}.absolute(bb.diagonal());

    const ConvexDecomposition da = decompose(A, eps);
    const ConvexDecomposition db = decompose(B, eps);

    std::vector<NfpComponent> contours = piece_contours(A);
    const std::size_t a_count = contours.size();
    for (NfpComponent& c : piece_contours(B)) contours.push_back(std::move(c));
    std::vector<std::uint8_t> masks(contours.size(), kFromA);
    for (std::size_t i = a_count; i < masks.size(); ++i) masks[i] = kFromB;

    contours = compute_intersections(std::move(contours), eps);
    contours = insert_midpoints(std::move(contours));
    MergeGraph g = build_graph_masked(contours, masks, eps);

    // Vertex classification against both piece regions.
    std::vector<Containment> in_a(g.verts.size()), in_b(g.verts.size());
    for (std::size_t v = 0; v < g.verts.size(); ++v) {
        in_a[v] = piece_containment(g.verts[v].p, A, da, eps);
        in_b[v] = piece_containment(g.verts[v].p, B, db, eps);
    }
    auto inside_a = [&](int v) { return in_a[static_cast<std::size_t>(v)] == Containment::Inside; };
    auto inside_b = [&](int v) { return in_b[static_cast<std::size_t>(v)] == Containment::Inside; };
    auto in_closed_a = [&](int v) { return in_a[static_cast<std::size_t>(v)] != Containment::Outside; };
    auto in_closed_b = [&](int v) { return in_b[static_cast<std::size_t>(v)] != Containment::Outside; };

    switch (op) {
        case BoolOpKind::OR:
            for (std::size_t v = 0; v < g.verts.size(); ++v) {
                const int vi = static_cast<int>(v);
                if (inside_a(vi) || inside_b(vi)) g.remove_vertex(vi);
            }
            break;
        case BoolOpKind::AND:
            for (std::size_t v = 0; v < g.verts.size(); ++v) {
                const int vi = static_cast<int>(v);
                if (!(in_closed_a(vi) && in_closed_b(vi))) g.remove_vertex(vi);
            }
            break;
        case BoolOpKind::XOR:
            // A boundary arc shared by both pieces separates overlap from
            // exterior; neither side belongs to the symmetric difference.
            for (std::size_t e = 0; e < g.edges.size(); ++e) {
                if (g.edges[e].alive && g.edges[e].mask == (kFromA | kFromB)) {
                    g.remove_edge(static_cast<int>(e));
                }
            }
            // Former-overlap boundary flips so extraction sees it as a hole.
            for (std::size_t e = 0; e < g.edges.size(); ++e) {
                const MergeGraph::Edge& ed = g.edges[e];
                if (!ed.alive) continue;
                if (inside_a(ed.from) || inside_a(ed.to) || inside_b(ed.from) || inside_b(ed.to)) {
                    g.invert_edge(static_cast<int>(e));
                }
            }
            break;
        case BoolOpKind::NOT:
            for (std::size_t e = 0; e < g.edges.size(); ++e) {
                if (g.edges[e].alive && g.edges[e].mask == (kFromA | kFromB)) {
                    g.remove_edge(static_cast<int>(e));
                }
            }
            for (std::size_t v = 0; v < g.verts.size(); ++v) {
                const int vi = static_cast<int>(v);
                if (inside_b(vi) || !in_closed_a(vi)) g.remove_vertex(vi);
            }
            // B's surviving fragments bound the subtracted cavity; reverse
            // them so the result region stays on the left.
            for (std::size_t e = 0; e < g.edges.size(); ++e) {
                if (g.edges[e].alive && g.edges[e].mask == kFromB) {
                    g.invert_edge(static_cast<int>(e));
                }
            }
            break;
    }
    drop_duplicate_edges(g);
    prune_isolated(g);

    NfpResult r = extract_all(g);
    // Normal polygons have no zero-area regions; drop slide circuits and
    // stray fit points.
    return assemble_pieces(std::move(r.outer), std::move(r.holes), eps);
}

double region_area(const std::vector<Piece>& pieces) {
    double a = 0.0;
    for (const Piece& p : pieces) {
        a += std::abs(signed_area(p.outer));
        for (const Contour& h : p.holes) a -= std::abs(signed_area(h));
    }
    return a;
}

Containment point_in_pieces(Point p, const std::vector<Piece>& pieces, double eps) {
    for (const Piece& piece : pieces) {
        Containment c = point_in_ring(p, piece.outer, eps);
        if (c == Containment::Boundary) return Containment::Boundary;
        if (c != Containment::Inside) continue;
        bool in_hole = false;
        for (const Contour& h : piece.holes) {
            const Containment hc = point_in_ring(p, h, eps);
            if (hc == Containment::Boundary) return Containment::Boundary;
            if (hc == Containment::Inside) { in_hole = true; break; }
        }
        if (!in_hole) return Containment::Inside;
    }
    return Containment::Outside;
}

}  // namespace nfp
