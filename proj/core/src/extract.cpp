#include "nfp/extract.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nfp {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kAngleEps = 1e-9;

// Clockwise angle from the upward vertical ray, in [0, 2pi).
double cw_from_up(Point d) {
    double a = std::atan2(d.x, d.y);
    if (a < 0.0) a += kTwoPi;
    return a;
}

// Math-convention angle of a direction vector.
double math_angle(Point d) { return std::atan2(d.y, d.x); }

// Counter-clockwise angle from direction `from` to direction `to`,
// mapped into (0, 2pi]: an exact reversal scores last, so a straight
// continuation is preferred over bouncing back along an antiparallel
// edge unless that is the only option.
double ccw_turn(Point from, Point to) {
    double a = math_angle(to) - math_angle(from);
    while (a <= kAngleEps) a += kTwoPi;
    while (a > kTwoPi + kAngleEps) a -= kTwoPi;
    return a;
}

double cw_turn(Point from, Point to) { return ccw_turn(to, from); }

struct Candidate {
    int edge = -1;
    double angle = 0.0;
    double length = 0.0;
    Point far;
};

bool better(const Candidate& a, const Candidate& b) {
    if (std::abs(a.angle - b.angle) > kAngleEps) return a.angle < b.angle;
    if (std::abs(a.length - b.length) > 0.0) return a.length < b.length;
    if (a.far.x != b.far.x) return a.far.x < b.far.x;
    return a.far.y < b.far.y;
}

}  // namespace

int find_start_vertex(const MergeGraph& g) {
    int best = -1;
    for (std::size_t v = 0; v < g.verts.size(); ++v) {
        if (!g.verts[v].alive) continue;
        if (best < 0) { best = static_cast<int>(v); continue; }
        const Point& p = g.verts[v].p;
        const Point& q = g.verts[static_cast<std::size_t>(best)].p;
        if (p.x < q.x || (p.x == q.x && p.y < q.y)) best = static_cast<int>(v);
    }
    if (best < 0) throw std::runtime_error("find_start_vertex: empty graph");
    return best;
}

StartClassification classify_start(const MergeGraph& g, int v) {
    const MergeGraph::Vertex& vx = g.verts[static_cast<std::size_t>(v)];
    Candidate best_out, best_in;
    bool has_out = false, has_in = false;

    for (int e : vx.out) {
        const MergeGraph::Edge& ed = g.edges[static_cast<std::size_t>(e)];
        if (!ed.alive) continue;
        const Point far = g.verts[static_cast<std::size_t>(ed.to)].p;
        const Point d = far - vx.p;
        Candidate c{e, cw_from_up(d), norm(d), far};
        if (!has_out || better(c, best_out)) { best_out = c; has_out = true; }
    }
    for (int e : vx.in) {
        const MergeGraph::Edge& ed = g.edges[static_cast<std::size_t>(e)];
        if (!ed.alive) continue;
        const Point far = g.verts[static_cast<std::size_t>(ed.from)].p;
        const Point d = far - vx.p;  // incoming measured reversed at V
        Candidate c{e, cw_from_up(d), norm(d), far};
        if (!has_in || better(c, best_in)) { best_in = c; has_in = true; }
    }

    if (!has_out && !has_in) return {StartKind::PerfectFit, -1};
    if (!has_out || !has_in) {
        throw std::runtime_error("classify_start: dangling vertex in merge graph");
    }
    // A CCW exterior circuit presents its incoming edge first in the
    // clockwise sweep from vertical; a CW hole presents its outgoing
    // edge first. An angular tie is the perfect-sliding configuration
    // and is treated as a hole.
    if (best_out.angle <= best_in.angle + kAngleEps) {
        return {StartKind::Hole, best_out.edge};
    }
    return {StartKind::Outline, best_in.edge};
}

Contour extract_circuit(MergeGraph& g, const StartClassification& start) {
    if (start.kind == StartKind::PerfectFit || start.edge < 0) {
        throw std::invalid_argument("extract_circuit: not a circuit start");
    }
    const bool forward = start.kind == StartKind::Outline;
    const int e0 = start.edge;
    std::vector<int> circuit{e0};
    g.remove_edge(e0);

    const std::size_t limit = g.edges.size() + 2;
    int cur = e0;
    while (circuit.size() <= limit) {
        const MergeGraph::Edge& ce = g.edges[static_cast<std::size_t>(cur)];
        const Point pfrom = g.verts[static_cast<std::size_t>(ce.from)].p;
        const Point pto = g.verts[static_cast<std::size_t>(ce.to)].p;
        const int pivot = forward ? ce.to : ce.from;
        const Point dir = pto - pfrom;
        const MergeGraph::Vertex& vx = g.verts[static_cast<std::size_t>(pivot)];

        Candidate best;
        bool found = false;
        const std::vector<int>& pool = forward ? vx.out : vx.in;
        for (int e : pool) {
            const MergeGraph::Edge& ed = g.edges[static_cast<std::size_t>(e)];
            if (!ed.alive && e != e0) continue;
            const int far_id = forward ? ed.to : ed.from;
            const Point far = g.verts[static_cast<std::size_t>(far_id)].p;
            const Point cont = far - vx.p;
            // Tightest turn: minimal CCW angle from the reversed travel
            // direction for outlines, the clockwise mirror for holes.
            const double ang = forward ? ccw_turn(Point{-dir.x, -dir.y}, cont)
                                       : cw_turn(dir, cont);
            Candidate c{e, ang, norm(cont), far};
            if (!found || better(c, best)) { best = c; found = true; }
        }
        if (!found) {
            throw std::runtime_error("extract_circuit: walk has no continuation (graph corruption)");
        }
        if (best.edge == e0) break;  // circuit closed
        g.remove_edge(best.edge);
        circuit.push_back(best.edge);
        cur = best.edge;
    }
    if (circuit.size() > limit) {
        throw std::runtime_error("extract_circuit: walk failed to close (graph corruption)");
    }

    if (!forward) std::reverse(circuit.begin(), circuit.end());
    Contour out;
    out.pts.reserve(circuit.size());
    for (int e : circuit) {
        out.pts.push_back(g.verts[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].from)].p);
    }
    return simplify_collinear(out, g.eps());
}

NfpResult extract_all(MergeGraph& g) {
    NfpResult r;

    BoundingBox bb;
    bool any = false;
    for (const MergeGraph::Vertex& v : g.verts) {
        if (!v.alive) continue;
        if (!any) { bb = BoundingBox{v.p.x, v.p.y, v.p.x, v.p.y}; any = true; }
        bb.expand(v.p);
    }
    const double area_tol = g.eps() * std::max(bb.diagonal(), 1.0);

    // Vertices already edge-dead here lost their edges to containment
    // removal: those are the perfect-fit candidates. Vertices that only
    // lose their edges to circuit extraction below are not.
    std::vector<char> fit_candidate(g.verts.size(), 0);
    for (std::size_t i = 0; i < g.verts.size(); ++i) {
        const MergeGraph::Vertex& vx = g.verts[i];
        if (!vx.alive) continue;
        bool has_edge = false;
        for (int e : vx.out) has_edge |= g.edges[static_cast<std::size_t>(e)].alive;
        for (int e : vx.in) has_edge |= g.edges[static_cast<std::size_t>(e)].alive;
        fit_candidate[i] = has_edge ? 0 : 1;
    }

    while (g.alive_vertex_count() > 0) {
        const int v = find_start_vertex(g);
        const StartClassification start = classify_start(g, v);
        if (start.kind == StartKind::PerfectFit) {
            r.fits.push_back(g.verts[static_cast<std::size_t>(v)].p);
            g.remove_vertex(v);
            continue;
        }
        Contour c = extract_circuit(g, start);
        const double area = signed_area(c);
        if (std::abs(area) <= area_tol) {
            r.slides.push_back(std::move(c));
        } else if (start.kind == StartKind::Outline) {
            r.outer.push_back(std::move(c));
        } else {
            r.holes.push_back(std::move(c));
        }
        // Vertices used up by this circuit are gone.
        for (std::size_t i = 0; i < g.verts.size(); ++i) {
            MergeGraph::Vertex& vx = g.verts[i];
            if (!vx.alive || fit_candidate[i]) continue;
            bool has_edge = false;
            for (int e : vx.out) has_edge |= g.edges[static_cast<std::size_t>(e)].alive;
            for (int e : vx.in) has_edge |= g.edges[static_cast<std::size_t>(e)].alive;
            if (!has_edge) vx.alive = false;
        }
    }
    return r;
}

MergeGraph rebuild_graph(const NfpResult& r, double eps) {
    MergeGraph g(eps);
    auto add_ring = [&](const Contour& c) {
        std::vector<int> ids;
        ids.reserve(c.size());
        for (const Point& p : c.pts) ids.push_back(g.add_vertex(p));
        for (std::size_t i = 0; i < ids.size(); ++i) {
            g.add_edge(ids[i], ids[(i + 1) % ids.size()]);
        }
    };
    for (const Contour& c : r.outer) add_ring(c);
    for (const Contour& c : r.holes) add_ring(c);
    for (const Contour& c : r.slides) add_ring(c);
    for (const Point& p : r.fits) g.add_vertex(p);
    return g;
}

BoundingBox bounding_box(const NfpResult& r) {
    BoundingBox bb;
    bool init = false;
    auto take = [&](const Point& p) {
        if (!init) { bb = BoundingBox{p.x, p.y, p.x, p.y}; init = true; }
        bb.expand(p);
    };
    for (const Contour& c : r.outer) for (const Point& p : c.pts) take(p);
    for (const Contour& c : r.holes) for (const Point& p : c.pts) take(p);
    for (const Contour& c : r.slides) for (const Point& p : c.pts) take(p);
    for (const Point& p : r.fits) take(p);
    return bb;
}

}  // namespace nfp
