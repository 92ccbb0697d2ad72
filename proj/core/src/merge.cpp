#include "nfp/merge.hpp"

#include <algorithm>
#include <cmath>

#include "nfp/decompose.hpp"
#include "nfp/extract.hpp"

namespace nfp {

MergeGraph::MergeGraph(double eps) : eps_(eps), cell_(std::max(eps * 4.0, 1e-300)) {}

std::uint64_t MergeGraph::cell_key(long long cx, long long cy) const {
    const std::uint64_t a = static_cast<std::uint64_t>(cx);
    const std::uint64_t b = static_cast<std::uint64_t>(cy);
    return (a * 0x9E3779B97F4A7C15ULL) ^ (b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2));
}

int MergeGraph::add_vertex(Point p) {
    const long long cx = static_cast<long long>(std::floor(p.x / cell_));
    const long long cy = static_cast<long long>(std::floor(p.y / cell_));
    for (long long dx = -1; dx <= 1; ++dx) {
        for (long long dy = -1; dy <= 1; ++dy) {
            auto it = grid_.find(cell_key(cx + dx, cy + dy));
            if (it == grid_.end()) continue;
            for (int id : it->second) {
                if (verts[static_cast<std::size_t>(id)].alive &&
                    points_equal(verts[static_cast<std::size_t>(id)].p, p, eps_)) {
                    return id;
                }
            }
        }
    }
    const int id = static_cast<int>(verts.size());
    verts.push_back(Vertex{p, {}, {}, true});
    grid_[cell_key(cx, cy)].push_back(id);
    return id;
}

int MergeGraph::find_edge(int from, int to) const {
    for (int e : verts[static_cast<std::size_t>(from)].out) {
        if (edges[static_cast<std::size_t>(e)].alive && edges[static_cast<std::size_t>(e)].to == to) return e;
    }
    return -1;
}

int MergeGraph::add_edge(int from, int to, std::uint8_t mask) {
    if (from == to) return -1;
    const int existing = find_edge(from, to);
    if (existing >= 0) {
        edges[static_cast<std::size_t>(existing)].mask |= mask;
        return existing;
    }
    const int id = static_cast<int>(edges.size());
    edges.push_back(Edge{from, to, mask, true});
    verts[static_cast<std::size_t>(from)].out.push_back(id);
    verts[static_cast<std::size_t>(to)].in.push_back(id);
    return id;
}

void MergeGraph::remove_edge(int e) {
    edges[static_cast<std::size_t>(e)].alive = false;
}

void MergeGraph::remove_vertex(int v) {
    Vertex& vx = verts[static_cast<std::size_t>(v)];
    vx.alive = false;
    for (int e : vx.out) edges[static_cast<std::size_t>(e)].alive = false;
    for (int e : vx.in) edges[static_cast<std::size_t>(e)].alive = false;
}

void MergeGraph::invert_edge(int e) {
    Edge& ed = edges[static_cast<std::size_t>(e)];
    if (!ed.alive) return;
    Vertex& vf = verts[static_cast<std::size_t>(ed.from)];
    Vertex& vt = verts[static_cast<std::size_t>(ed.to)];
    vf.out.erase(std::remove(vf.out.begin(), vf.out.end(), e), vf.out.end());
    vt.in.erase(std::remove(vt.in.begin(), vt.in.end(), e), vt.in.end());
    std::swap(ed.from, ed.to);
    verts[static_cast<std::size_t>(ed.from)].out.push_back(e);
    verts[static_cast<std::size_t>(ed.to)].in.push_back(e);
}

std::size_t MergeGraph::alive_vertex_count() const {
    std::size_t n = 0;
    for (const Vertex& v : verts) n += v.alive ? 1 : 0;
    return n;
}

std::size_t MergeGraph::alive_edge_count() const {
    std::size_t n = 0;
    for (const Edge& e : edges) n += e.alive ? 1 : 0;
    return n;
}

std::vector<NfpComponent> compute_intersections(std::vector<NfpComponent> components, double eps) {
    const std::size_t nc = components.size();
    // splits[c][e] = parametric positions along edge e of component c.
    std::vector<std::vector<std::vector<double>>> splits(nc);
    for (std::size_t c = 0; c < nc; ++c) splits[c].resize(components[c].contour.size());

    for (std::size_t ci = 0; ci < nc; ++ci) {
        const Contour& a = components[ci].contour;
        for (std::size_t cj = ci + 1; cj < nc; ++cj) {
            const Contour& b = components[cj].contour;
            for (std::size_t i = 0; i < a.size(); ++i) {
                const Segment sa{a[i], a[(i + 1) % a.size()]};
                const Point ra = sa.b - sa.a;
                const double la2 = dot(ra, ra);
                for (std::size_t j = 0; j < b.size(); ++j) {
                    const Segment sb{b[j], b[(j + 1) % b.size()]};
                    const auto pts = segment_intersection(sa, sb, eps);
                    if (pts.empty()) continue;
                    const Point rb = sb.b - sb.a;
                    const double lb2 = dot(rb, rb);
                    for (const Point& q : pts) {
                        if (la2 > 0.0) splits[ci][i].push_back(dot(q - sa.a, ra) / la2);
                        if (lb2 > 0.0) splits[cj][j].push_back(dot(q - sb.a, rb) / lb2);
                    }
                }
            }
        }
    }

    for (std::size_t c = 0; c < nc; ++c) {
        const Contour& src = components[c].contour;
        Contour dst;
        for (std::size_t i = 0; i < src.size(); ++i) {
            const Point a = src[i];
            const Point b = src[(i + 1) % src.size()];
            dst.pts.push_back(a);
            auto& ts = splits[c][i];
            std::sort(ts.begin(), ts.end());
            const double teps = eps / std::max(norm(b - a), eps);
            double last = 0.0;
            for (double t : ts) {
                if (t <= teps || t >= 1.0 - teps) continue;
                if (t - last <= teps) continue;
                dst.pts.push_back(a + t * (b - a));
                last = t;
            }
        }
        components[c].contour = std::move(dst);
    }
    return components;
}

NfpComponent insert_midpoints(NfpComponent component) {
    const Contour& src = component.contour;
    Contour dst;
    dst.pts.reserve(src.size() * 2);
    for (std::size_t i = 0; i < src.size(); ++i) {
        const Point a = src[i];
        const Point b = src[(i + 1) % src.size()];
        dst.pts.push_back(a);
        dst.pts.push_back(0.5 * (a + b));
    }
    component.contour = std::move(dst);
    return component;
}

std::vector<NfpComponent> insert_midpoints(std::vector<NfpComponent> components) {
    for (NfpComponent& c : components) c = insert_midpoints(std::move(c));
    return components;
}

MergeGraph build_graph_masked(const std::vector<NfpComponent>& components,
                              const std::vector<std::uint8_t>& masks, double eps) {
    MergeGraph g(eps);
    for (std::size_t c = 0; c < components.size(); ++c) {
        const Contour& ring = components[c].contour;
        const std::uint8_t mask = masks.empty() ? 0 : masks[c];
        std::vector<int> ids;
        ids.reserve(ring.size());
        for (const Point& p : ring.pts) ids.push_back(g.add_vertex(p));
        for (std::size_t i = 0; i < ids.size(); ++i) {
            g.add_edge(ids[i], ids[(i + 1) % ids.size()], mask);
        }
    }
    return g;
}

MergeGraph build_graph(const std::vector<NfpComponent>& components, double eps) {
    return build_graph_masked(components, {}, eps);
}

namespace {

// Strict-interior test against a convex CCW ring validated by the caller.
bool strictly_inside_convex(Point p, const Contour& c, const BoundingBox& bb, double eps) {
    if (p.x < bb.min_x - eps || p.x > bb.max_x + eps ||
        p.y < bb.min_y - eps || p.y > bb.max_y + eps) {
        return false;
    }
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = c[i];
        const Point& b = c[(i + 1) % n];
        const Point e = b - a;
        const double len = norm(e);
        if (len <= 0.0) continue;
        if (cross(e, p - a) / len <= eps) return false;
    }
    return true;
}

}  // namespace

void remove_contained(MergeGraph& g, const std::vector<NfpComponent>& components) {
    const double eps = g.eps();
    std::vector<Contour> hulls;
    std::vector<BoundingBox> boxes;
    hulls.reserve(components.size());
    for (const NfpComponent& c : components) {
        Contour h = simplify_collinear(c.contour, eps);
        if (!is_convex(h, eps)) {
            throw std::invalid_argument("remove_contained: component is not convex");
        }
        boxes.push_back(bounding_box(h));
        hulls.push_back(std::move(h));
    }
    for (std::size_t v = 0; v < g.verts.size(); ++v) {
        if (!g.verts[v].alive) continue;
        for (std::size_t c = 0; c < hulls.size(); ++c) {
            if (strictly_inside_convex(g.verts[v].p, hulls[c], boxes[c], eps)) {
                g.remove_vertex(static_cast<int>(v));
                break;
            }
        }
    }
}

double nfp_epsilon(const Piece& A, const Piece& B, const NfpConfig& cfg) {
    BoundingBox bb = bounding_box(A);
    bb.expand(bounding_box(B));
    ToleranceConfig tc{cfg.epsilon_rel};
    return tc.absolute(bb.diagonal());
}

NfpResult gen_nfp(const Piece& A, const Piece& B, const NfpConfig& cfg) {
    const double eps = nfp_epsilon(A, B, cfg);
    const ConvexDecomposition da = decompose(A, eps);
    const ConvexDecomposition db = decompose(B, eps);

    std::vector<NfpComponent> components;
    components.reserve(da.components.size() * db.components.size());
    for (std::size_t i = 0; i < da.components.size(); ++i) {
        for (std::size_t j = 0; j < db.components.size(); ++j) {
            NfpComponent c = convex_nfp(da.components[i], db.components[j], B.reference, eps);
            c.stationary_id = static_cast<int>(i);
            c.orbital_id = static_cast<int>(j);
            components.push_back(std::move(c));
        }
    }

    components = compute_intersections(std::move(components), eps);
    components = insert_midpoints(std::move(components));
    MergeGraph g = build_graph(components, eps);
    remove_contained(g, components);
    return extract_all(g);
}

}  // namespace nfp
