#pragma once

#include <cstdint>
#include <unordered_map>

#include "nfp/convex_nfp.hpp"
#include "nfp/geometry.hpp"

namespace nfp {

// Directed multigraph over snapped vertices. Vertices within the snap
// tolerance aggregate to one id; duplicate directed edges collapse to a
// single edge (their source masks merge).
class MergeGraph {
public:
    struct Vertex {
        Point p;
        std::vector<int> out;
        std::vector<int> in;
        bool alive = true;
    };
    struct Edge {
        int from = -1;
        int to = -1;
        std::uint8_t mask = 0;  // provenance bits, used by boolean ops
        bool alive = true;
    };

    explicit MergeGraph(double eps);

    // Snapped insertion: returns the id of an existing vertex within eps
    // of p, or a fresh one.
    int add_vertex(Point p);
    // Returns the edge id; an existing identical directed edge absorbs
    // the mask instead of duplicating.
    int add_edge(int from, int to, std::uint8_t mask = 0);
    int find_edge(int from, int to) const;

    void remove_vertex(int v);  // removes incident edges as well
    void remove_edge(int e);
    // Flip the direction of an edge in place.
    void invert_edge(int e);

    double eps() const { return eps_; }
    std::size_t alive_vertex_count() const;
    std::size_t alive_edge_count() const;

    std::vector<Vertex> verts;
    std::vector<Edge> edges;

private:
    double eps_;
    double cell_;
    std::unordered_map<std::uint64_t, std::vector<int>> grid_;

    std::uint64_t cell_key(long long cx, long long cy) const;
};

// Every edge-pair intersection across distinct components is inserted
// as a vertex into both contours.
std::vector<NfpComponent> compute_intersections(std::vector<NfpComponent> components, double eps);

// Splits every edge at its midpoint, so that containment removal keeps
// at least one interior witness per surviving boundary segment.
NfpComponent insert_midpoints(NfpComponent component);
std::vector<NfpComponent> insert_midpoints(std::vector<NfpComponent> components);

// Snaps vertices across components, one directed edge per consecutive
// contour pair.
MergeGraph build_graph(const std::vector<NfpComponent>& components, double eps);
MergeGraph build_graph_masked(const std::vector<NfpComponent>& components,
                              const std::vector<std::uint8_t>& masks, double eps);

// Deletes every vertex strictly interior to any component; boundary
// vertices survive.
void remove_contained(MergeGraph& g, const std::vector<NfpComponent>& components);

struct NfpResult;  // extract.hpp

struct NfpConfig {
    double epsilon_rel = 1e-9;
};

// Full pipeline: decompose both pieces, convex NFPs over all component
// pairs, intersection and midpoint insertion, graph merge, containment
// removal, outline extraction.
NfpResult gen_nfp(const Piece& A, const Piece& B, const NfpConfig& cfg = {});

// Absolute snap tolerance used by gen_nfp for a pair of pieces.
double nfp_epsilon(const Piece& A, const Piece& B, const NfpConfig& cfg);

}  // namespace nfp
