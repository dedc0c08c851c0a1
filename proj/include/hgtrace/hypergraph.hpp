// m-uniform simple hypergraphs with 0-based vertex ids, plus the structural
// queries the trace machinery needs: connectivity, linearity, girth, the
// shortest cycle, coalescence and perfect matchings.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hgtrace {

class Hypergraph {
public:
    // Edges are normalized (each sorted, list sorted lexicographically) and
    // validated: every edge has exactly m distinct vertices in [0, n), and no
    // edge appears twice. m >= 2, n >= 1.
    Hypergraph(int m, int n, std::vector<std::vector<int>> edges);

    // Single vertex, no edges.
    static Hypergraph trivial(int m = 2) { return Hypergraph(m, 1, {}); }

    int m() const { return m_; }
    int n() const { return n_; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool operator==(const Hypergraph&) const = default;

private:
    int m_;
    int n_;
    std::vector<std::vector<int>> edges_;
};

// A hypergraph with a distinguished vertex, the attachment point used by
// coalesce().
struct RootedSite {
    Hypergraph host;
    int vertex;
};

int degree(const Hypergraph& h, int v);
std::vector<int> incident_edges(const Hypergraph& h, int v);
bool is_connected(const Hypergraph& h);

// Every pair of edges shares at most one vertex.
bool is_linear(const Hypergraph& h);

// A cycle of length l >= 2 is a closed walk v0 e1 v1 ... el v0 with all
// vertices and edges distinct and {v_i, v_{i+1}} contained in e_{i+1}.
struct CycleInfo {
    std::vector<int> vertices; // u_1 .. u_l
    std::vector<int> edges;    // e_i joins u_i and u_{i+1 mod l}
    int length() const { return static_cast<int>(edges.size()); }
};

// Shortest cycle, deterministic representative; nullopt when acyclic.
std::optional<CycleInfo> find_shortest_cycle(const Hypergraph& h);

// Same search restricted to the given edge indices; reported vertex and edge
// ids still refer to h.
std::optional<CycleInfo> find_shortest_cycle(const Hypergraph& h,
                                             const std::vector<int>& edge_subset);

// Length of the shortest cycle; nullopt means infinity.
std::optional<int> girth(const Hypergraph& h);

// k(m-1) + 1 - n for a connected hypergraph: 0 for hypertrees, 1 for linear
// unicyclic ones.
long cycle_excess(const Hypergraph& h);

enum class Topology { hypertree, linear_unicyclic, unsupported };
Topology classify_topology(const Hypergraph& h);

// Vertex identification: keeps the first operand's ids, maps b's vertex onto
// a's, renumbers b's remaining vertices in increasing order starting at a.n().
// Both hosts must be connected and have equal m unless one has no edges.
Hypergraph coalesce(const Hypergraph& a, int va, const Hypergraph& b, int vb);
Hypergraph coalesce(const RootedSite& a, const RootedSite& b);

// Matching = set of pairwise disjoint edges covering every vertex; returns
// edge indices or nullopt.
std::optional<std::vector<int>> find_perfect_matching(const Hypergraph& h);
bool has_perfect_matching(const Hypergraph& h);
long count_perfect_matchings(const Hypergraph& h, long cap);

} // namespace hgtrace
