// Independent brute-force trace oracle. It enumerates rooted-edge multisets,
// filters the Eulerian ones, and evaluates arborescence counts by exact
// determinants. Nothing here shares code with the closed-form engine beyond
// the hypergraph container, so agreement between the two is meaningful.
#pragma once

#include <tuple>
#include <vector>

#include "hgtrace/hypergraph.hpp"
#include "hgtrace/rational.hpp"

namespace hgtrace {

// A multiset of rooted edges: (edge index, root vertex, count), count > 0,
// the root always a vertex of the edge.
struct RootAssignment {
    std::vector<std::tuple<int, int, long>> counts;
};

// Dense multi-digraph on a fixed vertex range.
struct MultiDigraph {
    int n = 0;
    std::vector<std::vector<long>> arcs; // arcs[u][v] = multiplicity

    explicit MultiDigraph(int n_);
    long out_degree(int v) const;
    long in_degree(int v) const;
};

// Union of rooted directed stars: each rooted edge contributes `count` arcs
// from the root to every other vertex of the edge.
MultiDigraph build_digraph(const Hypergraph& h, const RootAssignment& f);

// Every vertex balanced (in = out) and the arcs weakly connected, ignoring
// isolated vertices. A digraph with no arcs is not considered Eulerian.
bool is_eulerian(const MultiDigraph& g);

// Number of spanning arborescences converging to a fixed root, over the
// vertices of positive degree; root choice is immaterial for Eulerian graphs.
// Computed as a principal minor of the out-degree Laplacian (fraction-free
// elimination, exact).
BigInt arborescence_count(const MultiDigraph& g);

// Number of root-sorted edge tuples realizing the multiset:
// prod_v r_v! / prod_{(e,v)} count!.
BigInt ordering_count(const RootAssignment& f);

// ordering_count * arborescences / prod_{v in V(F)} outdegree(v);
// f must be Eulerian.
Rational rooting_value(const Hypergraph& h, const RootAssignment& f);

// All Euler root assignments of the multi-hypergraph that uses edge
// edge_indices[i] exactly multiplicities[i] times.
std::vector<RootAssignment> euler_rootings(const Hypergraph& h,
                                           const std::vector<int>& edge_indices,
                                           const std::vector<long>& multiplicities);

// Sum of rooting_value over euler_rootings: the exact class value of one
// edge-multiplicity assignment.
Rational c_class_oracle(const Hypergraph& h, const std::vector<int>& edge_indices,
                        const std::vector<long>& multiplicities);

inline constexpr long kDefaultOracleBudget = 10'000'000;

// d-th trace by full enumeration of rooted-edge multisets. Throws
// ResourceLimitError when the multiset count exceeds `budget`. `threads`
// splits the enumeration by the first pair's count.
Rational trace_bruteforce(const Hypergraph& h, long d, int threads = 1,
                          long budget = kDefaultOracleBudget);

// Trace of the d-th adjacency-matrix power; m = 2 only. A second independent
// route for ordinary graphs.
BigInt matrix_power_trace(const Hypergraph& h, long d);

} // namespace hgtrace
