// Constructors for the named families: powers of graphs, hyperpaths,
// hyperstars, loose cycles, combs, the comb trees T_{m,t} and the
// cycle-with-pendant-stars S^m_{n,t}.
#pragma once

#include <utility>
#include <vector>

#include "hgtrace/hypergraph.hpp"

namespace hgtrace {

// Simple undirected graph given as an edge list.
struct GraphSpec {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

GraphSpec path_graph(int k);  // k edges, vertices 0..k
GraphSpec star_graph(int k);  // k edges around center 0
GraphSpec cycle_graph(int n); // n >= 3

// m-th power: every 2-edge gains m-2 fresh vertices. Original vertices keep
// their ids; inserted vertices follow, grouped by edge in edge-list order.
// m == 2 returns the graph itself as a 2-uniform hypergraph.
Hypergraph power_of_graph(const GraphSpec& g, int m);

Hypergraph hyperpath(int m, int k);   // P_k^m, k >= 1
Hypergraph hyperstar(int m, int k);   // S_k^m, k >= 1
Hypergraph loose_cycle(int m, int n); // C_n^m, n >= 3

// Base edge {u, v_1..v_{m-1}} with one pendant edge at every v_i; u is the
// attachment endpoint and gets id 0.
Hypergraph comb(int m);

// T_{m,t}: an edge with t combs coalesced onto one of its vertices (id 0).
// Has a perfect matching of size t(m-1)+1.
Hypergraph comb_tree(int m, int t);

// S^m_{n,t}: loose cycle C_n^m with t pendant edges attached at one original
// (degree-2) cycle vertex.
Hypergraph cycle_with_star(int m, int n, int t);

} // namespace hgtrace
