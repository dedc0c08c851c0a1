// Enumeration of connected sub-hypergraphs, weight compositions, and the
// isomorphism-reduced families (hypertrees, perfect-matching hypertrees,
// linear unicyclic hypergraphs) used by the verification harness.
#pragma once

#include <vector>

#include "hgtrace/hypergraph.hpp"

namespace hgtrace {

enum class ShapeKind { tree, contains_cycle };

// A connected sub-hypergraph of a fixed parent, identified by its sorted edge
// indices. kind records whether the sub-hypergraph is acyclic.
struct SubhypergraphClass {
    std::vector<int> edge_indices;
    ShapeKind kind = ShapeKind::tree;
};

// Vertices spanned by the shape, sorted.
std::vector<int> shape_vertices(const Hypergraph& h, const SubhypergraphClass& s);

// Whole edge set of h as a single shape.
SubhypergraphClass whole_shape(const Hypergraph& h);

// All connected nonempty edge subsets with at most max_edges edges, each
// exactly once, sorted lexicographically by edge-index sequence.
std::vector<SubhypergraphClass> connected_subhypergraphs(const Hypergraph& h, int max_edges);

// Same stream restricted to subsets containing every index in `require` and
// none in `forbid`.
std::vector<SubhypergraphClass> filtered_subhypergraphs(const Hypergraph& h,
                                                        const std::vector<int>& require,
                                                        const std::vector<int>& forbid,
                                                        int max_edges);

// Ordered k-tuples of positive integers summing to total, ascending
// lexicographic order; empty when total < k. k >= 1.
std::vector<std::vector<int>> weight_compositions(int k, int total);

// Connected m-uniform hypertrees with exactly k_edges edges, one
// representative per isomorphism class, sorted by canonical form.
std::vector<Hypergraph> enumerate_hypertrees(int m, int k_edges);

// Hypertrees of order m*k with a perfect matching of size k. Empty when
// (m-1) does not divide (k-1).
std::vector<Hypergraph> enumerate_pm_hypertrees(int m, int k_matching);

// Connected linear unicyclic m-uniform hypergraphs with z edges and girth g,
// one representative per isomorphism class.
std::vector<Hypergraph> enumerate_unicyclic(int m, int z, int g);

} // namespace hgtrace
