// Closed-form d-th trace engine for hypertrees and linear unicyclic
// hypergraphs. Every quantity is an exact rational; the public entry point is
// trace(), which sums per-shape contributions tr_d over all connected
// sub-hypergraphs and scales by d(m-1)^n.
#pragma once

#include <utility>
#include <vector>

#include "hgtrace/hypergraph.hpp"
#include "hgtrace/rational.hpp"
#include "hgtrace/subenum.hpp"

namespace hgtrace {

// A shape together with one positive integer weight per edge; stands for the
// multi-hypergraph in which edge e appears m*weight(e) times.
struct WeightedSubhypergraph {
    SubhypergraphClass shape;
    std::vector<int> weights; // aligned with shape.edge_indices
};

// Sum of weights over edges incident to v; v must lie in the shape.
long weighted_degree(const Hypergraph& h, const WeightedSubhypergraph& ws, int v);

// Contribution of a weighted tree shape:
//   (m-1)^{-|V|} m^{(m-2)|E|} prod_v (d_v-1)! prod_e w^{m-1} / (w!)^m.
Rational c_tree(const Hypergraph& h, const WeightedSubhypergraph& ws);

// c_tree with the (d_v-1)! factors of the excluded vertices left out.
Rational partial_tree_factor(const Hypergraph& h, const WeightedSubhypergraph& ws,
                             const std::vector<int>& excluded);

// Cycle kernel over the cycle weights (w_1..w_n), n >= 3, cyclic w_0 = w_n:
//   sum_{x=0}^{2 w_min} prod_i (w_i!)^2 / ((w_{i-1}+w_min-x)! (w_i-w_min+x)!)
//                      * sum_{l=0}^{n-1} prod_{i<=l} (w_i+w_min-x)
//                                        prod_{i>=l+2} (w_i-w_min+x).
Rational omega_cycle(const std::vector<int>& omega0);

// Kernel of the odd cycle classes that exist only for m = 2, where cycle edge
// i appears 2 w_i - 1 times. Derived by the same balance argument as
// omega_cycle; cross-checked against the rooting oracle and adjacency-matrix
// powers.
Rational omega_cycle_odd(const std::vector<int>& w);

// Contribution of a weighted cycle-containing shape:
//   2 (m-1)^{-|V|} m^{(m-2)|E|-1} prod_v (d_v-1)! prod_e w^{m-1}/(w!)^m
//     * omega_cycle(cycle weights).
Rational c_unicyclic(const Hypergraph& h, const WeightedSubhypergraph& ws);

// c_unicyclic with the (d_v-1)! factors of the excluded vertices left out.
Rational partial_unicyclic_factor(const Hypergraph& h, const WeightedSubhypergraph& ws,
                                  const std::vector<int>& excluded);

// Total weight-class contribution of one shape at depth d; zero when no
// weight assignment fits.
Rational tr_d(const Hypergraph& h, const SubhypergraphClass& shape, long d);

// Number of adjacency-tensor eigenvalues, n(m-1)^{n-1}; also the value of the
// 0-th trace.
BigInt eigenvalue_count(const Hypergraph& h);

// d-th trace of the adjacency tensor. h must be connected and either a
// hypertree or linear unicyclic; otherwise UnsupportedTopologyError.
Rational trace(const Hypergraph& h, long d);

struct TraceTerm {
    SubhypergraphClass shape;
    Rational value;
};

// trace() together with the per-shape breakdown.
std::pair<Rational, std::vector<TraceTerm>> trace_breakdown(const Hypergraph& h, long d);

// (x+y+a)! b! + (x+y+b)! a! > (x+a)! (y+b)! + (x+b)! (y+a)!
// for x, y >= 1 and a, b >= 0; evaluated exactly.
bool factorial_inequality_check(long x, long y, long a, long b);

} // namespace hgtrace
