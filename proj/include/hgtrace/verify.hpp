// Verification harness: executable checks of the relocation inequalities,
// the extremal Estrada certifications, and the structural facts about Euler
// rootings and matched hypertrees, all on concrete desk-scale instances.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hgtrace/hypergraph.hpp"
#include "hgtrace/rational.hpp"

namespace hgtrace {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string title;
    std::vector<CheckLine> lines;
    bool passed() const;
};

// Whether an inequality instance is evaluated on full traces or on the
// whole-edge-set class sum of each hypergraph.
enum class Granularity { full_trace, whole_shape };

// A relocation inequality: sum of values over lhs >= sum over rhs at each d,
// strictly when m | d and d/m >= strict_threshold.
struct PerturbationInstance {
    std::string check;
    std::string name;
    int m = 2;
    std::vector<long> ds;
    std::vector<Hypergraph> lhs, rhs;
    Granularity granularity = Granularity::full_trace;
    long strict_threshold = 2;
};

// Small rooted-tree vocabulary for instance files: "trivial", "edge",
// "path:k", "star:k". The root is always vertex 0 (path end / star center).
Hypergraph tree_from_spec(int m, const std::string& spec);

// Three-edge hyperpath scaffold v0..v3; a nontrivial tree t1 sits at v1 and
// optional trees at the cored vertices of the middle edge. Moves the extra
// tree t from v1 to v2. Full-trace granularity, strict from d/m >= 2.
PerturbationInstance make_tree_relocation(int m, const std::string& t1,
                                          const std::vector<std::string>& hats,
                                          const std::string& t, std::vector<long> ds);

// Loose cycle of the given girth (plus an optional tree at a far junction);
// moves tree t from a cored vertex of a cycle edge to a junction vertex of
// the same edge. Requires m >= 3. Full-trace granularity, strict from 2.
PerturbationInstance make_cycle_junction_relocation(int m, int girth, const std::string& extra,
                                                    const std::string& t, std::vector<long> ds);

// One edge with trees attached at attach.size() of its vertices; moves the
// rooted tree h2 from the first loaded vertex to the free vertex. Full-trace
// granularity, strict from 2.
PerturbationInstance make_pendant_edge_relocation(int m, const std::vector<std::string>& attach,
                                                  const std::string& h2, std::vector<long> ds);

// Same scaffold, whole-shape granularity; strict from d/m >= edge count.
PerturbationInstance make_edge_shape_relocation(int m, const std::vector<std::string>& attach,
                                                const std::string& t, std::vector<long> ds);

// Second tree ttilde placed at both candidate vertices in turn; compares the
// two-term sums. Whole-shape granularity, strict from the edge count.
PerturbationInstance make_edge_shape_relocation_pair(int m, const std::vector<std::string>& attach,
                                                     const std::string& t, const std::string& ttilde,
                                                     std::vector<long> ds);

// Two-edge hyperpath v0 v1 v2 with a nontrivial tree at the end v0 and an
// optional tree at the middle; moves t from v0 to the far end v2.
// Whole-shape granularity, strict from the edge count.
PerturbationInstance make_path_end_shape_relocation(int m, const std::string& t0,
                                                    const std::string& hat1, const std::string& t,
                                                    std::vector<long> ds);

// Girth-3 loose cycle with a nontrivial tree at junction v1 and an optional
// tree at junction v3; moves t2 from v1 to v2. Whole-shape granularity,
// strict from the edge count.
PerturbationInstance make_triangle_shape_relocation(int m, const std::string& t1,
                                                    const std::string& hat3, const std::string& t2,
                                                    std::vector<long> ds);

// Same construction at full-trace granularity, strict from d/m >= 2.
PerturbationInstance make_triangle_trace_relocation(int m, const std::string& t1,
                                                    const std::string& hat3, const std::string& t2,
                                                    std::vector<long> ds);

// Evaluates both sides exactly at every listed d and reports >= / > per the
// strictness regime.
Report check_perturbation(const PerturbationInstance& inst);

// Instance-file support: {"perturbations": [{...}, ...]}.
std::vector<PerturbationInstance> parse_instances(const nlohmann::json& doc);
const char* default_instances_json();
std::vector<PerturbationInstance> default_instances();

// Among all hypertrees of order m*k with a perfect matching, the comb tree
// with (k-1)/(m-1) combs is certified strictly maximal in Estrada index.
// Inconclusive intervals are retried at larger depths before failing.
Report check_extremal_matched_trees(int m, int k, long depth);

// Among all linear unicyclic hypergraphs with z edges and girth 3, the
// triangle with a pendant star of z-3 edges is certified strictly maximal;
// also asserts the winner's star-attachment shape.
Report check_extremal_girth3(int m, int z, long depth);

// Every edge outside the (unique) cycle is pendant on a cycle junction
// vertex: the shape an Estrada maximizer of fixed girth must have.
bool is_cycle_of_stars(const Hypergraph& h);

// Veblen multi-hypertrees (shapes with <= 3 distinct edges, weights <= 2)
// have exactly one Euler rooting, the one rooting each edge at each of its
// vertices equally often.
Report check_tree_root_uniqueness();

// An edge containing a degree-one vertex can appear in an Euler-rootable
// multi-hypergraph only with multiplicity k*m, its cored vertices rooting it
// k times each.
Report check_cored_edge_multiplicity();

// Every matched hypertree with more than one edge splits off a comb at some
// vertex, leaving a smaller matched hypertree, and its matching is unique.
Report check_matched_tree_decomposition(int m, int k);

// Informational: compares the girth-3 star-cycle against every linear
// unicyclic hypergraph with z edges across all girths. Never fails.
Report girth_comparison_sweep(int m, int z, long depth);

} // namespace hgtrace
