#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "hgtrace/errors.hpp"
#include "hgtrace/families.hpp"
#include "hgtrace/oracle.hpp"
#include "hgtrace/subenum.hpp"
#include "hgtrace/trace.hpp"

using namespace hgtrace;

namespace {

MultiDigraph directed_cycle(int n, long mult) {
    MultiDigraph g(n);
    for (int v = 0; v < n; ++v) g.arcs[static_cast<std::size_t>(v)][static_cast<std::size_t>((v + 1) % n)] = mult;
    return g;
}

const Hypergraph kTriangle3(3, 6, {{0, 1, 3}, {1, 2, 4}, {0, 2, 5}});

} // namespace

TEST_CASE("digraph degrees and eulerian test") {
    MultiDigraph g = directed_cycle(3, 1);
    CHECK(g.out_degree(0) == 1);
    CHECK(g.in_degree(0) == 1);
    CHECK(is_eulerian(g));

    // unbalanced vertex
    MultiDigraph bad = directed_cycle(3, 1);
    bad.arcs[0][2] += 1;
    CHECK_FALSE(is_eulerian(bad));

    // two balanced but disconnected cycles
    MultiDigraph split(6);
    split.arcs[0][1] = split.arcs[1][0] = 1;
    split.arcs[4][5] = split.arcs[5][4] = 1;
    CHECK_FALSE(is_eulerian(split));

    // isolated vertices are ignored
    MultiDigraph padded(5);
    padded.arcs[1][3] = padded.arcs[3][1] = 2;
    CHECK(is_eulerian(padded));

    CHECK_FALSE(is_eulerian(MultiDigraph(3)));
}

TEST_CASE("arborescence counts on known digraphs") {
    CHECK(arborescence_count(directed_cycle(3, 1)) == BigInt(1));
    CHECK(arborescence_count(directed_cycle(3, 2)) == BigInt(4));
    CHECK(arborescence_count(directed_cycle(5, 1)) == BigInt(1));

    // complete symmetric digraph on 5 vertices: 5^3 spanning arborescences
    MultiDigraph k5(5);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            if (a != b) k5.arcs[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    CHECK(arborescence_count(k5) == BigInt(125));

    // isolated vertices do not participate
    MultiDigraph padded(6);
    for (int v = 0; v < 3; ++v)
        padded.arcs[static_cast<std::size_t>(v + 1)][static_cast<std::size_t>(((v + 1) % 3) + 1)] = 1;
    CHECK(arborescence_count(padded) == BigInt(1));
}

TEST_CASE("ordering count multiplies per-root multinomials") {
    // vertex 0 roots edge 0 twice and edge 1 once: 3!/2! = 3 orderings
    RootAssignment f{{{0, 0, 2}, {1, 0, 1}}};
    CHECK(ordering_count(f) == BigInt(3));
    RootAssignment g{{{0, 0, 1}, {1, 1, 1}}};
    CHECK(ordering_count(g) == BigInt(1));
    RootAssignment h{{{0, 0, 2}, {1, 0, 2}, {2, 1, 3}}};
    CHECK(ordering_count(h) == BigInt(6)); // 4!/(2!2!) * 3!/3!
}

TEST_CASE("single edge rooting structure") {
    Hypergraph e3(3, 3, {{0, 1, 2}});
    auto roots = euler_rootings(e3, {0}, {3});
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].counts.size() == 3); // every vertex roots once
    for (const auto& [ei, v, c] : roots[0].counts) {
        CHECK(ei == 0);
        CHECK(c == 1);
        CHECK(v >= 0);
        CHECK(v <= 2);
    }
    // C = 2! * tau / (2*2*2) with tau = 3 for the doubled triangle digraph
    CHECK(rooting_value(e3, roots[0]) == Rational(3, 8));
    CHECK(c_class_oracle(e3, {0}, {3}) == Rational(3, 8));
    CHECK(c_class_oracle(e3, {0}, {6}) == Rational(3, 16));

    CHECK(euler_rootings(e3, {0}, {2}).empty());
    CHECK(euler_rootings(e3, {0}, {4}).empty());
    CHECK_THROWS_AS(euler_rootings(e3, {0}, {3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(euler_rootings(e3, {0}, {0}), std::invalid_argument);
}

TEST_CASE("class values match the closed forms") {
    // hypertree classes
    Hypergraph p23 = hyperpath(3, 2);
    SubhypergraphClass both{{0, 1}, ShapeKind::tree};
    CHECK(c_class_oracle(p23, {0, 1}, {3, 3}) ==
          c_tree(p23, WeightedSubhypergraph{both, {1, 1}}));
    CHECK(c_class_oracle(p23, {0, 1}, {6, 3}) ==
          c_tree(p23, WeightedSubhypergraph{both, {2, 1}}));

    // unicyclic classes on the loose triangle
    SubhypergraphClass cyc{{0, 1, 2}, ShapeKind::contains_cycle};
    for (std::vector<int> w : {std::vector<int>{1, 1, 1}, std::vector<int>{2, 1, 1},
                               std::vector<int>{2, 2, 1}}) {
        std::vector<long> mult;
        for (int wi : w) mult.push_back(3L * wi);
        CHECK(c_class_oracle(kTriangle3, {0, 1, 2}, mult) ==
              c_unicyclic(kTriangle3, WeightedSubhypergraph{cyc, w}));
    }
    CHECK(c_class_oracle(kTriangle3, {0, 1, 2}, {3, 3, 3}) == Rational(9, 8));
}

TEST_CASE("odd graph cycle classes match the oracle") {
    Hypergraph c3 = power_of_graph(cycle_graph(3), 2);
    // d=3 gives the single class with every edge odd once
    CHECK(tr_d(c3, whole_shape(c3), 3) == c_class_oracle(c3, {0, 1, 2}, {1, 1, 1}));
    CHECK(c_class_oracle(c3, {0, 1, 2}, {1, 1, 1}) == Rational(2));
    // d=5: three rotations of the (3,1,1) multiplicity class
    CHECK(tr_d(c3, whole_shape(c3), 5) == Rational(3) * c_class_oracle(c3, {0, 1, 2}, {3, 1, 1}));
    // mixed parities are never eulerian for the triangle
    CHECK(euler_rootings(c3, {0, 1, 2}, {2, 1, 1}).empty());
}

TEST_CASE("bruteforce trace against frozen values and the closed form") {
    Hypergraph e3(3, 3, {{0, 1, 2}});
    CHECK(trace_bruteforce(e3, 0) == Rational(12));
    CHECK(trace_bruteforce(e3, 3) == Rational(9));
    CHECK(trace_bruteforce(e3, 6) == Rational(9));
    CHECK(trace_bruteforce(e3, 4) == Rational(0));

    Hypergraph p23 = hyperpath(3, 2);
    CHECK(trace_bruteforce(p23, 6) == trace(p23, 6));

    CHECK(trace_bruteforce(kTriangle3, 3) == Rational(216));

    // graphs: all d, not only multiples of m
    Hypergraph p2 = hyperpath(2, 2);
    for (long d = 1; d <= 8; ++d) CHECK(trace_bruteforce(p2, d) == trace(p2, d));
}

TEST_CASE("bruteforce is independent of the thread count") {
    Hypergraph p23 = hyperpath(3, 2);
    CHECK(trace_bruteforce(p23, 6, 4) == trace_bruteforce(p23, 6, 1));
    Hypergraph c3 = power_of_graph(cycle_graph(3), 2);
    CHECK(trace_bruteforce(c3, 6, 3) == trace_bruteforce(c3, 6, 1));
    Hypergraph e3(3, 3, {{0, 1, 2}});
    CHECK(trace_bruteforce(e3, 6, 8) == Rational(9));
}

TEST_CASE("budget refusal names the counts") {
    Hypergraph s3 = hyperstar(3, 3);
    try {
        trace_bruteforce(s3, 12, 1, 50);
        FAIL("expected a budget error");
    } catch (const ResourceLimitError& e) {
        std::string msg = e.what();
        CHECK(msg.find("budget") != std::string::npos);
        CHECK(msg.find("50") != std::string::npos);
    }
}

TEST_CASE("matrix power trace") {
    Hypergraph c3 = power_of_graph(cycle_graph(3), 2);
    long expect[] = {0, 6, 6, 18, 30, 66};
    for (long d = 1; d <= 6; ++d) CHECK(matrix_power_trace(c3, d) == BigInt(expect[d - 1]));
    CHECK(matrix_power_trace(c3, 0) == BigInt(3));

    Hypergraph p3 = hyperpath(2, 3);
    for (long d = 0; d <= 8; ++d)
        CHECK(Rational(matrix_power_trace(p3, d)) == trace_bruteforce(p3, d));

    CHECK_THROWS_AS(matrix_power_trace(Hypergraph(3, 3, {{0, 1, 2}}), 2),
                    std::invalid_argument);
}
