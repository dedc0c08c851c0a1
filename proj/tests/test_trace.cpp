#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hgtrace/errors.hpp"
#include "hgtrace/families.hpp"
#include "hgtrace/subenum.hpp"
#include "hgtrace/trace.hpp"

using namespace hgtrace;

namespace {

WeightedSubhypergraph weighted(const Hypergraph& h, std::vector<int> edge_indices,
                               std::vector<int> weights) {
    SubhypergraphClass s;
    s.edge_indices = std::move(edge_indices);
    s.kind = find_shortest_cycle(h, s.edge_indices).has_value() ? ShapeKind::contains_cycle
                                                                : ShapeKind::tree;
    return WeightedSubhypergraph{std::move(s), std::move(weights)};
}

const Hypergraph kTriangle3(3, 6, {{0, 1, 3}, {1, 2, 4}, {0, 2, 5}});

} // namespace

TEST_CASE("weighted degree sums shape weights at the vertex") {
    Hypergraph p = hyperpath(3, 2); // edges {0,1,3}, {1,2,4}
    auto ws = weighted(p, {0, 1}, {2, 3});
    CHECK(weighted_degree(p, ws, 1) == 5); // shared spine vertex
    CHECK(weighted_degree(p, ws, 0) == 2);
    CHECK(weighted_degree(p, ws, 4) == 3);

    auto first = weighted(p, {0}, {2});
    CHECK_THROWS_AS(weighted_degree(p, first, 4), std::invalid_argument);
}

TEST_CASE("tree coefficient on frozen instances") {
    Hypergraph e3(3, 3, {{0, 1, 2}});
    CHECK(c_tree(e3, weighted(e3, {0}, {1})) == Rational(3, 8));
    CHECK(c_tree(e3, weighted(e3, {0}, {2})) == Rational(3, 16));

    // graph edge with weight w contributes 1/w
    Hypergraph k2(2, 2, {{0, 1}});
    for (int w = 1; w <= 5; ++w)
        CHECK(c_tree(k2, weighted(k2, {0}, {w})) == Rational(1, w));

    Hypergraph p = hyperpath(3, 2);
    CHECK(c_tree(p, weighted(p, {0, 1}, {1, 1})) == Rational(9, 32));

    CHECK_THROWS_AS(c_tree(p, weighted(p, {0, 1}, {1})), std::invalid_argument);
    CHECK_THROWS_AS(c_tree(p, weighted(p, {0, 1}, {1, 0})), std::invalid_argument);
}

TEST_CASE("partial tree factor omits excluded degree factorials") {
    Hypergraph p = hyperpath(3, 2);
    auto ws = weighted(p, {0, 1}, {2, 3});
    Rational full = c_tree(p, ws);
    CHECK(partial_tree_factor(p, ws, {}) == full);
    // spine vertex 1 has weighted degree 5, so its factor is 4!
    CHECK(partial_tree_factor(p, ws, {1}) * factorial(4) == full);
    // vertex 0 has weighted degree 2, factor 1!
    CHECK(partial_tree_factor(p, ws, {0}) == full);
    CHECK(partial_tree_factor(p, ws, {0, 1}) * factorial(4) == full);
}

TEST_CASE("cycle kernel value and symmetry") {
    CHECK(omega_cycle({1, 1, 1}) == Rational(4));
    // Non-uniform weights, confirmed against the rooting oracle on the loose
    // triangle: each class value below back-solves to exactly this kernel.
    CHECK(omega_cycle({2, 1, 1}) == Rational(7, 2));
    CHECK(omega_cycle({2, 2, 1}) == Rational(3));
    CHECK_THROWS_AS(omega_cycle({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(omega_cycle({1, 0, 1}), std::invalid_argument);

    for (std::vector<int> base : {std::vector<int>{2, 1, 1}, std::vector<int>{3, 1, 2},
                                  std::vector<int>{2, 2, 1, 3}}) {
        Rational ref = omega_cycle(base);
        std::vector<int> rot = base;
        for (std::size_t r = 1; r < base.size(); ++r) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            CHECK(omega_cycle(rot) == ref);
        }
        std::vector<int> rev(base.rbegin(), base.rend());
        CHECK(omega_cycle(rev) == ref);
    }
}

TEST_CASE("odd cycle kernel value and symmetry") {
    CHECK(omega_cycle_odd({1, 1, 1}) == Rational(2));
    for (std::vector<int> base : {std::vector<int>{2, 1, 1}, std::vector<int>{2, 1, 3}}) {
        Rational ref = omega_cycle_odd(base);
        std::vector<int> rot = base;
        for (std::size_t r = 1; r < base.size(); ++r) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            CHECK(omega_cycle_odd(rot) == ref);
        }
        std::vector<int> rev(base.rbegin(), base.rend());
        CHECK(omega_cycle_odd(rev) == ref);
    }
}

TEST_CASE("unicyclic coefficient on the loose triangle") {
    CHECK(c_unicyclic(kTriangle3, weighted(kTriangle3, {0, 1, 2}, {1, 1, 1})) == Rational(9, 8));
    CHECK(c_unicyclic(kTriangle3, weighted(kTriangle3, {0, 1, 2}, {2, 1, 1})) == Rational(63, 32));
    CHECK(c_unicyclic(kTriangle3, weighted(kTriangle3, {0, 1, 2}, {2, 2, 1})) == Rational(81, 16));

    auto ws = weighted(kTriangle3, {0, 1, 2}, {2, 1, 1});
    Rational full = c_unicyclic(kTriangle3, ws);
    CHECK(partial_unicyclic_factor(kTriangle3, ws, {}) == full);
    // junction of the two weight-1 edges has weighted degree 2
    CHECK(partial_unicyclic_factor(kTriangle3, ws, {2}) == full);
}

TEST_CASE("shape trace sums compositions") {
    // single edge of the triangle at d=3: only composition (1)
    SubhypergraphClass one{{0}, ShapeKind::tree};
    CHECK(tr_d(kTriangle3, one, 3) == Rational(3, 8));
    CHECK(tr_d(kTriangle3, one, 4) == Rational(0));

    // the full cycle shape first contributes at d = 9
    CHECK(tr_d(kTriangle3, whole_shape(kTriangle3), 3) == Rational(0));
    CHECK(tr_d(kTriangle3, whole_shape(kTriangle3), 6) == Rational(0));
    CHECK(tr_d(kTriangle3, whole_shape(kTriangle3), 9) == Rational(9, 8));
}

TEST_CASE("trace on frozen hypertree instances") {
    Hypergraph e3(3, 3, {{0, 1, 2}});
    CHECK(trace(e3, 0) == Rational(12)); // 3 * 2^2 eigenvalues
    CHECK(trace(e3, 3) == Rational(9));
    CHECK(trace(e3, 6) == Rational(9));

    Hypergraph p23 = hyperpath(3, 2);
    CHECK(trace(p23, 3) == Rational(72));
    CHECK(trace(p23, 6) == Rational(126));

    Hypergraph k2(2, 2, {{0, 1}});
    CHECK(trace(k2, 0) == Rational(2));
    for (long d = 2; d <= 10; d += 2) CHECK(trace(k2, d) == Rational(2));

    // 3-vertex path: eigenvalues sqrt(2), 0, -sqrt(2)
    Hypergraph p2 = hyperpath(2, 2);
    CHECK(trace(p2, 2) == Rational(4));
    CHECK(trace(p2, 4) == Rational(8));
    CHECK(trace(p2, 6) == Rational(16));

    // 4-star: eigenvalues 2, 0, 0, 0, -2
    Hypergraph s4 = hyperstar(2, 4);
    CHECK(trace(s4, 2) == Rational(8));
    CHECK(trace(s4, 4) == Rational(32));
}

TEST_CASE("trace on frozen unicyclic instances") {
    CHECK(trace(kTriangle3, 0) == Rational(192)); // 6 * 2^5
    CHECK(trace(kTriangle3, 3) == Rational(216));
    CHECK(trace(kTriangle3, 6) == Rational(540));

    Hypergraph with_pendant(3, 8, {{0, 1, 3}, {1, 2, 4}, {0, 2, 5}, {0, 6, 7}});
    CHECK(trace(with_pendant, 3) == Rational(1152));
    CHECK(trace(with_pendant, 6) == Rational(3312));

    // graph triangle: eigenvalues 2, -1, -1
    Hypergraph c3 = power_of_graph(cycle_graph(3), 2);
    long expect[] = {0, 6, 6, 18, 30, 66};
    for (long d = 1; d <= 6; ++d) CHECK(trace(c3, d) == Rational(expect[d - 1]));
    // d = 8 and d = 10 exercise cycle classes with non-uniform edge weights
    CHECK(trace(c3, 8) == Rational(258));
    CHECK(trace(c3, 10) == Rational(1026));

    // square: eigenvalues 2, 0, 0, -2
    Hypergraph c4 = power_of_graph(cycle_graph(4), 2);
    CHECK(trace(c4, 3) == Rational(0));
    CHECK(trace(c4, 4) == Rational(32));
    CHECK(trace(c4, 6) == Rational(128));

    // pentagon: closed 5-walks go around one way or the other
    Hypergraph c5 = power_of_graph(cycle_graph(5), 2);
    CHECK(trace(c5, 3) == Rational(0));
    CHECK(trace(c5, 5) == Rational(10));
}

TEST_CASE("zero law off the divisibility lattice") {
    std::vector<Hypergraph> corpus = {Hypergraph(3, 3, {{0, 1, 2}}), hyperpath(3, 3),
                                      hyperstar(3, 3), kTriangle3, cycle_with_star(3, 3, 1),
                                      hyperpath(4, 2), loose_cycle(4, 3)};
    for (const auto& h : corpus)
        for (long d = 1; d <= 3L * h.m(); ++d)
            if (d % h.m() != 0) CHECK(trace(h, d) == Rational(0));
}

TEST_CASE("breakdown terms are the scaled nonzero shape traces") {
    Hypergraph with_pendant(3, 8, {{0, 1, 3}, {1, 2, 4}, {0, 2, 5}, {0, 6, 7}});
    auto [total, terms] = trace_breakdown(with_pendant, 6);
    CHECK(total == Rational(3312));
    CHECK(terms.size() == 9); // four single edges, five connected pairs
    Rational sum = 0;
    Rational scale = Rational(6) * Rational(int_pow(2, 8));
    for (const auto& t : terms) {
        CHECK(t.value != Rational(0));
        CHECK(t.value == scale * tr_d(with_pendant, t.shape, 6));
        sum += t.value;
    }
    CHECK(sum == total);
}

TEST_CASE("trace input validation") {
    CHECK_THROWS_AS(trace(kTriangle3, -1), std::invalid_argument);
    Hypergraph theta(2, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK_THROWS_AS(trace(theta, 4), UnsupportedTopologyError);
    Hypergraph nonlinear(3, 4, {{0, 1, 2}, {0, 1, 3}});
    CHECK_THROWS_AS(trace(nonlinear, 3), UnsupportedTopologyError);

    CHECK(trace(Hypergraph::trivial(2), 2) == Rational(0));
    CHECK(trace(Hypergraph::trivial(2), 0) == Rational(1));
}

TEST_CASE("eigenvalue count") {
    CHECK(eigenvalue_count(Hypergraph(3, 3, {{0, 1, 2}})) == BigInt(12));
    CHECK(eigenvalue_count(kTriangle3) == BigInt(192));
    CHECK(eigenvalue_count(Hypergraph(2, 2, {{0, 1}})) == BigInt(2));
}

TEST_CASE("factorial inequality on sample points") {
    CHECK(factorial_inequality_check(1, 1, 0, 0));
    CHECK(factorial_inequality_check(3, 2, 4, 1));
    CHECK(factorial_inequality_check(6, 6, 6, 6));
    CHECK_THROWS_AS(factorial_inequality_check(0, 1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(factorial_inequality_check(1, 1, -1, 0), std::invalid_argument);
}
