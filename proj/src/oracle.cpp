#include "hgtrace/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <stdexcept>
#include <thread>

#include "hgtrace/errors.hpp"

namespace hgtrace {

MultiDigraph::MultiDigraph(int n_)
    : n(n_), arcs(static_cast<std::size_t>(n_), std::vector<long>(static_cast<std::size_t>(n_), 0)) {}

long MultiDigraph::out_degree(int v) const {
    long s = 0;
    for (long a : arcs[static_cast<std::size_t>(v)]) s += a;
    return s;
}

long MultiDigraph::in_degree(int v) const {
    long s = 0;
    for (int u = 0; u < n; ++u) s += arcs[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    return s;
}

MultiDigraph build_digraph(const Hypergraph& h, const RootAssignment& f) {
    MultiDigraph g(h.n());
    for (const auto& [ei, root, cnt] : f.counts) {
        const auto& e = h.edges()[static_cast<std::size_t>(ei)];
        for (int u : e)
            if (u != root) g.arcs[static_cast<std::size_t>(root)][static_cast<std::size_t>(u)] += cnt;
    }
    return g;
}

bool is_eulerian(const MultiDigraph& g) {
    int first = -1;
    for (int v = 0; v < g.n; ++v) {
        long out = g.out_degree(v), in = g.in_degree(v);
        if (out != in) return false;
        if (out > 0 && first == -1) first = v;
    }
    if (first == -1) return false;
    // Weak connectivity over the vertices of positive degree.
    std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
    std::queue<int> q;
    q.push(first);
    seen[static_cast<std::size_t>(first)] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u = 0; u < g.n; ++u) {
            if (seen[static_cast<std::size_t>(u)]) continue;
            if (g.arcs[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] > 0 ||
                g.arcs[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] > 0) {
                seen[static_cast<std::size_t>(u)] = 1;
                q.push(u);
            }
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (g.out_degree(v) > 0 && !seen[static_cast<std::size_t>(v)]) return false;
    return true;
}

namespace {

// Determinant by fraction-free elimination; every division is exact.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
    const std::size_t k = m.size();
    if (k == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (m[i][i] == 0) {
            std::size_t piv = i + 1;
            while (piv < k && m[piv][i] == 0) ++piv;
            if (piv == k) return 0;
            std::swap(m[i], m[piv]);
            sign = -sign;
        }
        for (std::size_t r = i + 1; r < k; ++r) {
            for (std::size_t c = i + 1; c < k; ++c)
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
            m[r][i] = 0;
        }
        prev = m[i][i];
    }
    return sign * m[k - 1][k - 1];
}

} // namespace

BigInt arborescence_count(const MultiDigraph& g) {
    std::vector<int> active;
    for (int v = 0; v < g.n; ++v)
        if (g.out_degree(v) > 0 || g.in_degree(v) > 0) active.push_back(v);
    if (active.empty()) throw std::invalid_argument("arborescence_count: empty digraph");
    if (active.size() == 1) return 1;
    // Out-degree Laplacian minor at the first active vertex counts the
    // spanning trees converging to it.
    const std::size_t k = active.size() - 1;
    std::vector<std::vector<BigInt>> lap(k, std::vector<BigInt>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        int v = active[i + 1];
        lap[i][i] = g.out_degree(v);
        for (std::size_t j = 0; j < k; ++j) {
            int u = active[j + 1];
            if (u != v) lap[i][j] -= g.arcs[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
        }
    }
    return bareiss_det(std::move(lap));
}

BigInt ordering_count(const RootAssignment& f) {
    std::vector<std::pair<int, long>> per_root; // (vertex, edges rooted there)
    BigInt denom = 1;
    for (const auto& [ei, root, cnt] : f.counts) {
        (void)ei;
        denom *= factorial(cnt);
        auto it = std::find_if(per_root.begin(), per_root.end(),
                               [&](const auto& p) { return p.first == root; });
        if (it == per_root.end()) per_root.emplace_back(root, cnt);
        else it->second += cnt;
    }
    BigInt num = 1;
    for (const auto& [v, r] : per_root) {
        (void)v;
        num *= factorial(r);
    }
    return num / denom;
}

Rational rooting_value(const Hypergraph& h, const RootAssignment& f) {
    MultiDigraph g = build_digraph(h, f);
    BigInt denom = 1;
    for (int v = 0; v < g.n; ++v) {
        long out = g.out_degree(v);
        if (out > 0) denom *= out;
        else if (g.in_degree(v) > 0)
            throw std::invalid_argument("rooting_value: assignment is not Eulerian");
    }
    return Rational(ordering_count(f) * arborescence_count(g)) / Rational(denom);
}

namespace {

// Cartesian product over edges of the ways to distribute each multiplicity
// over the edge's vertices.
void rooting_rec(const Hypergraph& h, const std::vector<int>& eis,
                 const std::vector<long>& mult, std::size_t idx, RootAssignment& acc,
                 std::vector<RootAssignment>& out) {
    if (idx == eis.size()) {
        if (is_eulerian(build_digraph(h, acc))) out.push_back(acc);
        return;
    }
    const auto& e = h.edges()[static_cast<std::size_t>(eis[idx])];
    std::vector<long> part(e.size(), 0);
    // Enumerate nonnegative compositions of mult[idx] over the edge vertices.
    auto rec = [&](auto&& self, std::size_t pos, long rem) -> void {
        if (pos + 1 == part.size()) {
            part[pos] = rem;
            std::size_t base = acc.counts.size();
            for (std::size_t i = 0; i < part.size(); ++i)
                if (part[i] > 0)
                    acc.counts.emplace_back(eis[idx], e[i], part[i]);
            rooting_rec(h, eis, mult, idx + 1, acc, out);
            acc.counts.resize(base);
            return;
        }
        for (long c = 0; c <= rem; ++c) {
            part[pos] = c;
            self(self, pos + 1, rem - c);
        }
    };
    rec(rec, 0, mult[idx]);
}

} // namespace

std::vector<RootAssignment> euler_rootings(const Hypergraph& h,
                                           const std::vector<int>& edge_indices,
                                           const std::vector<long>& multiplicities) {
    if (edge_indices.size() != multiplicities.size())
        throw std::invalid_argument("euler_rootings: multiplicities must align with edges");
    for (long mu : multiplicities)
        if (mu < 1) throw std::invalid_argument("euler_rootings: multiplicities must be positive");
    std::vector<RootAssignment> out;
    RootAssignment acc;
    rooting_rec(h, edge_indices, multiplicities, 0, acc, out);
    return out;
}

Rational c_class_oracle(const Hypergraph& h, const std::vector<int>& edge_indices,
                        const std::vector<long>& multiplicities) {
    Rational sum = 0;
    for (const auto& f : euler_rootings(h, edge_indices, multiplicities))
        sum += rooting_value(h, f);
    return sum;
}

namespace {

struct PairList {
    std::vector<std::pair<int, int>> pairs; // (edge index, root vertex)
};

// Sums rooting values over all multisets of size `rem` drawn from
// pairs[idx..], given the counts fixed so far in acc.
Rational multiset_sum(const Hypergraph& h, const PairList& pl, std::size_t idx, long rem,
                      RootAssignment& acc) {
    if (rem == 0 || idx + 1 == pl.pairs.size()) {
        std::size_t base = acc.counts.size();
        if (rem > 0)
            acc.counts.emplace_back(pl.pairs[idx].first, pl.pairs[idx].second, rem);
        Rational v = 0;
        if (is_eulerian(build_digraph(h, acc))) v = rooting_value(h, acc);
        acc.counts.resize(base);
        return v;
    }
    Rational sum = 0;
    for (long c = 0; c <= rem; ++c) {
        std::size_t base = acc.counts.size();
        if (c > 0) acc.counts.emplace_back(pl.pairs[idx].first, pl.pairs[idx].second, c);
        sum += multiset_sum(h, pl, idx + 1, rem - c, acc);
        acc.counts.resize(base);
    }
    return sum;
}

} // namespace

Rational trace_bruteforce(const Hypergraph& h, long d, int threads, long budget) {
    if (d < 0) throw std::invalid_argument("trace_bruteforce: d must be >= 0");
    if (d == 0) return Rational(BigInt(h.n()) * int_pow(h.m() - 1, h.n() - 1));
    if (h.edge_count() == 0) return 0;
    if (threads < 1) threads = 1;
    PairList pl;
    for (int ei = 0; ei < h.edge_count(); ++ei)
        for (int v : h.edges()[static_cast<std::size_t>(ei)]) pl.pairs.emplace_back(ei, v);
    BigInt states = binomial(static_cast<long>(pl.pairs.size()) + d - 1, d);
    if (states > budget)
        throw ResourceLimitError("trace_bruteforce: " + states.str() +
                                 " rooted-edge multisets exceed the budget of " +
                                 std::to_string(budget));
    Rational sum = 0;
    if (threads == 1 || pl.pairs.size() == 1) {
        RootAssignment acc;
        sum = multiset_sum(h, pl, 0, d, acc);
    } else {
        // Split the work by the first pair's count; partial sums are merged
        // after the joins.
        std::vector<Rational> partial(static_cast<std::size_t>(d) + 1, Rational(0));
        std::atomic<long> next{0};
        auto worker = [&]() {
            for (;;) {
                long c = next.fetch_add(1);
                if (c > d) break;
                RootAssignment acc;
                if (c > 0)
                    acc.counts.emplace_back(pl.pairs[0].first, pl.pairs[0].second, c);
                partial[static_cast<std::size_t>(c)] = multiset_sum(h, pl, 1, d - c, acc);
            }
        };
        std::vector<std::thread> pool;
        int use = std::min<int>(threads, static_cast<int>(d) + 1);
        pool.reserve(static_cast<std::size_t>(use));
        for (int t = 0; t < use; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (const auto& p : partial) sum += p;
    }
    return Rational(d) * Rational(int_pow(h.m() - 1, h.n())) * sum;
}

BigInt matrix_power_trace(const Hypergraph& h, long d) {
    if (h.m() != 2)
        throw std::invalid_argument("matrix_power_trace: adjacency matrices need m = 2");
    if (d < 0) throw std::invalid_argument("matrix_power_trace: d must be >= 0");
    const std::size_t n = static_cast<std::size_t>(h.n());
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, 0));
    for (const auto& e : h.edges()) {
        a[static_cast<std::size_t>(e[0])][static_cast<std::size_t>(e[1])] = 1;
        a[static_cast<std::size_t>(e[1])][static_cast<std::size_t>(e[0])] = 1;
    }
    std::vector<std::vector<BigInt>> p(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) p[i][i] = 1;
    for (long step = 0; step < d; ++step) {
        std::vector<std::vector<BigInt>> q(n, std::vector<BigInt>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (p[i][k] == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (a[k][j] != 0) q[i][j] += p[i][k] * a[k][j];
            }
        p = std::move(q);
    }
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += p[i][i];
    return tr;
}

} // namespace hgtrace
