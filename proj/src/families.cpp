#include "hgtrace/families.hpp"

#include <stdexcept>

namespace hgtrace {

GraphSpec path_graph(int k) {
    if (k < 1) throw std::invalid_argument("path_graph: k >= 1 required");
    GraphSpec g;
    g.n = k + 1;
    for (int i = 0; i < k; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

GraphSpec star_graph(int k) {
    if (k < 1) throw std::invalid_argument("star_graph: k >= 1 required");
    GraphSpec g;
    g.n = k + 1;
    for (int i = 1; i <= k; ++i) g.edges.emplace_back(0, i);
    return g;
}

GraphSpec cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
    GraphSpec g;
    g.n = n;
    for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
    return g;
}

Hypergraph power_of_graph(const GraphSpec& g, int m) {
    if (m < 2) throw std::invalid_argument("power_of_graph: m >= 2 required");
    std::vector<std::vector<int>> es;
    int next = g.n;
    for (const auto& [a, b] : g.edges) {
        if (a < 0 || a >= g.n || b < 0 || b >= g.n || a == b)
            throw std::invalid_argument("power_of_graph: bad edge");
        std::vector<int> e{a, b};
        for (int j = 0; j < m - 2; ++j) e.push_back(next++);
        es.push_back(std::move(e));
    }
    return Hypergraph(m, next == 0 ? 1 : next, std::move(es));
}

Hypergraph hyperpath(int m, int k) { return power_of_graph(path_graph(k), m); }

Hypergraph hyperstar(int m, int k) { return power_of_graph(star_graph(k), m); }

Hypergraph loose_cycle(int m, int n) { return power_of_graph(cycle_graph(n), m); }

Hypergraph comb(int m) {
    // Base edge 0..m-1 with endpoint 0; pendant at each of 1..m-1.
    std::vector<std::vector<int>> es;
    std::vector<int> base;
    for (int v = 0; v < m; ++v) base.push_back(v);
    es.push_back(base);
    int next = m;
    for (int v = 1; v < m; ++v) {
        std::vector<int> e{v};
        for (int j = 0; j < m - 1; ++j) e.push_back(next++);
        es.push_back(std::move(e));
    }
    return Hypergraph(m, next, std::move(es));
}

Hypergraph comb_tree(int m, int t) {
    if (t < 0) throw std::invalid_argument("comb_tree: t >= 0 required");
    std::vector<int> base;
    for (int v = 0; v < m; ++v) base.push_back(v);
    Hypergraph h(m, m, {base});
    for (int i = 0; i < t; ++i) h = coalesce(h, 0, comb(m), 0);
    return h;
}

Hypergraph cycle_with_star(int m, int n, int t) {
    if (t < 0) throw std::invalid_argument("cycle_with_star: t >= 0 required");
    GraphSpec g = cycle_graph(n);
    for (int i = 0; i < t; ++i) {
        g.edges.emplace_back(0, g.n);
        ++g.n;
    }
    return power_of_graph(g, m);
}

} // namespace hgtrace
