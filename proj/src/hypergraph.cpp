#include "hgtrace/hypergraph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace hgtrace {

Hypergraph::Hypergraph(int m, int n, std::vector<std::vector<int>> edges)
    : m_(m), n_(n), edges_(std::move(edges)) {
    if (m_ < 2) throw std::invalid_argument("hypergraph: m must be >= 2");
    if (n_ < 1) throw std::invalid_argument("hypergraph: n must be >= 1");
    for (auto& e : edges_) {
        if (static_cast<int>(e.size()) != m_)
            throw std::invalid_argument("hypergraph: edge size differs from m");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("hypergraph: repeated vertex in edge");
        if (e.front() < 0 || e.back() >= n_)
            throw std::invalid_argument("hypergraph: vertex out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("hypergraph: duplicate edge");
}

int degree(const Hypergraph& h, int v) {
    if (v < 0 || v >= h.n()) throw std::invalid_argument("degree: vertex out of range");
    int d = 0;
    for (const auto& e : h.edges())
        if (std::binary_search(e.begin(), e.end(), v)) ++d;
    return d;
}

std::vector<int> incident_edges(const Hypergraph& h, int v) {
    std::vector<int> out;
    for (int i = 0; i < h.edge_count(); ++i)
        if (std::binary_search(h.edges()[i].begin(), h.edges()[i].end(), v))
            out.push_back(i);
    return out;
}

bool is_connected(const Hypergraph& h) {
    const int n = h.n();
    if (n == 1) return true;
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(n));
    for (int i = 0; i < h.edge_count(); ++i)
        for (int v : h.edges()[i]) inc[static_cast<std::size_t>(v)].push_back(i);
    std::vector<char> seen_v(static_cast<std::size_t>(n), 0);
    std::vector<char> seen_e(static_cast<std::size_t>(h.edge_count()), 0);
    std::queue<int> q;
    q.push(0);
    seen_v[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int ei : inc[static_cast<std::size_t>(v)]) {
            if (seen_e[static_cast<std::size_t>(ei)]) continue;
            seen_e[static_cast<std::size_t>(ei)] = 1;
            for (int u : h.edges()[static_cast<std::size_t>(ei)])
                if (!seen_v[static_cast<std::size_t>(u)]) {
                    seen_v[static_cast<std::size_t>(u)] = 1;
                    ++reached;
                    q.push(u);
                }
        }
    }
    return reached == n;
}

bool is_linear(const Hypergraph& h) {
    const auto& es = h.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            int common = 0;
            std::size_t a = 0, b = 0;
            while (a < es[i].size() && b < es[j].size()) {
                if (es[i][a] == es[j][b]) { ++common; ++a; ++b; }
                else if (es[i][a] < es[j][b]) ++a;
                else ++b;
            }
            if (common > 1) return false;
        }
    return true;
}

namespace {

struct CycleSearch {
    const Hypergraph& h;
    std::vector<std::vector<int>> inc;
    std::vector<char> vis_v, used_e;
    std::vector<int> path_v, path_e;
    int start = 0;
    int best = 0; // 0 = none yet
    CycleInfo best_cycle;

    CycleSearch(const Hypergraph& hg, const std::vector<char>& allowed) : h(hg) {
        inc.resize(static_cast<std::size_t>(h.n()));
        for (int i = 0; i < h.edge_count(); ++i) {
            if (!allowed[static_cast<std::size_t>(i)]) continue;
            for (int v : h.edges()[i]) inc[static_cast<std::size_t>(v)].push_back(i);
        }
        vis_v.assign(static_cast<std::size_t>(h.n()), 0);
        used_e.assign(static_cast<std::size_t>(h.edge_count()), 0);
    }

    void dfs(int u, int depth) {
        if (best != 0 && depth + 1 >= best) return;
        for (int ei : inc[static_cast<std::size_t>(u)]) {
            if (used_e[static_cast<std::size_t>(ei)]) continue;
            used_e[static_cast<std::size_t>(ei)] = 1;
            for (int w : h.edges()[static_cast<std::size_t>(ei)]) {
                if (w == u) continue;
                if (w == start && depth + 1 >= 2) {
                    int len = depth + 1;
                    if (best == 0 || len < best) {
                        best = len;
                        best_cycle.vertices = path_v;
                        best_cycle.edges = path_e;
                        best_cycle.edges.push_back(ei);
                    }
                } else if (w > start && !vis_v[static_cast<std::size_t>(w)]) {
                    vis_v[static_cast<std::size_t>(w)] = 1;
                    path_v.push_back(w);
                    path_e.push_back(ei);
                    dfs(w, depth + 1);
                    path_e.pop_back();
                    path_v.pop_back();
                    vis_v[static_cast<std::size_t>(w)] = 0;
                }
            }
            used_e[static_cast<std::size_t>(ei)] = 0;
        }
    }
};

std::optional<CycleInfo> run_cycle_search(const Hypergraph& h, const std::vector<char>& allowed) {
    CycleSearch s(h, allowed);
    for (int v = 0; v < h.n(); ++v) {
        // Each cycle is searched from its lowest vertex only.
        s.start = v;
        s.vis_v[static_cast<std::size_t>(v)] = 1;
        s.path_v = {v};
        s.path_e.clear();
        s.dfs(v, 0);
        s.vis_v[static_cast<std::size_t>(v)] = 0;
        if (s.best == 2) break; // no shorter cycle exists
    }
    if (s.best == 0) return std::nullopt;
    return s.best_cycle;
}

} // namespace

std::optional<CycleInfo> find_shortest_cycle(const Hypergraph& h) {
    return run_cycle_search(h, std::vector<char>(static_cast<std::size_t>(h.edge_count()), 1));
}

std::optional<CycleInfo> find_shortest_cycle(const Hypergraph& h,
                                             const std::vector<int>& edge_subset) {
    std::vector<char> allowed(static_cast<std::size_t>(h.edge_count()), 0);
    for (int ei : edge_subset) {
        if (ei < 0 || ei >= h.edge_count())
            throw std::invalid_argument("find_shortest_cycle: edge index out of range");
        allowed[static_cast<std::size_t>(ei)] = 1;
    }
    return run_cycle_search(h, allowed);
}

std::optional<int> girth(const Hypergraph& h) {
    auto c = find_shortest_cycle(h);
    if (!c) return std::nullopt;
    return c->length();
}

long cycle_excess(const Hypergraph& h) {
    return static_cast<long>(h.edge_count()) * (h.m() - 1) + 1 - h.n();
}

Topology classify_topology(const Hypergraph& h) {
    if (!is_connected(h)) return Topology::unsupported;
    long ex = cycle_excess(h);
    if (ex == 0) return Topology::hypertree;
    if (ex == 1 && is_linear(h)) return Topology::linear_unicyclic;
    return Topology::unsupported;
}

Hypergraph coalesce(const Hypergraph& a, int va, const Hypergraph& b, int vb) {
    if (va < 0 || va >= a.n() || vb < 0 || vb >= b.n())
        throw std::invalid_argument("coalesce: attachment vertex out of range");
    if (!is_connected(a) || !is_connected(b))
        throw std::invalid_argument("coalesce: operands must be connected");
    if (a.edge_count() > 0 && b.edge_count() > 0 && a.m() != b.m())
        throw std::invalid_argument("coalesce: uniformity mismatch");
    if (b.edge_count() == 0) return a;
    if (a.edge_count() == 0) {
        // Trivial first operand: result is b renumbered so vb becomes 0.
        std::vector<int> map(static_cast<std::size_t>(b.n()));
        int next = 1;
        for (int u = 0; u < b.n(); ++u) map[static_cast<std::size_t>(u)] = (u == vb) ? 0 : next++;
        std::vector<std::vector<int>> es = b.edges();
        for (auto& e : es)
            for (auto& u : e) u = map[static_cast<std::size_t>(u)];
        return Hypergraph(b.m(), b.n(), std::move(es));
    }
    std::vector<int> map(static_cast<std::size_t>(b.n()));
    int next = a.n();
    for (int u = 0; u < b.n(); ++u) map[static_cast<std::size_t>(u)] = (u == vb) ? va : next++;
    std::vector<std::vector<int>> es = a.edges();
    for (const auto& e : b.edges()) {
        std::vector<int> f;
        f.reserve(e.size());
        for (int u : e) f.push_back(map[static_cast<std::size_t>(u)]);
        es.push_back(std::move(f));
    }
    return Hypergraph(a.m(), a.n() + b.n() - 1, std::move(es));
}

Hypergraph coalesce(const RootedSite& a, const RootedSite& b) {
    return coalesce(a.host, a.vertex, b.host, b.vertex);
}

namespace {

// Covers the lowest uncovered vertex first. With count == nullptr the walk
// stops at the first perfect matching, leaving it in `chosen`; otherwise it
// tallies matchings until `cap` is reached.
bool match_rec(const Hypergraph& h, std::vector<char>& covered, std::vector<int>& chosen,
               long* count, long cap) {
    int v = -1;
    for (int u = 0; u < h.n(); ++u)
        if (!covered[static_cast<std::size_t>(u)]) { v = u; break; }
    if (v == -1) {
        if (!count) return true;
        ++*count;
        return *count >= cap;
    }
    for (int ei = 0; ei < h.edge_count(); ++ei) {
        const auto& e = h.edges()[static_cast<std::size_t>(ei)];
        if (!std::binary_search(e.begin(), e.end(), v)) continue;
        bool free = true;
        for (int u : e)
            if (covered[static_cast<std::size_t>(u)]) { free = false; break; }
        if (!free) continue;
        for (int u : e) covered[static_cast<std::size_t>(u)] = 1;
        chosen.push_back(ei);
        if (match_rec(h, covered, chosen, count, cap)) return true;
        chosen.pop_back();
        for (int u : e) covered[static_cast<std::size_t>(u)] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_perfect_matching(const Hypergraph& h) {
    if (h.n() % h.m() != 0) return std::nullopt;
    std::vector<char> covered(static_cast<std::size_t>(h.n()), 0);
    std::vector<int> chosen;
    if (match_rec(h, covered, chosen, nullptr, 0)) return chosen;
    return std::nullopt;
}

bool has_perfect_matching(const Hypergraph& h) {
    return find_perfect_matching(h).has_value();
}

long count_perfect_matchings(const Hypergraph& h, long cap) {
    if (h.n() % h.m() != 0) return 0;
    std::vector<char> covered(static_cast<std::size_t>(h.n()), 0);
    std::vector<int> chosen;
    long count = 0;
    match_rec(h, covered, chosen, &count, cap);
    return count;
}

} // namespace hgtrace
