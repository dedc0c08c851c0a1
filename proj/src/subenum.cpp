#include "hgtrace/subenum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "hgtrace/canonical.hpp"
#include "hgtrace/families.hpp"

namespace hgtrace {

std::vector<int> shape_vertices(const Hypergraph& h, const SubhypergraphClass& s) {
    std::set<int> vs;
    for (int ei : s.edge_indices)
        for (int v : h.edges()[static_cast<std::size_t>(ei)]) vs.insert(v);
    return {vs.begin(), vs.end()};
}

namespace {

ShapeKind classify_shape(const Hypergraph& h, const std::vector<int>& edge_indices) {
    // A connected sub-hypergraph is acyclic exactly when its vertex count
    // meets the hypertree identity |V| = sum(|e|-1) + 1.
    std::set<int> vs;
    for (int ei : edge_indices)
        for (int v : h.edges()[static_cast<std::size_t>(ei)]) vs.insert(v);
    long tree_n = static_cast<long>(edge_indices.size()) * (h.m() - 1) + 1;
    return static_cast<long>(vs.size()) == tree_n ? ShapeKind::tree : ShapeKind::contains_cycle;
}

} // namespace

SubhypergraphClass whole_shape(const Hypergraph& h) {
    SubhypergraphClass s;
    for (int i = 0; i < h.edge_count(); ++i) s.edge_indices.push_back(i);
    s.kind = classify_shape(h, s.edge_indices);
    return s;
}

std::vector<SubhypergraphClass> connected_subhypergraphs(const Hypergraph& h, int max_edges) {
    const int k = h.edge_count();
    std::vector<SubhypergraphClass> out;
    if (max_edges <= 0 || k == 0) return out;

    // Adjacency between edges that share a vertex.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const auto& a = h.edges()[static_cast<std::size_t>(i)];
            const auto& b = h.edges()[static_cast<std::size_t>(j)];
            bool share = false;
            std::size_t x = 0, y = 0;
            while (x < a.size() && y < b.size()) {
                if (a[x] == b[y]) { share = true; break; }
                if (a[x] < b[y]) ++x; else ++y;
            }
            if (share) { adj[static_cast<std::size_t>(i)].push_back(j); adj[static_cast<std::size_t>(j)].push_back(i); }
        }

    // Extension-set enumeration over the edge-intersection graph: each
    // connected subset containing start s (with all members > s except s
    // itself) is produced at exactly one recursion node.
    std::vector<int> sub;
    std::vector<char> in_sub(static_cast<std::size_t>(k), 0), blocked(static_cast<std::size_t>(k), 0);
    int start = 0;

    auto emit = [&]() {
        SubhypergraphClass s;
        s.edge_indices = sub;
        std::sort(s.edge_indices.begin(), s.edge_indices.end());
        s.kind = classify_shape(h, s.edge_indices);
        out.push_back(std::move(s));
    };

    std::function<void(std::vector<int>)> extend = [&](std::vector<int> ext) {
        emit();
        if (static_cast<int>(sub.size()) == max_edges) return;
        while (!ext.empty()) {
            int w = ext.front();
            ext.erase(ext.begin());
            std::vector<int> next_ext = ext;
            std::vector<int> newly;
            for (int u : adj[static_cast<std::size_t>(w)])
                if (u > start && !in_sub[static_cast<std::size_t>(u)] && !blocked[static_cast<std::size_t>(u)]) {
                    next_ext.push_back(u);
                    newly.push_back(u);
                    blocked[static_cast<std::size_t>(u)] = 1;
                }
            std::sort(next_ext.begin(), next_ext.end());
            in_sub[static_cast<std::size_t>(w)] = 1;
            sub.push_back(w);
            extend(std::move(next_ext));
            sub.pop_back();
            in_sub[static_cast<std::size_t>(w)] = 0;
            for (int u : newly) blocked[static_cast<std::size_t>(u)] = 0;
        }
    };

    for (start = 0; start < k; ++start) {
        std::fill(in_sub.begin(), in_sub.end(), 0);
        std::fill(blocked.begin(), blocked.end(), 0);
        in_sub[static_cast<std::size_t>(start)] = 1;
        blocked[static_cast<std::size_t>(start)] = 1;
        sub = {start};
        std::vector<int> ext;
        for (int u : adj[static_cast<std::size_t>(start)])
            if (u > start) { ext.push_back(u); blocked[static_cast<std::size_t>(u)] = 1; }
        std::sort(ext.begin(), ext.end());
        extend(std::move(ext));
    }

    std::sort(out.begin(), out.end(),
              [](const SubhypergraphClass& a, const SubhypergraphClass& b) {
                  return a.edge_indices < b.edge_indices;
              });
    return out;
}

std::vector<SubhypergraphClass> filtered_subhypergraphs(const Hypergraph& h,
                                                        const std::vector<int>& require,
                                                        const std::vector<int>& forbid,
                                                        int max_edges) {
    std::vector<SubhypergraphClass> out;
    for (auto& s : connected_subhypergraphs(h, max_edges)) {
        bool ok = true;
        for (int r : require)
            if (!std::binary_search(s.edge_indices.begin(), s.edge_indices.end(), r)) { ok = false; break; }
        if (ok)
            for (int f : forbid)
                if (std::binary_search(s.edge_indices.begin(), s.edge_indices.end(), f)) { ok = false; break; }
        if (ok) out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<int>> weight_compositions(int k, int total) {
    if (k < 1) throw std::invalid_argument("weight_compositions: k >= 1 required");
    std::vector<std::vector<int>> out;
    if (total < k) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == k - 1) {
            cur[static_cast<std::size_t>(pos)] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = 1; v <= rem - (k - 1 - pos); ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, rem - v);
        }
    };
    rec(0, total);
    return out;
}

namespace {

// Grows each member by one pendant edge in every possible way and dedups by
// canonical form.
std::vector<Hypergraph> grow_by_attachment(int m, const std::vector<Hypergraph>& level) {
    std::map<std::string, Hypergraph> next;
    for (const auto& h : level) {
        for (int v = 0; v < h.n(); ++v) {
            std::vector<std::vector<int>> es = h.edges();
            std::vector<int> e{v};
            for (int j = 0; j < m - 1; ++j) e.push_back(h.n() + j);
            es.push_back(std::move(e));
            Hypergraph g(m, h.n() + m - 1, std::move(es));
            next.emplace(canonical_form(g), g);
        }
    }
    std::vector<Hypergraph> out;
    out.reserve(next.size());
    for (auto& kv : next) out.push_back(std::move(kv.second));
    return out;
}

} // namespace

std::vector<Hypergraph> enumerate_hypertrees(int m, int k_edges) {
    if (m < 2) throw std::invalid_argument("enumerate_hypertrees: m >= 2 required");
    if (k_edges < 1) throw std::invalid_argument("enumerate_hypertrees: k_edges >= 1 required");
    std::vector<int> single;
    for (int v = 0; v < m; ++v) single.push_back(v);
    std::vector<Hypergraph> level{Hypergraph(m, m, {single})};
    for (int k = 2; k <= k_edges; ++k) level = grow_by_attachment(m, level);
    return level;
}

std::vector<Hypergraph> enumerate_pm_hypertrees(int m, int k_matching) {
    if (k_matching < 1) throw std::invalid_argument("enumerate_pm_hypertrees: k >= 1 required");
    std::vector<Hypergraph> out;
    if ((k_matching - 1) % (m - 1) != 0) return out;
    int k_edges = k_matching + (k_matching - 1) / (m - 1);
    for (auto& t : enumerate_hypertrees(m, k_edges))
        if (has_perfect_matching(t)) out.push_back(std::move(t));
    return out;
}

std::vector<Hypergraph> enumerate_unicyclic(int m, int z, int g) {
    if (g < 3) throw std::invalid_argument("enumerate_unicyclic: girth >= 3 required");
    if (z < g) throw std::invalid_argument("enumerate_unicyclic: z >= girth required");
    std::vector<Hypergraph> level{loose_cycle(m, g)};
    for (int k = g + 1; k <= z; ++k) level = grow_by_attachment(m, level);
    return level;
}

} // namespace hgtrace
