#include "hgtrace/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hgtrace {

namespace {

// Splits color classes by the multiset of incident edge profiles until the
// partition stabilizes. Colors are ranks, so the result depends only on the
// isomorphism type and the incoming coloring.
std::vector<int> refine(const Hypergraph& h, std::vector<int> colors) {
    const int n = h.n();
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(n));
    for (int i = 0; i < h.edge_count(); ++i)
        for (int v : h.edges()[static_cast<std::size_t>(i)])
            inc[static_cast<std::size_t>(v)].push_back(i);
    int classes = 0;
    for (;;) {
        // Signature: own color plus the sorted list of partner-color multisets,
        // one per incident edge.
        std::vector<std::pair<std::vector<int>, int>> sigs(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<std::vector<int>> parts;
            for (int ei : inc[static_cast<std::size_t>(v)]) {
                std::vector<int> part;
                for (int u : h.edges()[static_cast<std::size_t>(ei)])
                    if (u != v) part.push_back(colors[static_cast<std::size_t>(u)]);
                std::sort(part.begin(), part.end());
                parts.push_back(std::move(part));
            }
            std::sort(parts.begin(), parts.end());
            std::vector<int> flat{colors[static_cast<std::size_t>(v)]};
            for (const auto& p : parts) {
                flat.push_back(-1);
                flat.insert(flat.end(), p.begin(), p.end());
            }
            sigs[static_cast<std::size_t>(v)] = {std::move(flat), v};
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& s : sigs) rank.emplace(s.first, 0);
        int r = 0;
        for (auto& kv : rank) kv.second = r++;
        std::vector<int> next(static_cast<std::size_t>(n));
        for (const auto& s : sigs) next[static_cast<std::size_t>(s.second)] = rank[s.first];
        if (r == classes) return next;
        classes = r;
        colors = std::move(next);
    }
}

struct CanonSearch {
    const Hypergraph& h;
    std::vector<std::vector<char>> inc_mask; // vertex -> edge membership bitmap
    std::string best;

    explicit CanonSearch(const Hypergraph& hg) : h(hg) {
        inc_mask.assign(static_cast<std::size_t>(h.n()),
                        std::vector<char>(static_cast<std::size_t>(h.edge_count()), 0));
        for (int i = 0; i < h.edge_count(); ++i)
            for (int v : h.edges()[static_cast<std::size_t>(i)])
                inc_mask[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] = 1;
    }

    std::string leaf_string(const std::vector<int>& colors) const {
        // Discrete coloring: color value is the new id.
        std::vector<std::vector<int>> es = h.edges();
        for (auto& e : es) {
            for (auto& v : e) v = colors[static_cast<std::size_t>(v)];
            std::sort(e.begin(), e.end());
        }
        std::sort(es.begin(), es.end());
        std::ostringstream os;
        os << h.m() << ';' << h.n();
        for (const auto& e : es) {
            os << '|';
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i) os << ',';
                os << e[i];
            }
        }
        return os.str();
    }

    void search(const std::vector<int>& colors) {
        const int n = h.n();
        // Locate the first class with >= 2 members.
        std::vector<std::vector<int>> members(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) members[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])].push_back(v);
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (members[static_cast<std::size_t>(c)].size() >= 2) { target = c; break; }
        if (target == -1) {
            std::string s = leaf_string(colors);
            if (best.empty() || s < best) best = std::move(s);
            return;
        }
        const auto& cell = members[static_cast<std::size_t>(target)];
        std::vector<int> tried;
        for (int v : cell) {
            // Vertices with identical incidence are twins; branching on a twin
            // of an already-tried vertex reproduces the same leaves.
            bool twin = false;
            for (int u : tried)
                if (inc_mask[static_cast<std::size_t>(u)] == inc_mask[static_cast<std::size_t>(v)]) {
                    twin = true;
                    break;
                }
            if (twin) continue;
            tried.push_back(v);
            std::vector<int> next = colors;
            next[static_cast<std::size_t>(v)] = n; // fresh color, refined away below
            search(refine(h, std::move(next)));
        }
    }
};

} // namespace

std::string canonical_form(const Hypergraph& h) {
    CanonSearch s(h);
    s.search(refine(h, std::vector<int>(static_cast<std::size_t>(h.n()), 0)));
    return s.best;
}

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.m() != b.m() || a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

Hypergraph canonical_copy(const Hypergraph& h) {
    std::string s = canonical_form(h);
    // Parse "m;n|a,b,c|...".
    std::vector<std::vector<int>> es;
    std::size_t bar = s.find('|');
    std::string head = s.substr(0, bar == std::string::npos ? s.size() : bar);
    std::size_t semi = head.find(';');
    int m = std::stoi(head.substr(0, semi));
    int n = std::stoi(head.substr(semi + 1));
    while (bar != std::string::npos) {
        std::size_t next = s.find('|', bar + 1);
        std::string part = s.substr(bar + 1, (next == std::string::npos ? s.size() : next) - bar - 1);
        std::vector<int> e;
        std::stringstream ss(part);
        std::string tok;
        while (std::getline(ss, tok, ',')) e.push_back(std::stoi(tok));
        es.push_back(std::move(e));
        bar = next;
    }
    return Hypergraph(m, n, std::move(es));
}

} // namespace hgtrace
