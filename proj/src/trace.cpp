#include "hgtrace/trace.hpp"

#include <algorithm>
#include <stdexcept>

#include "hgtrace/errors.hpp"

namespace hgtrace {

namespace {

void check_weights(const WeightedSubhypergraph& ws) {
    if (ws.weights.size() != ws.shape.edge_indices.size())
        throw std::invalid_argument("weights must align with shape edges");
    for (int w : ws.weights)
        if (w < 1) throw std::invalid_argument("weights must be positive");
}

bool in_list(const std::vector<int>& xs, int v) {
    return std::find(xs.begin(), xs.end(), v) != xs.end();
}

// Factors shared by tree and cycle shapes: (m-1)^{-|V|}, the degree
// factorials of the non-excluded vertices, and the per-edge weight factor
// w^{m-1} / (w!)^m.
Rational shape_product(const Hypergraph& h, const WeightedSubhypergraph& ws,
                       const std::vector<int>& excluded) {
    check_weights(ws);
    const int m = h.m();
    auto verts = shape_vertices(h, ws.shape);
    Rational out = rat_pow(Rational(m - 1), -static_cast<long>(verts.size()));
    for (int v : verts) {
        if (in_list(excluded, v)) continue;
        out *= Rational(factorial(weighted_degree(h, ws, v) - 1));
    }
    for (std::size_t i = 0; i < ws.weights.size(); ++i) {
        long w = ws.weights[i];
        out *= Rational(int_pow(w, m - 1));
        out /= rat_pow(Rational(factorial(w)), m);
    }
    return out;
}

Rational tree_factor(const Hypergraph& h, const WeightedSubhypergraph& ws,
                     const std::vector<int>& excluded) {
    if (ws.shape.kind != ShapeKind::tree)
        throw std::invalid_argument("tree factor: shape contains a cycle");
    long k = static_cast<long>(ws.shape.edge_indices.size());
    return shape_product(h, ws, excluded) * rat_pow(Rational(h.m()), (h.m() - 2) * k);
}

Rational unicyclic_factor(const Hypergraph& h, const WeightedSubhypergraph& ws,
                          const CycleInfo& cyc, const std::vector<int>& excluded) {
    if (ws.shape.kind != ShapeKind::contains_cycle)
        throw std::invalid_argument("cycle factor: shape is a tree");
    std::vector<int> cw;
    cw.reserve(static_cast<std::size_t>(cyc.length()));
    for (int ei : cyc.edges) {
        auto it = std::lower_bound(ws.shape.edge_indices.begin(), ws.shape.edge_indices.end(), ei);
        cw.push_back(ws.weights[static_cast<std::size_t>(it - ws.shape.edge_indices.begin())]);
    }
    long k = static_cast<long>(ws.shape.edge_indices.size());
    return Rational(2) * shape_product(h, ws, excluded) *
           rat_pow(Rational(h.m()), (h.m() - 2) * k - 1) * omega_cycle(cw);
}

// Class value for the odd cycle multiplicities that occur only at m = 2:
// cycle edge i is used 2 w_i - 1 times, tree edge e is used 2 w_e times.
Rational odd_class_value(const Hypergraph& h, const SubhypergraphClass& shape,
                         const std::vector<int>& parts, const CycleInfo& cyc) {
    const int g = cyc.length();
    const auto& eis = shape.edge_indices;
    std::vector<char> on_cycle(eis.size(), 0);
    std::vector<int> cw(static_cast<std::size_t>(g));
    for (int j = 0; j < g; ++j) {
        auto it = std::lower_bound(eis.begin(), eis.end(), cyc.edges[static_cast<std::size_t>(j)]);
        std::size_t pos = static_cast<std::size_t>(it - eis.begin());
        on_cycle[pos] = 1;
        cw[static_cast<std::size_t>(j)] = parts[pos];
    }
    // Out-degree r_v of each shape vertex in the balanced orientation.
    auto verts = shape_vertices(h, shape);
    std::vector<long> r(static_cast<std::size_t>(h.n()), 0);
    for (std::size_t i = 0; i < eis.size(); ++i) {
        if (on_cycle[i]) continue;
        for (int v : h.edges()[static_cast<std::size_t>(eis[i])])
            r[static_cast<std::size_t>(v)] += parts[i];
    }
    for (int j = 0; j < g; ++j) {
        int v = cyc.vertices[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(v)] +=
            cw[static_cast<std::size_t>((j + g - 1) % g)] + cw[static_cast<std::size_t>(j)] - 1;
    }
    Rational out = 1;
    for (int v : verts) out *= Rational(factorial(r[static_cast<std::size_t>(v)] - 1));
    for (std::size_t i = 0; i < eis.size(); ++i) {
        if (on_cycle[i]) continue;
        long w = parts[i];
        out *= Rational(w) / Rational(factorial(w) * factorial(w));
    }
    return out * omega_cycle_odd(cw);
}

} // namespace

long weighted_degree(const Hypergraph& h, const WeightedSubhypergraph& ws, int v) {
    check_weights(ws);
    long d = 0;
    bool member = false;
    for (std::size_t i = 0; i < ws.shape.edge_indices.size(); ++i) {
        const auto& e = h.edges()[static_cast<std::size_t>(ws.shape.edge_indices[i])];
        if (std::binary_search(e.begin(), e.end(), v)) {
            d += ws.weights[i];
            member = true;
        }
    }
    if (!member) throw std::invalid_argument("weighted_degree: vertex not in shape");
    return d;
}

Rational c_tree(const Hypergraph& h, const WeightedSubhypergraph& ws) {
    return tree_factor(h, ws, {});
}

Rational partial_tree_factor(const Hypergraph& h, const WeightedSubhypergraph& ws,
                             const std::vector<int>& excluded) {
    return tree_factor(h, ws, excluded);
}

Rational omega_cycle(const std::vector<int>& omega) {
    const int n = static_cast<int>(omega.size());
    if (n < 3) throw std::invalid_argument("omega_cycle: need at least three cycle edges");
    for (int w : omega)
        if (w < 1) throw std::invalid_argument("omega_cycle: weights must be positive");
    const int wmin = *std::min_element(omega.begin(), omega.end());
    Rational total = 0;
    for (int x = 0; x <= 2 * wmin; ++x) {
        // Profile x roots edge i at its forward junction omega[i]-wmin+x times
        // and at its backward junction omega[i]+wmin-x times; the ratio is the
        // number of root-sorted orderings realizing that profile divided by
        // the junction degree products, and s counts the convergent spanning
        // arborescences of the induced cycle digraph.
        Rational ratio = 1;
        for (int i = 0; i < n; ++i) {
            long prev = omega[static_cast<std::size_t>((i + n - 1) % n)];
            long cur = omega[static_cast<std::size_t>(i)];
            ratio *= Rational(factorial(cur) * factorial(cur), BigInt(cur));
            ratio /= Rational(factorial(prev + wmin - x) * factorial(cur - wmin + x));
        }
        BigInt s = 0;
        for (int l = 0; l < n; ++l) {
            BigInt p = 1;
            for (int i = 0; i < l; ++i) p *= omega[static_cast<std::size_t>(i)] + wmin - x;
            for (int i = l + 1; i < n; ++i) p *= omega[static_cast<std::size_t>(i)] - wmin + x;
            s += p;
        }
        total += ratio * Rational(s);
    }
    return total;
}

Rational omega_cycle_odd(const std::vector<int>& w) {
    const int g = static_cast<int>(w.size());
    if (g < 3) throw std::invalid_argument("omega_cycle_odd: need at least three cycle edges");
    for (int wi : w)
        if (wi < 1) throw std::invalid_argument("omega_cycle_odd: weights must be positive");
    const int wmin = *std::min_element(w.begin(), w.end());
    Rational total = 0;
    for (int t = -wmin; t <= wmin - 1; ++t) {
        // Arc split per cycle edge: a_i = w_i + t forward, b_i = w_i - 1 - t
        // backward; both are nonnegative across the t range.
        Rational den = 1;
        for (int i = 0; i < g; ++i) {
            long wi = w[static_cast<std::size_t>(i)];
            den *= Rational(factorial(wi + t) * factorial(wi - 1 - t));
        }
        BigInt s = 0;
        for (int l = 0; l < g; ++l) {
            BigInt p = 1;
            for (int i = 0; i < l; ++i) p *= w[static_cast<std::size_t>(i)] - 1 - t;
            for (int i = l + 1; i < g; ++i) p *= w[static_cast<std::size_t>(i)] + t;
            s += p;
        }
        total += Rational(s) / den;
    }
    return total;
}

Rational c_unicyclic(const Hypergraph& h, const WeightedSubhypergraph& ws) {
    auto cyc = find_shortest_cycle(h, ws.shape.edge_indices);
    if (!cyc) throw std::invalid_argument("c_unicyclic: shape has no cycle");
    return unicyclic_factor(h, ws, *cyc, {});
}

Rational partial_unicyclic_factor(const Hypergraph& h, const WeightedSubhypergraph& ws,
                                  const std::vector<int>& excluded) {
    auto cyc = find_shortest_cycle(h, ws.shape.edge_indices);
    if (!cyc) throw std::invalid_argument("partial_unicyclic_factor: shape has no cycle");
    return unicyclic_factor(h, ws, *cyc, excluded);
}

Rational tr_d(const Hypergraph& h, const SubhypergraphClass& shape, long d) {
    if (d < 1) throw std::invalid_argument("tr_d: d must be >= 1");
    const int m = h.m();
    const int k = static_cast<int>(shape.edge_indices.size());
    Rational sum = 0;
    if (shape.kind == ShapeKind::tree) {
        if (d % m != 0 || d / m < k) return sum;
        for (const auto& comp : weight_compositions(k, static_cast<int>(d / m)))
            sum += c_tree(h, WeightedSubhypergraph{shape, comp});
        return sum;
    }
    auto cyc = find_shortest_cycle(h, shape.edge_indices);
    if (!cyc) throw std::invalid_argument("tr_d: cycle shape without a cycle");
    if (d % m == 0 && d / m >= k)
        for (const auto& comp : weight_compositions(k, static_cast<int>(d / m)))
            sum += unicyclic_factor(h, WeightedSubhypergraph{shape, comp}, *cyc, {});
    if (m == 2) {
        // Odd cycle multiplicities exist only over a graph cycle; they pair
        // with depth d exactly when d and the girth have equal parity.
        long g = cyc->length();
        if ((d + g) % 2 == 0 && (d + g) / 2 >= k)
            for (const auto& comp : weight_compositions(k, static_cast<int>((d + g) / 2)))
                sum += odd_class_value(h, shape, comp, *cyc);
    }
    return sum;
}

BigInt eigenvalue_count(const Hypergraph& h) {
    return BigInt(h.n()) * int_pow(h.m() - 1, h.n() - 1);
}

std::pair<Rational, std::vector<TraceTerm>> trace_breakdown(const Hypergraph& h, long d) {
    if (d < 0) throw std::invalid_argument("trace: d must be >= 0");
    if (d == 0) return {Rational(eigenvalue_count(h)), {}};
    Topology topo = classify_topology(h);
    if (topo == Topology::unsupported)
        throw UnsupportedTopologyError(
            "trace: input is not a connected hypertree or linear unicyclic hypergraph; "
            "the brute-force oracle handles general inputs");
    const int m = h.m();
    long cap = 0;
    if (topo == Topology::hypertree) {
        if (d % m != 0) return {Rational(0), {}};
        cap = d / m;
    } else if (m >= 3) {
        if (d % m != 0) return {Rational(0), {}};
        cap = d / m;
    } else {
        cap = (d + find_shortest_cycle(h)->length()) / 2;
    }
    cap = std::min<long>(cap, h.edge_count());
    Rational prefactor = Rational(d) * Rational(int_pow(h.m() - 1, h.n()));
    Rational total = 0;
    std::vector<TraceTerm> terms;
    if (cap >= 1)
        for (const auto& shape : connected_subhypergraphs(h, static_cast<int>(cap))) {
            Rational v = tr_d(h, shape, d) * prefactor;
            if (v != 0) terms.push_back(TraceTerm{shape, v});
            total += v;
        }
    return {total, std::move(terms)};
}

Rational trace(const Hypergraph& h, long d) {
    return trace_breakdown(h, d).first;
}

bool factorial_inequality_check(long x, long y, long a, long b) {
    if (x < 1 || y < 1 || a < 0 || b < 0)
        throw std::invalid_argument("factorial inequality: need x, y >= 1 and a, b >= 0");
    BigInt lhs = factorial(x + y + a) * factorial(b) + factorial(x + y + b) * factorial(a);
    BigInt rhs = factorial(x + a) * factorial(y + b) + factorial(x + b) * factorial(y + a);
    return lhs > rhs;
}

} // namespace hgtrace
