#include "hgtrace/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hgtrace/canonical.hpp"
#include "hgtrace/estrada.hpp"
#include "hgtrace/families.hpp"
#include "hgtrace/oracle.hpp"
#include "hgtrace/subenum.hpp"
#include "hgtrace/trace.hpp"

namespace hgtrace {

bool Report::passed() const {
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

Hypergraph tree_from_spec(int m, const std::string& spec) {
    if (spec == "trivial") return Hypergraph::trivial(m);
    if (spec == "edge") return hyperpath(m, 1);
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string kind = spec.substr(0, colon);
        const int k = std::stoi(spec.substr(colon + 1));
        if (k < 1) throw std::invalid_argument("tree spec: size must be positive in " + spec);
        if (kind == "path") return hyperpath(m, k);
        if (kind == "star") return hyperstar(m, k);
    }
    throw std::invalid_argument("tree spec: unknown form \"" + spec +
                                "\" (use trivial, edge, path:k, star:k)");
}

namespace {

// Coalesces the spec'd tree (rooted at its vertex 0) onto vertex v of h;
// trivial specs leave h unchanged. h keeps its vertex ids.
Hypergraph attach(const Hypergraph& h, int v, int m, const std::string& spec) {
    Hypergraph t = tree_from_spec(m, spec);
    if (t.edge_count() == 0) return h;
    return coalesce(h, v, t, 0);
}

void require_nontrivial(int m, const std::string& spec, const std::string& role,
                        const std::string& check) {
    if (tree_from_spec(m, spec).edge_count() == 0)
        throw std::invalid_argument(check + ": " + role + " must be a nontrivial tree");
}

std::string join_specs(const std::vector<std::string>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += xs[i];
    }
    return out + "]";
}

} // namespace

PerturbationInstance make_tree_relocation(int m, const std::string& t1,
                                          const std::vector<std::string>& hats,
                                          const std::string& t, std::vector<long> ds) {
    const std::string check = "tree-relocation";
    require_nontrivial(m, t1, "t1", check);
    require_nontrivial(m, t, "t", check);
    if (static_cast<int>(hats.size()) > m - 2)
        throw std::invalid_argument(check + ": at most m-2 trees fit the middle edge's free vertices");
    Hypergraph h = hyperpath(m, 3); // spine vertices 0..3, middle edge is index 1
    h = attach(h, 1, m, t1);
    for (std::size_t j = 0; j < hats.size(); ++j)
        h = attach(h, 4 + (m - 2) + static_cast<int>(j), m, hats[j]);
    PerturbationInstance inst;
    inst.check = check;
    inst.name = "m=" + std::to_string(m) + " t1=" + t1 + " hats=" + join_specs(hats) + " t=" + t;
    inst.m = m;
    inst.ds = std::move(ds);
    inst.lhs = {attach(h, 1, m, t)};
    inst.rhs = {attach(h, 2, m, t)};
    inst.granularity = Granularity::full_trace;
    inst.strict_threshold = 2;
    return inst;
}

PerturbationInstance make_cycle_junction_relocation(int m, int girth, const std::string& extra,
                                                    const std::string& t, std::vector<long> ds) {
    const std::string check = "cycle-junction-relocation";
    if (m < 3)
        throw std::invalid_argument(check + ": cycle edges have no degree-one vertex when m = 2");
    require_nontrivial(m, t, "t", check);
    Hypergraph u = loose_cycle(m, girth);
    u = attach(u, 2, m, extra); // never on the first cycle edge, so v keeps degree 2
    const int v = 0;      // junction vertex of the first cycle edge
    const int cored = girth; // first inserted vertex of the first cycle edge
    if (degree(u, v) != 2) throw std::invalid_argument(check + ": junction vertex lost degree 2");
    if (degree(u, cored) != 1) throw std::invalid_argument(check + ": cored vertex lost degree 1");
    PerturbationInstance inst;
    inst.check = check;
    inst.name = "m=" + std::to_string(m) + " girth=" + std::to_string(girth) + " extra=" + extra +
                " t=" + t;
    inst.m = m;
    inst.ds = std::move(ds);
    inst.lhs = {attach(u, v, m, t)};
    inst.rhs = {attach(u, cored, m, t)};
    inst.granularity = Granularity::full_trace;
    inst.strict_threshold = 2;
    return inst;
}

namespace {

// Shared scaffold of the single-edge relocations: edge {0..m-1} with trees
// on vertices 1..p; the moved piece goes to vertex 1 (loaded) or 0 (free).
Hypergraph loaded_edge(int m, const std::vector<std::string>& attach_specs,
                       const std::string& check) {
    const int p = static_cast<int>(attach_specs.size());
    if (p < 1 || p > m - 1)
        throw std::invalid_argument(check + ": need between 1 and m-1 attached trees");
    std::vector<int> base(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) base[static_cast<std::size_t>(i)] = i;
    Hypergraph h(m, m, {base});
    for (int i = 0; i < p; ++i) {
        if (tree_from_spec(m, attach_specs[static_cast<std::size_t>(i)]).edge_count() == 0)
            throw std::invalid_argument(check + ": attached trees must be nontrivial");
        h = attach(h, i + 1, m, attach_specs[static_cast<std::size_t>(i)]);
    }
    return h;
}

} // namespace

PerturbationInstance make_pendant_edge_relocation(int m, const std::vector<std::string>& attach_specs,
                                                  const std::string& h2, std::vector<long> ds) {
    const std::string check = "pendant-edge-relocation";
    require_nontrivial(m, h2, "h2", check);
    Hypergraph h = loaded_edge(m, attach_specs, check);
    PerturbationInstance inst;
    inst.check = check;
    inst.name = "m=" + std::to_string(m) + " attach=" + join_specs(attach_specs) + " h2=" + h2;
    inst.m = m;
    inst.ds = std::move(ds);
    inst.lhs = {attach(h, 1, m, h2)};
    inst.rhs = {attach(h, 0, m, h2)};
    inst.granularity = Granularity::full_trace;
    inst.strict_threshold = 2;
    return inst;
}

PerturbationInstance make_edge_shape_relocation(int m, const std::vector<std::string>& attach_specs,
                                                const std::string& t, std::vector<long> ds) {
    const std::string check = "edge-shape-relocation";
    require_nontrivial(m, t, "t", check);
    Hypergraph h = loaded_edge(m, attach_specs, check);
    PerturbationInstance inst;
    inst.check = check;
    inst.name = "m=" + std::to_string(m) + " attach=" + join_specs(attach_specs) + " t=" + t;
    inst.m = m;
    inst.ds = std::move(ds);
    inst.lhs = {attach(h, 1, m, t)};
    inst.rhs = {attach(h, 0, m, t)};
    inst.granularity = Granularity::whole_shape;
    inst.strict_threshold = inst.lhs[0].edge_count();
    return inst;
}

PerturbationInstance make_edge_shape_relocation_pair(int m, const std::vector<std::string>& attach_specs,
                                                     const std::string& t, const std::string& ttilde,
                                                     std::vector<long> ds) {
    const std::string check = "edge-shape-relocation-pair";
    require_nontrivial(m, t, "t", check);
    require_nontrivial(m, ttilde, "ttilde", check);
    Hypergraph h = loaded_edge(m, attach_specs, check);
    Hypergraph h1 = attach(h, 1, m, t);
    Hypergraph h2 = attach(h, 0, m, t);
    PerturbationInstance inst;
    inst.check = check;
    inst.name = "m=" + std::to_string(m) + " attach=" + join_specs(attach_specs) + " t=" + t +
                " ttilde=" + ttilde;
    inst.m = m;
    inst.ds = std::move(ds);
    inst.lhs = {attach(h1, 1, m, ttilde), attach(h1, 0, m, ttilde)};
    inst.rhs = {attach(h2, 1, m, ttilde), attach(h2, 0, m, ttilde)};
    inst.granularity = Granularity::whole_shape;
    inst.strict_threshold = inst.lhs[0].edge_count();
    return inst;
}

PerturbationInstance make_path_end_shape_relocation(int m, const std::string& t0,
                                                    const std::string& hat1, const std::string& t,
                                                    std::vector<long> ds) {
    const std::string check = "path-end-shape-relocation";
    require_nontrivial(m, t0, "t0", check);
    require_nontrivial(m, t, "t", check);
    Hypergraph h = hyperpath(m, 2); // spine vertices 0, 1, 2
    h = attach(h, 0, m, t0);
    h = attach(h, 1, m, hat1);
    PerturbationInstance inst;
    inst.check = check;
    inst.name = "m=" + std::to_string(m) + " t0=" + t0 + " hat1=" + hat1 + " t=" + t;
    inst.m = m;
    inst.ds = std::move(ds);
    inst.lhs = {attach(h, 0, m, t)};
    inst.rhs = {attach(h, 2, m, t)};
    inst.granularity = Granularity::whole_shape;
    inst.strict_threshold = inst.lhs[0].edge_count();
    return inst;
}

namespace {

PerturbationInstance triangle_relocation(int m, const std::string& t1, const std::string& hat3,
                                         const std::string& t2, std::vector<long> ds,
                                         Granularity granularity, const std::string& check) {
    require_nontrivial(m, t1, "t1", check);
    require_nontrivial(m, t2, "t2", check);
    Hypergraph h = loose_cycle(m, 3); // junctions 0, 1, 2; 0 and 1 share an edge
    h = attach(h, 0, m, t1);
    h = attach(h, 2, m, hat3);
    PerturbationInstance inst;
    inst.check = check;
    inst.name = "m=" + std::to_string(m) + " t1=" + t1 + " hat3=" + hat3 + " t2=" + t2;
    inst.m = m;
    inst.ds = std::move(ds);
    inst.lhs = {attach(h, 0, m, t2)};
    inst.rhs = {attach(h, 1, m, t2)};
    inst.granularity = granularity;
    inst.strict_threshold =
        granularity == Granularity::whole_shape ? inst.lhs[0].edge_count() : 2;
    return inst;
}

} // namespace

PerturbationInstance make_triangle_shape_relocation(int m, const std::string& t1,
                                                    const std::string& hat3, const std::string& t2,
                                                    std::vector<long> ds) {
    return triangle_relocation(m, t1, hat3, t2, std::move(ds), Granularity::whole_shape,
                               "triangle-shape-relocation");
}

PerturbationInstance make_triangle_trace_relocation(int m, const std::string& t1,
                                                    const std::string& hat3, const std::string& t2,
                                                    std::vector<long> ds) {
    return triangle_relocation(m, t1, hat3, t2, std::move(ds), Granularity::full_trace,
                               "triangle-trace-relocation");
}

namespace {

Rational side_value(const std::vector<Hypergraph>& side, Granularity g, long d) {
    Rational sum = 0;
    for (const auto& h : side)
        sum += g == Granularity::full_trace ? trace(h, d) : tr_d(h, whole_shape(h), d);
    return sum;
}

} // namespace

Report check_perturbation(const PerturbationInstance& inst) {
    Report r;
    r.title = inst.check + " " + inst.name;
    for (long d : inst.ds) {
        Rational l = side_value(inst.lhs, inst.granularity, d);
        Rational rr = side_value(inst.rhs, inst.granularity, d);
        bool strict = d % inst.m == 0 && d / inst.m >= inst.strict_threshold;
        bool ok = strict ? l > rr : l >= rr;
        std::ostringstream detail;
        detail << "lhs=" << fraction_string(l) << " rhs=" << fraction_string(rr)
               << (strict ? " expected strictly greater" : " expected greater-or-equal");
        r.lines.push_back({"d=" + std::to_string(d), ok, detail.str()});
    }
    return r;
}

std::vector<PerturbationInstance> parse_instances(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("perturbations") || !doc["perturbations"].is_array())
        throw std::invalid_argument("instances: expected {\"perturbations\": [...]}");
    std::vector<PerturbationInstance> out;
    for (const auto& e : doc["perturbations"]) {
        const std::string check = e.at("check").get<std::string>();
        const int m = e.at("m").get<int>();
        std::vector<long> ds = e.at("d").get<std::vector<long>>();
        auto str = [&](const char* key, const char* dflt) {
            return e.contains(key) ? e.at(key).get<std::string>() : std::string(dflt);
        };
        auto list = [&](const char* key) {
            return e.contains(key) ? e.at(key).get<std::vector<std::string>>()
                                   : std::vector<std::string>{};
        };
        PerturbationInstance inst;
        if (check == "tree-relocation")
            inst = make_tree_relocation(m, str("t1", "edge"), list("hats"), str("t", "edge"), ds);
        else if (check == "cycle-junction-relocation")
            inst = make_cycle_junction_relocation(m, e.value("girth", 3), str("extra", "trivial"),
                                                  str("t", "edge"), ds);
        else if (check == "pendant-edge-relocation")
            inst = make_pendant_edge_relocation(m, list("attach"), str("h2", "edge"), ds);
        else if (check == "edge-shape-relocation")
            inst = make_edge_shape_relocation(m, list("attach"), str("t", "edge"), ds);
        else if (check == "edge-shape-relocation-pair")
            inst = make_edge_shape_relocation_pair(m, list("attach"), str("t", "edge"),
                                                   str("ttilde", "edge"), ds);
        else if (check == "path-end-shape-relocation")
            inst = make_path_end_shape_relocation(m, str("t0", "edge"), str("hat1", "trivial"),
                                                  str("t", "edge"), ds);
        else if (check == "triangle-shape-relocation")
            inst = make_triangle_shape_relocation(m, str("t1", "edge"), str("hat3", "trivial"),
                                                  str("t2", "edge"), ds);
        else if (check == "triangle-trace-relocation")
            inst = make_triangle_trace_relocation(m, str("t1", "edge"), str("hat3", "trivial"),
                                                  str("t2", "edge"), ds);
        else
            throw std::invalid_argument("instances: unknown check \"" + check + "\"");
        if (e.contains("name")) inst.name = e.at("name").get<std::string>();
        out.push_back(std::move(inst));
    }
    return out;
}

const char* default_instances_json() {
    return R"({
  "perturbations": [
    {"check": "tree-relocation", "m": 3, "t1": "edge", "hats": [], "t": "edge", "d": [3, 6, 9]},
    {"check": "tree-relocation", "m": 4, "t1": "star:2", "hats": ["edge"], "t": "edge", "d": [4, 8, 12]},
    {"check": "cycle-junction-relocation", "m": 3, "girth": 3, "extra": "trivial", "t": "edge", "d": [3, 6, 9]},
    {"check": "cycle-junction-relocation", "m": 3, "girth": 4, "extra": "edge", "t": "path:2", "d": [3, 6, 9]},
    {"check": "pendant-edge-relocation", "m": 3, "attach": ["edge"], "h2": "edge", "d": [3, 6, 9]},
    {"check": "pendant-edge-relocation", "m": 4, "attach": ["edge", "path:2"], "h2": "star:2", "d": [4, 8, 12]},
    {"check": "edge-shape-relocation", "m": 3, "attach": ["edge"], "t": "edge", "d": [3, 6, 9, 12]},
    {"check": "edge-shape-relocation", "m": 4, "attach": ["edge", "edge"], "t": "edge", "d": [4, 8, 12, 16, 20]},
    {"check": "edge-shape-relocation-pair", "m": 3, "attach": ["edge"], "t": "edge", "ttilde": "edge", "d": [3, 6, 9, 12, 15]},
    {"check": "edge-shape-relocation-pair", "m": 4, "attach": ["edge"], "t": "edge", "ttilde": "edge", "d": [4, 8, 12, 16, 20]},
    {"check": "path-end-shape-relocation", "m": 3, "t0": "edge", "hat1": "trivial", "t": "edge", "d": [3, 6, 9, 12, 15]},
    {"check": "path-end-shape-relocation", "m": 3, "t0": "path:2", "hat1": "edge", "t": "edge", "d": [3, 6, 9, 18, 21]},
    {"check": "triangle-shape-relocation", "m": 3, "t1": "edge", "hat3": "trivial", "t2": "edge", "d": [3, 6, 9, 15, 18]},
    {"check": "triangle-shape-relocation", "m": 4, "t1": "edge", "hat3": "trivial", "t2": "edge", "d": [4, 8, 12, 20, 24]},
    {"check": "triangle-trace-relocation", "m": 3, "t1": "edge", "hat3": "trivial", "t2": "edge", "d": [3, 6, 9]},
    {"check": "triangle-trace-relocation", "m": 3, "t1": "star:2", "hat3": "edge", "t2": "edge", "d": [3, 6, 9]}
  ]
})";
}

std::vector<PerturbationInstance> default_instances() {
    return parse_instances(nlohmann::json::parse(default_instances_json()));
}

namespace {

struct EscalatedCompare {
    CompareVerdict verdict;
    long depth_used;
};

// Retries an inconclusive interval comparison at growing depths.
EscalatedCompare compare_escalating(const Hypergraph& a, const Hypergraph& b, long depth, int m) {
    long d = depth;
    for (int attempt = 0; attempt < 4; ++attempt) {
        CompareVerdict v = compare_ee(a, b, d);
        if (v != CompareVerdict::inconclusive) return {v, d};
        d += 2 * m;
    }
    return {CompareVerdict::inconclusive, d};
}

std::string verdict_name(CompareVerdict v) {
    switch (v) {
        case CompareVerdict::a_greater: return "first strictly greater";
        case CompareVerdict::b_greater: return "second strictly greater";
        default: return "inconclusive";
    }
}

void certify_maximum(Report& r, const Hypergraph& best, const std::vector<Hypergraph>& family,
                     long depth, int m) {
    int idx = 0;
    bool seen_best = false;
    for (const auto& f : family) {
        ++idx;
        if (isomorphic(f, best)) {
            seen_best = true;
            continue;
        }
        EscalatedCompare ec = compare_escalating(best, f, depth, m);
        std::ostringstream detail;
        detail << verdict_name(ec.verdict) << " at depth " << ec.depth_used;
        if (ec.verdict == CompareVerdict::inconclusive)
            detail << " (retry with depth > " << ec.depth_used << ")";
        r.lines.push_back({"beats family member " + std::to_string(idx),
                           ec.verdict == CompareVerdict::a_greater, detail.str()});
    }
    r.lines.push_back({"conjectured maximizer appears in the family", seen_best,
                       "family size " + std::to_string(family.size())});
}

} // namespace

Report check_extremal_matched_trees(int m, int k, long depth) {
    Report r;
    r.title = "matched-tree maximum m=" + std::to_string(m) + " k=" + std::to_string(k);
    auto family = enumerate_pm_hypertrees(m, k);
    if ((k - 1) % (m - 1) != 0) {
        r.lines.push_back({"family empty off the divisibility lattice", family.empty(),
                           "members=" + std::to_string(family.size())});
        return r;
    }
    Hypergraph best = comb_tree(m, (k - 1) / (m - 1));
    if (depth <= 0) depth = default_estrada_depth(best);
    certify_maximum(r, best, family, depth, m);
    return r;
}

bool is_cycle_of_stars(const Hypergraph& h) {
    auto cyc = find_shortest_cycle(h);
    if (!cyc) return false;
    std::set<int> cycle_edges(cyc->edges.begin(), cyc->edges.end());
    std::set<int> cycle_verts;
    for (int ei : cyc->edges)
        for (int v : h.edges()[static_cast<std::size_t>(ei)]) cycle_verts.insert(v);
    std::set<int> junctions(cyc->vertices.begin(), cyc->vertices.end());
    for (int ei = 0; ei < h.edge_count(); ++ei) {
        if (cycle_edges.count(ei)) continue;
        std::vector<int> met;
        for (int v : h.edges()[static_cast<std::size_t>(ei)])
            if (cycle_verts.count(v)) met.push_back(v);
        if (met.size() != 1 || !junctions.count(met[0])) return false;
        for (int v : h.edges()[static_cast<std::size_t>(ei)])
            if (v != met[0] && degree(h, v) != 1) return false;
    }
    return true;
}

Report check_extremal_girth3(int m, int z, long depth) {
    Report r;
    r.title = "girth-3 maximum m=" + std::to_string(m) + " z=" + std::to_string(z);
    if (z < 3) throw std::invalid_argument("girth-3 maximum: need z >= 3");
    Hypergraph best = cycle_with_star(m, 3, z - 3);
    if (depth <= 0) depth = default_estrada_depth(best);
    auto family = enumerate_unicyclic(m, z, 3);
    certify_maximum(r, best, family, depth, m);
    r.lines.push_back({"winner is a cycle with pendant stars at junctions", is_cycle_of_stars(best),
                       std::to_string(z - 3) + " pendant edges"});
    return r;
}

Report check_tree_root_uniqueness() {
    Report r;
    r.title = "tree-root uniqueness";
    for (int m : {2, 3}) {
        for (int k = 1; k <= 3; ++k) {
            int shapes = 0, cases = 0;
            bool ok = true;
            for (const auto& t : enumerate_hypertrees(m, k)) {
                ++shapes;
                std::vector<int> eis(static_cast<std::size_t>(k));
                for (int i = 0; i < k; ++i) eis[static_cast<std::size_t>(i)] = i;
                std::vector<int> w(static_cast<std::size_t>(k), 1);
                for (;;) {
                    ++cases;
                    std::vector<long> mult;
                    mult.reserve(w.size());
                    for (int wi : w) mult.push_back(static_cast<long>(m) * wi);
                    auto rootings = euler_rootings(t, eis, mult);
                    if (rootings.size() != 1) ok = false;
                    else {
                        // The unique rooting must root every edge equally at
                        // each of its vertices.
                        const auto& f = rootings.front();
                        if (f.counts.size() != static_cast<std::size_t>(k * m)) ok = false;
                        for (const auto& [ei, v, c] : f.counts) {
                            (void)v;
                            if (c != w[static_cast<std::size_t>(ei)]) ok = false;
                        }
                    }
                    // next weight vector over {1, 2}
                    std::size_t pos = 0;
                    while (pos < w.size() && w[pos] == 2) w[pos++] = 1;
                    if (pos == w.size()) break;
                    w[pos] = 2;
                }
            }
            r.lines.push_back({"m=" + std::to_string(m) + " edges=" + std::to_string(k), ok,
                               std::to_string(shapes) + " shapes, " + std::to_string(cases) +
                                   " weightings"});
        }
    }
    return r;
}

Report check_cored_edge_multiplicity() {
    Report r;
    r.title = "cored-edge multiplicity";
    for (int m : {2, 3, 4}) {
        std::vector<int> base(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) base[static_cast<std::size_t>(i)] = i;
        Hypergraph e(m, m, {base});
        bool ok = true;
        for (long mult = 1; mult <= 2 * m + 1; ++mult) {
            bool rootable = !euler_rootings(e, {0}, {mult}).empty();
            if (rootable != (mult % m == 0)) ok = false;
        }
        r.lines.push_back({"single edge m=" + std::to_string(m), ok,
                           "multiplicities 1.." + std::to_string(2 * m + 1)});
    }
    for (int m : {2, 3}) {
        Hypergraph p = hyperpath(m, 2);
        // All vertices of the first edge except the shared spine vertex 1
        // have degree one.
        std::vector<int> cored;
        for (int v : p.edges()[0])
            if (degree(p, v) == 1) cored.push_back(v);
        bool ok = !cored.empty();
        for (long a = 1; a <= 2 * m; ++a)
            for (long b = 1; b <= 2 * m; ++b) {
                auto rootings = euler_rootings(p, {0, 1}, {a, b});
                bool rootable = !rootings.empty();
                if (rootable != (a % m == 0 && b % m == 0)) ok = false;
                for (const auto& f : rootings)
                    for (const auto& [ei, v, c] : f.counts)
                        if (ei == 0 && std::find(cored.begin(), cored.end(), v) != cored.end() &&
                            c != a / m)
                            ok = false;
            }
        r.lines.push_back({"two-edge path m=" + std::to_string(m), ok,
                           "multiplicity grid 1.." + std::to_string(2 * m)});
    }
    return r;
}

namespace {

// Looks for a comb hanging at some vertex u: an edge at u whose other
// vertices each carry exactly one further, pendant edge. On success, removes
// the comb and reports whether the rest is a matched hypertree.
bool comb_split_leaves_matched_tree(const Hypergraph& t) {
    for (int u = 0; u < t.n(); ++u) {
        for (int e0 : incident_edges(t, u)) {
            std::vector<int> comb_edges{e0};
            std::set<int> removed;
            bool shape_ok = true;
            for (int v : t.edges()[static_cast<std::size_t>(e0)]) {
                if (v == u) continue;
                removed.insert(v);
                if (degree(t, v) != 2) {
                    shape_ok = false;
                    break;
                }
                int other = -1;
                for (int ei : incident_edges(t, v))
                    if (ei != e0) other = ei;
                for (int w : t.edges()[static_cast<std::size_t>(other)]) {
                    if (w == v) continue;
                    removed.insert(w);
                    if (degree(t, w) != 1) shape_ok = false;
                }
                if (!shape_ok) break;
                comb_edges.push_back(other);
            }
            if (!shape_ok) continue;
            // Rebuild the remainder on compact vertex ids.
            std::vector<int> remap(static_cast<std::size_t>(t.n()), -1);
            int next = 0;
            for (int v = 0; v < t.n(); ++v)
                if (!removed.count(v)) remap[static_cast<std::size_t>(v)] = next++;
            std::vector<std::vector<int>> rest;
            for (int ei = 0; ei < t.edge_count(); ++ei) {
                if (std::find(comb_edges.begin(), comb_edges.end(), ei) != comb_edges.end())
                    continue;
                std::vector<int> edge;
                for (int v : t.edges()[static_cast<std::size_t>(ei)])
                    edge.push_back(remap[static_cast<std::size_t>(v)]);
                rest.push_back(std::move(edge));
            }
            if (rest.empty()) continue; // the whole tree was one comb: no matched remainder
            Hypergraph trimmed(t.m(), next, std::move(rest));
            if (classify_topology(trimmed) == Topology::hypertree && has_perfect_matching(trimmed))
                return true;
        }
    }
    return false;
}

} // namespace

Report check_matched_tree_decomposition(int m, int k) {
    Report r;
    r.title = "matched-tree decomposition m=" + std::to_string(m) + " k=" + std::to_string(k);
    auto family = enumerate_pm_hypertrees(m, k);
    r.lines.push_back({"family nonempty", !family.empty(),
                       std::to_string(family.size()) + " matched hypertrees"});
    int idx = 0;
    for (const auto& t : family) {
        ++idx;
        bool unique = count_perfect_matchings(t, 2) == 1;
        bool split = t.edge_count() <= 1 || comb_split_leaves_matched_tree(t);
        r.lines.push_back({"member " + std::to_string(idx), unique && split,
                           std::string(unique ? "matching unique" : "matching not unique") + ", " +
                               (split ? "comb split found" : "no comb split")});
    }
    return r;
}

Report girth_comparison_sweep(int m, int z, long depth) {
    Report r;
    r.title = "girth sweep m=" + std::to_string(m) + " z=" + std::to_string(z) +
              " (informational)";
    Hypergraph best = cycle_with_star(m, 3, z - 3);
    if (depth <= 0) depth = default_estrada_depth(best);
    for (int g = 3; g <= z; ++g) {
        auto family = enumerate_unicyclic(m, z, g);
        int idx = 0;
        for (const auto& f : family) {
            ++idx;
            std::string label = "girth " + std::to_string(g) + " member " + std::to_string(idx);
            if (isomorphic(f, best)) {
                r.lines.push_back({label, true, "the girth-3 star-cycle itself"});
                continue;
            }
            EscalatedCompare ec = compare_escalating(best, f, depth, m);
            r.lines.push_back({label, true,
                               verdict_name(ec.verdict) + " at depth " +
                                   std::to_string(ec.depth_used)});
        }
    }
    return r;
}

} // namespace hgtrace
