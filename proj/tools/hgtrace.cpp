#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgtrace/canonical.hpp"
#include "hgtrace/errors.hpp"
#include "hgtrace/estrada.hpp"
#include "hgtrace/families.hpp"
#include "hgtrace/hypergraph.hpp"
#include "hgtrace/json_io.hpp"
#include "hgtrace/oracle.hpp"
#include "hgtrace/rational.hpp"
#include "hgtrace/subenum.hpp"
#include "hgtrace/trace.hpp"
#include "hgtrace/verify.hpp"

namespace {

using nlohmann::json;
using namespace hgtrace;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitBudget = 4;

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json trace_entry(const Hypergraph& h, long d, bool with_terms) {
    json row;
    row["d"] = d;
    if (!with_terms) {
        row["trace"] = fraction_string(trace(h, d));
        return row;
    }
    auto [total, terms] = trace_breakdown(h, d);
    row["trace"] = fraction_string(total);
    json ts = json::array();
    for (const auto& t : terms) {
        json tj;
        tj["edges"] = t.shape.edge_indices;
        tj["kind"] = t.shape.kind == ShapeKind::tree ? "tree" : "contains_cycle";
        tj["value"] = fraction_string(t.value);
        ts.push_back(std::move(tj));
    }
    row["terms"] = std::move(ts);
    return row;
}

struct TraceOpts {
    std::string path;
    std::vector<long> ds;
    bool terms = false;
    std::string format = "json";
};

int run_trace(const TraceOpts& o) {
    Hypergraph h = load_hypergraph(o.path);
    if (o.format == "csv") {
        if (o.terms) std::cerr << "note: per-shape terms are available in json format only\n";
        std::cout << "d,trace\n";
        for (long d : o.ds) std::cout << d << ',' << fraction_string(trace(h, d)) << '\n';
        return kExitOk;
    }
    if (o.ds.size() == 1) {
        emit(trace_entry(h, o.ds[0], o.terms));
    } else {
        json arr = json::array();
        for (long d : o.ds) arr.push_back(trace_entry(h, d, o.terms));
        emit(arr);
    }
    return kExitOk;
}

struct OracleOpts {
    std::string path;
    std::vector<long> ds;
    int threads = 1;
    long budget = kDefaultOracleBudget;
    std::string method = "bruteforce";
    std::string format = "json";
};

int run_oracle(const OracleOpts& o) {
    Hypergraph h = load_hypergraph(o.path);
    auto value = [&](long d) {
        return o.method == "matrix" ? Rational(matrix_power_trace(h, d))
                                    : trace_bruteforce(h, d, o.threads, o.budget);
    };
    if (o.format == "csv") {
        std::cout << "d,trace,method\n";
        for (long d : o.ds)
            std::cout << d << ',' << fraction_string(value(d)) << ',' << o.method << '\n';
        return kExitOk;
    }
    json arr = json::array();
    for (long d : o.ds) {
        json row;
        row["d"] = d;
        row["trace"] = fraction_string(value(d));
        row["method"] = o.method;
        arr.push_back(std::move(row));
    }
    if (arr.size() == 1) emit(arr[0]);
    else emit(arr);
    return kExitOk;
}

struct EstradaOpts {
    std::string path;
    long depth = 0; // 0 picks the smallest depth whose tail bound clears 1e-6
    int digits = 12;
};

int run_estrada(const EstradaOpts& o) {
    Hypergraph h = load_hypergraph(o.path);
    long depth = o.depth > 0 ? o.depth : default_estrada_depth(h);
    CertifiedValue v = estrada_truncated(h, depth);
    json out;
    out["lower"] = decimal_string(v.lower(), o.digits, Rounding::down);
    out["upper"] = decimal_string(v.upper(), o.digits, Rounding::up);
    out["exact_lower"] = fraction_string(v.lower());
    out["D"] = v.depth;
    emit(out);
    return kExitOk;
}

struct CompareOpts {
    std::string path_a, path_b;
    long depth = 0;
    int digits = 12;
};

json interval_json(const CertifiedValue& v, int digits) {
    json out;
    out["lower"] = decimal_string(v.lower(), digits, Rounding::down);
    out["upper"] = decimal_string(v.upper(), digits, Rounding::up);
    out["D"] = v.depth;
    return out;
}

int run_compare(const CompareOpts& o) {
    Hypergraph a = load_hypergraph(o.path_a);
    Hypergraph b = load_hypergraph(o.path_b);
    long depth =
        o.depth > 0 ? o.depth : std::max(default_estrada_depth(a), default_estrada_depth(b));
    CompareVerdict v = compare_ee(a, b, depth);
    json out;
    out["verdict"] = v == CompareVerdict::a_greater   ? "a_greater"
                     : v == CompareVerdict::b_greater ? "b_greater"
                                                      : "inconclusive";
    out["a"] = interval_json(estrada_truncated(a, depth), o.digits);
    out["b"] = interval_json(estrada_truncated(b, depth), o.digits);
    emit(out);
    return kExitOk;
}

struct EnumerateOpts {
    std::string family;
    int m = 3;
    int edges = 0;
    int matching = 0;
    int girth = 0;
};

int run_enumerate(const EnumerateOpts& o) {
    std::vector<Hypergraph> out;
    if (o.family == "hypertrees") {
        if (o.edges < 1) throw std::invalid_argument("enumerate hypertrees: need --edges >= 1");
        out = enumerate_hypertrees(o.m, o.edges);
    } else if (o.family == "matched-hypertrees") {
        if (o.matching < 1)
            throw std::invalid_argument("enumerate matched-hypertrees: need --matching >= 1");
        out = enumerate_pm_hypertrees(o.m, o.matching);
    } else {
        if (o.edges < 3 || o.girth < 3)
            throw std::invalid_argument("enumerate unicyclic: need --edges >= 3 and --girth >= 3");
        out = enumerate_unicyclic(o.m, o.edges, o.girth);
    }
    json arr = json::array();
    for (const auto& h : out) {
        json j = hypergraph_to_json(h);
        j["canonical"] = canonical_form(h);
        arr.push_back(std::move(j));
    }
    emit(arr);
    return kExitOk;
}

struct VerifyOpts {
    std::vector<std::string> checks;
    std::string instances_path;
    bool list = false;
    int m = 3;
    int k = 3;
    int z = 4;
    long depth = 0;
};

const std::set<std::string>& perturbation_ids() {
    static const std::set<std::string> ids = {
        "tree-relocation",           "cycle-junction-relocation", "pendant-edge-relocation",
        "edge-shape-relocation",     "edge-shape-relocation-pair", "path-end-shape-relocation",
        "triangle-shape-relocation", "triangle-trace-relocation"};
    return ids;
}

std::vector<PerturbationInstance> load_instances(const std::string& path) {
    if (path.empty()) return default_instances();
    std::ifstream in(path);
    if (!in) throw ParseError("instances: cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("instances: " + path + ": " + e.what());
    }
    return parse_instances(doc);
}

void append_structure_checks(std::vector<Report>& rs, const VerifyOpts& o) {
    rs.push_back(check_tree_root_uniqueness());
    rs.push_back(check_cored_edge_multiplicity());
    rs.push_back(check_matched_tree_decomposition(o.m, o.k));
}

std::vector<Report> run_verify_check(const std::string& id, const VerifyOpts& o) {
    std::vector<Report> rs;
    if (id == "perturbations" || perturbation_ids().count(id)) {
        int used = 0;
        for (const auto& inst : load_instances(o.instances_path)) {
            if (id != "perturbations" && inst.check != id) continue;
            rs.push_back(check_perturbation(inst));
            ++used;
        }
        if (used == 0) throw std::invalid_argument("verify: no instances for check " + id);
    } else if (id == "matched-tree-max") {
        rs.push_back(check_extremal_matched_trees(o.m, o.k, o.depth));
    } else if (id == "girth3-max") {
        rs.push_back(check_extremal_girth3(o.m, o.z, o.depth));
    } else if (id == "girth-sweep") {
        rs.push_back(girth_comparison_sweep(o.m, o.z, o.depth));
    } else if (id == "tree-root-uniqueness") {
        rs.push_back(check_tree_root_uniqueness());
    } else if (id == "cored-edge-multiplicity") {
        rs.push_back(check_cored_edge_multiplicity());
    } else if (id == "matched-tree-decomposition") {
        rs.push_back(check_matched_tree_decomposition(o.m, o.k));
    } else if (id == "structure") {
        append_structure_checks(rs, o);
    } else if (id == "all") {
        for (const auto& inst : load_instances(o.instances_path))
            rs.push_back(check_perturbation(inst));
        append_structure_checks(rs, o);
        rs.push_back(check_extremal_matched_trees(o.m, o.k, o.depth));
        rs.push_back(check_extremal_girth3(o.m, o.z, o.depth));
    } else {
        throw std::invalid_argument("verify: unknown check \"" + id + "\" (see --list)");
    }
    return rs;
}

int run_verify(const VerifyOpts& o) {
    if (o.list) {
        json arr = json::array();
        auto add = [&](const char* id, const char* what) {
            json j;
            j["check"] = id;
            j["description"] = what;
            arr.push_back(std::move(j));
        };
        add("perturbations", "every trace inequality instance from the instance file");
        for (const auto& id : perturbation_ids())
            add(id.c_str(), "instances of this relocation inequality only");
        add("matched-tree-max",
            "the comb-assembled tree maximizes the Estrada index over matched hypertrees (--m, --k, --depth)");
        add("girth3-max",
            "the star-decorated triangle maximizes the Estrada index over girth-3 unicyclic hypergraphs (--m, --z, --depth)");
        add("girth-sweep",
            "informational Estrada comparison of the girth-3 winner against larger-girth families (--m, --z, --depth)");
        add("tree-root-uniqueness", "Veblen hypertrees admit exactly one Euler rooting");
        add("cored-edge-multiplicity",
            "rootable edge multiplicities are exactly the multiples of m");
        add("matched-tree-decomposition",
            "matched hypertrees split off a comb and keep a unique matching (--m, --k)");
        add("structure", "the three structure checks together");
        add("all", "perturbations, structure checks, and both extremal certifications");
        emit(arr);
        return kExitOk;
    }
    std::vector<std::string> checks = o.checks;
    if (checks.empty()) checks = {"perturbations", "structure"};
    std::vector<Report> rs;
    for (const auto& id : checks)
        for (auto& r : run_verify_check(id, o)) rs.push_back(std::move(r));
    json out;
    json arr = json::array();
    bool all_passed = true;
    for (const auto& r : rs) {
        json rj;
        rj["title"] = r.title;
        rj["passed"] = r.passed();
        json lines = json::array();
        for (const auto& l : r.lines) {
            json lj;
            lj["name"] = l.name;
            lj["pass"] = l.pass;
            lj["detail"] = l.detail;
            lines.push_back(std::move(lj));
        }
        rj["lines"] = std::move(lines);
        arr.push_back(std::move(rj));
        all_passed = all_passed && r.passed();
    }
    out["checks"] = std::move(arr);
    out["passed"] = all_passed;
    emit(out);
    return all_passed ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact adjacency-tensor traces and Estrada indices of uniform hypergraphs"};
    app.require_subcommand(1);

    TraceOpts topts;
    auto* t = app.add_subcommand("trace", "closed-form Tr_d (hypertrees and linear unicyclic)");
    t->add_option("input", topts.path, "hypergraph JSON file")->required();
    t->add_option("-d,--d", topts.ds, "trace order (repeatable)")->required();
    t->add_flag("--terms", topts.terms, "include the per-shape breakdown (json only)");
    t->add_option("--format", topts.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    OracleOpts oopts;
    auto* orc = app.add_subcommand("oracle", "brute-force Tr_d over rooted edge multisets");
    orc->add_option("input", oopts.path, "hypergraph JSON file")->required();
    orc->add_option("-d,--d", oopts.ds, "trace order (repeatable)")->required();
    orc->add_option("--threads", oopts.threads, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    orc->add_option("--budget", oopts.budget, "largest multiset count attempted")
        ->check(CLI::PositiveNumber)
        ->envname("HGTRACE_BUDGET")
        ->capture_default_str();
    orc->add_option("--method", oopts.method, "bruteforce, or matrix for graphs (m = 2)")
        ->check(CLI::IsMember({"bruteforce", "matrix"}))
        ->capture_default_str();
    orc->add_option("--format", oopts.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    EstradaOpts eopts;
    auto* est = app.add_subcommand("estrada", "certified Estrada index interval");
    est->add_option("input", eopts.path, "hypergraph JSON file")->required();
    est->add_option("--depth", eopts.depth, "truncation depth D (default: tail bound <= 1e-6)");
    est->add_option("--digits", eopts.digits, "decimal digits printed")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CompareOpts copts;
    auto* cmp = app.add_subcommand("compare", "order two Estrada indices by certified intervals");
    cmp->add_option("a", copts.path_a, "first hypergraph JSON file")->required();
    cmp->add_option("b", copts.path_b, "second hypergraph JSON file")->required();
    cmp->add_option("--depth", copts.depth, "truncation depth D (default: per-input choice)");
    cmp->add_option("--digits", copts.digits, "decimal digits printed")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    EnumerateOpts nopts;
    auto* en = app.add_subcommand("enumerate", "list a family up to isomorphism");
    en->add_option("--family", nopts.family, "hypertrees, matched-hypertrees, or unicyclic")
        ->check(CLI::IsMember({"hypertrees", "matched-hypertrees", "unicyclic"}))
        ->required();
    en->add_option("-m,--m", nopts.m, "uniformity")->required()->check(CLI::Range(2, 16));
    en->add_option("--edges", nopts.edges, "edge count (hypertrees, unicyclic)");
    en->add_option("--matching", nopts.matching, "matching size (matched-hypertrees)");
    en->add_option("--girth", nopts.girth, "cycle length (unicyclic)");

    VerifyOpts vopts;
    auto* ver = app.add_subcommand("verify", "run inequality and structure checks");
    ver->add_option("--check", vopts.checks, "check id (repeatable; default: perturbations, structure)");
    ver->add_option("--instances", vopts.instances_path, "perturbation instance JSON file");
    ver->add_flag("--list", vopts.list, "list available check ids");
    ver->add_option("-m,--m", vopts.m, "uniformity for parametrized checks")->capture_default_str();
    ver->add_option("-k,--k", vopts.k, "matching size for matched-tree checks")->capture_default_str();
    ver->add_option("-z,--z", vopts.z, "edge count for unicyclic checks")->capture_default_str();
    ver->add_option("--depth", vopts.depth, "truncation depth for interval comparisons (0 = auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*t) return run_trace(topts);
        if (*orc) return run_oracle(oopts);
        if (*est) return run_estrada(eopts);
        if (*cmp) return run_compare(copts);
        if (*en) return run_enumerate(nopts);
        if (*ver) return run_verify(vopts);
    } catch (const ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitParse;
    } catch (const UnsupportedTopologyError& e) {
        std::cerr << e.what() << '\n';
        return kExitUnsupported;
    } catch (const ResourceLimitError& e) {
        std::cerr << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitOk;
}
