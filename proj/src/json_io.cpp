#include "hgtrace/json_io.hpp"

#include <fstream>

namespace hgtrace {

nlohmann::json hypergraph_to_json(const Hypergraph& h) {
    nlohmann::json j;
    j["m"] = h.m();
    j["n"] = h.n();
    j["edges"] = h.edges();
    return j;
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("hypergraph: document is not an object");
    for (const char* key : {"m", "n", "edges"})
        if (!j.contains(key)) throw ParseError(std::string("hypergraph: missing field \"") + key + "\"");
    if (!j["m"].is_number_integer() || !j["n"].is_number_integer())
        throw ParseError("hypergraph: \"m\" and \"n\" must be integers");
    if (!j["edges"].is_array()) throw ParseError("hypergraph: \"edges\" must be an array");
    std::vector<std::vector<int>> edges;
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
        const auto& e = j["edges"][i];
        if (!e.is_array())
            throw ParseError("hypergraph: edges[" + std::to_string(i) + "] is not an array");
        std::vector<int> edge;
        for (const auto& v : e) {
            if (!v.is_number_integer())
                throw ParseError("hypergraph: edges[" + std::to_string(i) + "] has a non-integer vertex");
            edge.push_back(v.get<int>());
        }
        edges.push_back(std::move(edge));
    }
    try {
        return Hypergraph(j["m"].get<int>(), j["n"].get<int>(), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Hypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return hypergraph_from_json(j);
}

} // namespace hgtrace
