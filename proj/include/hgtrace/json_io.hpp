// JSON interchange for hypergraphs: {"m": int, "n": int, "edges": [[...]]}.
#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hgtrace/hypergraph.hpp"

namespace hgtrace {

// Thrown on malformed documents; carries a human-readable location.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

nlohmann::json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

// Reads and validates one hypergraph document from a file.
Hypergraph load_hypergraph(const std::string& path);

} // namespace hgtrace
