// Canonical labeling for small hypergraphs: iterative color refinement plus
// individualization backtracking. Two hypergraphs are isomorphic exactly when
// their canonical strings match; intended scale is a few dozen vertices.
#pragma once

#include <string>

#include "hgtrace/hypergraph.hpp"

namespace hgtrace {

std::string canonical_form(const Hypergraph& h);

bool isomorphic(const Hypergraph& a, const Hypergraph& b);

// Relabeled copy realizing the canonical string.
Hypergraph canonical_copy(const Hypergraph& h);

} // namespace hgtrace
