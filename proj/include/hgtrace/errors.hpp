#pragma once

#include <stdexcept>
#include <string>

namespace hgtrace {

// Input is structurally valid but outside the closed-form engine's domain
// (not a hypertree and not a linear unicyclic hypergraph).
struct UnsupportedTopologyError : std::runtime_error {
    explicit UnsupportedTopologyError(const std::string& what)
        : std::runtime_error(what) {}
};

// An enumeration would exceed the configured resource budget.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace hgtrace
