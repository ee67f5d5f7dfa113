#pragma once

#include <stdexcept>
#include <string>

namespace frz {

// Domain-level rejection: the input is well-formed but violates an invariant
// (excluded surface, non-exact division, divisibility failure, ...).
// CLI maps this to exit code 1.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input (bad JSON, bad rational literal, unknown document kind).
// CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Internal invariant broken; indicates a bug, not bad input.
struct LogicError : std::logic_error {
    explicit LogicError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace frz
