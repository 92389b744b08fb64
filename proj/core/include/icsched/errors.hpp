#pragma once

#include <stdexcept>
#include <string>

namespace ics {

/// Thrown when the projected DP state count exceeds the configured ceiling.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a brute-force oracle is asked to enumerate beyond its cap.
struct CapError : std::runtime_error {
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed input files (bad JSON, wrong schema, unknown fields).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ics
