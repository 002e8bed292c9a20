#pragma once

#include <stdexcept>
#include <string>

namespace sparsehalf {

// A solver was asked for an instance above its configured size cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive search ran out of its node budget before completing.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Malformed construction spec string or input file.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sparsehalf
