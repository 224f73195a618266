#pragma once

#include <stdexcept>
#include <string>

namespace cstar {

// Malformed data: non-square blocks, mismatched block dimensions.
struct structural_error : std::runtime_error {
    explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument values: bad window index, out-of-range parameters,
// failed preconditions.
struct argument_error : std::invalid_argument {
    explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

// Request exceeds a documented size limit (exact search, window materialization).
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematically guaranteed bound failed; signals a truncation artifact or a bug.
struct invariant_violation : std::logic_error {
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cstar
