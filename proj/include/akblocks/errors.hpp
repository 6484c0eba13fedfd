#pragma once

#include <stdexcept>
#include <string>

namespace akblocks {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (multipartition grammar, CLI arguments).
struct parse_error : error {
    using error::error;
};

// An operation was called outside its contract (wrong weight, size
// mismatch, invalid parameters, mixed field contexts, ...).
struct precondition_error : error {
    using error::error;
};

struct context_mismatch_error : precondition_error {
    using precondition_error::precondition_error;
};

struct division_by_zero_error : precondition_error {
    using precondition_error::precondition_error;
};

// A configurable size limit was exceeded (basis cap, tableau cap).
struct resource_cap_error : error {
    using error::error;
};

// A verified structural statement failed on a concrete instance.  The
// `statement` field names the check that failed.
struct theorem_violation : error {
    std::string statement;
    theorem_violation(std::string stmt, const std::string& detail)
        : error(stmt + ": " + detail), statement(std::move(stmt)) {}
};

// Internal consistency check failed; indicates a bug, not bad input.
struct internal_error : error {
    using error::error;
};

}  // namespace akblocks
