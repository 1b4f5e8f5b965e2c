#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pancyc {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("parse error, line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when the engine reaches a state that the minimum-degree condition
// rules out: a guaranteed edge is missing, a set is smaller than its degree
// bound, and so on. Carries a dump of the offending graph and context so a
// failure can be reproduced offline.
struct TheoremViolation : std::runtime_error {
    std::string dump;
    explicit TheoremViolation(const std::string& msg, std::string dump_ = {})
        : std::runtime_error(msg), dump(std::move(dump_)) {}
};

// Structural bug in the engine itself (invalid constructed cycle, assignment
// collision, non-decreasing improvement). Distinct from TheoremViolation so
// tests can tell the two apart.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pancyc
