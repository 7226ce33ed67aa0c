#pragma once

#include <stdexcept>
#include <string>

namespace nwd {

// Bad argument values (out-of-range vertex, zero k, malformed assignment, ...).
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Operation applied outside its mathematical domain (e.g. radius of a
// disconnected graph).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A brute-force oracle was asked to run above its hard size guard.
struct OracleGuardError : std::runtime_error {
    explicit OracleGuardError(const std::string& what) : std::runtime_error(what) {}
};

// A checked structural property failed; indicates a bug upstream.
struct PropertyViolation : std::runtime_error {
    explicit PropertyViolation(const std::string& what) : std::runtime_error(what) {}
};

// A configured budget (game rounds, removal size, indegree ceiling) ran out.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Text input could not be parsed; carries a 1-based line number.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

}  // namespace nwd
