// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace symq {

struct division_by_zero : std::domain_error {
    division_by_zero() : std::domain_error("division by zero") {}
};

struct carrier_mismatch : std::invalid_argument {
    explicit carrier_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Raised by expand() when an expression cannot be brought to normal form,
// e.g. a function application nested inside another application's argument.
struct expand_error : std::invalid_argument {
    explicit expand_error(const std::string& what) : std::invalid_argument(what) {}
};

// Raised by symmetrize() on non-homogeneous input; carries the failing witness.
struct homogeneity_error : std::invalid_argument {
    std::string witness;
    explicit homogeneity_error(const std::string& w)
        : std::invalid_argument("input is not homogeneous of the requested degree: " + w), witness(w) {}
};

// Raised when a rewrite fact set violates its construction invariants.
struct fact_error : std::invalid_argument {
    explicit fact_error(const std::string& what) : std::invalid_argument(what) {}
};

struct parse_error : std::runtime_error {
    int line;
    int column;
    parse_error(int l, int c, const std::string& what)
        : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + what),
          line(l), column(c) {}
};

}  // namespace symq
