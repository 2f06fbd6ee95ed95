#pragma once

#include <stdexcept>
#include <string>

namespace jacext {

// Thrown by factor_prime_power when q is not of the form p^e, p prime, e >= 1.
struct NotPrimePowerError : std::domain_error {
    explicit NotPrimePowerError(const std::string& what) : std::domain_error(what) {}
};

// Thrown by the special-q predicates when e is even (the notion is defined for
// odd powers only).
struct NotOddPowerError : std::domain_error {
    explicit NotOddPowerError(const std::string& what) : std::domain_error(what) {}
};

struct TableUndefinedError : std::domain_error {
    explicit TableUndefinedError(const std::string& what) : std::domain_error(what) {}
};

struct DivisionByZeroError : std::domain_error {
    explicit DivisionByZeroError(const std::string& what) : std::domain_error(what) {}
};

// Construction-time or lookup-time failure of a finite field spec
// (bad modulus, unsupported order, missing pinned modulus).
struct FieldError : std::domain_error {
    explicit FieldError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace jacext
