#pragma once

#include <stdexcept>

namespace partlab {

// An argument lies outside the documented domain of an operation
// (malformed partition data, an invalid symbol, a substitution that
// cannot be carried out exactly, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A reciprocal was requested for a series whose constant term is not a
// unit, so the inverse would not have integer coefficients.
class NonInvertibleError : public DomainError {
public:
    using DomainError::DomainError;
};

// An identity, statistic, or series id that is not in the registry.
class RegistryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The request is well-formed but exceeds the supported exact range.
class FeasibilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An infinite sum failed to leave the truncation window within the
// allotted number of terms, so its tail cannot be discarded safely.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Command-line usage problems (unknown subcommand, missing argument).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace partlab
