#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Input lies outside the domain of an operation (zero vector, index out of range, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A value failed one of its type invariants during construction.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called with arguments that violate its stated precondition.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace toric
