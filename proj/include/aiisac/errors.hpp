#pragma once

#include <stdexcept>
#include <string>

namespace aiisac {

/// Precondition violated by a caller-supplied argument.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Root bracket without a sign change.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A zero AI budget has no finite equivalent noise; use the limit forms instead.
class DegenerateBudget : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Degenerate input (e.g. an all-zero covariance) where a non-trivial one is required.
class DegenerateInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Matrix that must be positive definite is not (numerically).
class SingularMatrix : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fisher information is zero, so no finite CRLB exists.
class UnobservableParameter : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Least-squares fit on non-positive data (log of a non-positive gap).
class DegenerateFit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Configuration file or command-line value could not be used.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace aiisac
