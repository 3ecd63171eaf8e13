/// @file errors.hpp
/// @brief Exception types shared by all wallflow modules.
#pragma once

#include <stdexcept>
#include <string>

namespace wallflow {

/// Argument outside the domain of a closed-form expression (k = 0, s outside I_n, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raw exponential would overflow; the caller has to use the fused form.
class OverflowGuardError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Fixed-point or quadrature iteration failed to converge.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace wallflow
