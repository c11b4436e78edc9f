// errors.hpp: Exception types shared by the qheat modules

#pragma once

#include <stdexcept>
#include <string>

namespace qheat {

// Parameter outside the physical/model domain (ω ≤ 0, λ ≥ √(ω1ω2), ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Tabulated spectral density queried at a frequency it does not store.
class LookupError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Inconsistent configuration: unknown reservoir, dimension mismatch, mixed modes.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Linear-algebra or integration failure.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Liouvillian nullspace is not one-dimensional.
class DegenerateSteadyStateError : public NumericError {
public:
    using NumericError::NumericError;
};

// Fixed-step integrator blew up or drifted in trace.
class IntegrationError : public NumericError {
public:
    using NumericError::NumericError;
};

// A quantity that must be real/conserved is not (non-steady or corrupted input).
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qheat
