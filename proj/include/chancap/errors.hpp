// errors.hpp - exception types shared by all chancap modules

#pragma once

#include <stdexcept>
#include <string>

namespace chancap {

// Argument outside the mathematical domain of a function (caller bug).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Matrix that fails density-matrix / Kraus invariants, or mismatched dimensions.
class InvalidStateError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Numerical failure: non-convergence, instability, quadrature breakdown.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class StepSizeError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class UnsupportedSpectrumError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace chancap
