#pragma once

#include <stdexcept>
#include <string>

namespace crn {

/// Invalid parameters or configuration supplied by the caller.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A solve or builder step failed numerically.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularMatrix : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ResidualTooLarge : public NumericalError {
public:
    ResidualTooLarge(double residual, double tol)
        : NumericalError("residual " + std::to_string(residual) + " exceeds tolerance " + std::to_string(tol)),
          residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

class NoConvergence : public NumericalError {
public:
    explicit NoConvergence(long iterations)
        : NumericalError("no convergence after " + std::to_string(iterations) + " iterations") {}
};

/// Builder emitted a state outside the model; always a bug in this library.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace crn
