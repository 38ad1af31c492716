#pragma once

#include "feasikit/numerics/scalar.hpp"

#include <stdexcept>
#include <string>

namespace feasikit {

/// Base for every numerical failure raised by the library.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A 2x2 (or larger) system whose determinant is negligible relative to its scale.
class SingularMatrixError : public NumericalError {
public:
    SingularMatrixError(const std::string& what, Scalar determinant)
        : NumericalError(what + " (det = " + determinant.to_string(12) + ")"), determinant_(std::move(determinant)) {}

    [[nodiscard]] const Scalar& determinant() const { return determinant_; }

private:
    Scalar determinant_;
};

/// An iterative kernel (eigensolver, Newton) exhausted its budget.
class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// A formula evaluated where it is undefined (zero derivative, vanishing denominator).
class DomainError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace feasikit
