#pragma once

#include <stdexcept>
#include <string>

namespace pcakit {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operand dimensions are incompatible (matmul mismatch, wrong vector length, ...).
class ShapeError : public Error {
public:
    using Error::Error;
};

// A count parameter (component index, rank r, ...) is outside its valid range.
class RangeError : public Error {
public:
    using Error::Error;
};

// An argument is invalid for reasons other than shape or range
// (k > n in k-means, empty template list, negative noise sd, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Malformed input file contents (CSV/PGM). Message carries the position.
class ParseError : public Error {
public:
    using Error::Error;
};

// The operating system refused a read or write. Message carries the path.
class IoError : public Error {
public:
    using Error::Error;
};

// A matrix handed to the symmetric eigensolver is asymmetric beyond tolerance.
class SymmetryError : public Error {
public:
    using Error::Error;
};

// Fewer samples than the estimator needs (covariance with n < 2).
class InsufficientSamplesError : public Error {
public:
    using Error::Error;
};

// A numeric result is undefined or degenerate (0/0 spectral ratio,
// vertical best-fit line, eigenvalue below the rounding floor).
class NumericError : public Error {
public:
    using Error::Error;
};

// The eigensolver exhausted its sweep budget. Carries the residual it reached.
class ConvergenceError : public NumericError {
public:
    ConvergenceError(const std::string& what, double residual)
        : NumericError(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

}  // namespace pcakit
