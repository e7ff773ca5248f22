#pragma once

#include <stdexcept>
#include <string>

namespace polynet {

// Base class for all errors raised by the library. The CLI maps subclasses
// to process exit codes, so new error kinds should derive from one of the
// categories below rather than from Error directly.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid user-supplied configuration (bad architecture string, composite
// modulus, out-of-range degree). Exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

// A computation would exceed a hard resource guard, e.g. a monomial basis
// with more than the allowed number of elements. Exit code 3.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// Search ran out of its oracle-call budget; partial results are available.
// Exit code 4.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

class FieldMismatchError : public Error {
public:
    using Error::Error;
};

class ShapeMismatchError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

// Modulus divides the activation degree; gradients of z^r degenerate.
class BadPrimeError : public Error {
public:
    using Error::Error;
};

// Sample points do not determine the coefficient vectors (monomial
// evaluation matrix is rank deficient). Caller should resample.
class DegenerateSamplesError : public Error {
public:
    using Error::Error;
};

// Interpolation kept hitting singular evaluation matrices after retries.
class InterpolationFailedError : public Error {
public:
    using Error::Error;
};

class NonInvertibleDiagonalError : public Error {
public:
    using Error::Error;
};

} // namespace polynet
