#pragma once

#include <stdexcept>
#include <string>

namespace qaff {

// Raised when an exact computation hits an undefined operation.
struct MathError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DivisionByZero : MathError {
    DivisionByZero() : MathError("division by zero") {}
};

struct PoleError : MathError {
    using MathError::MathError;
};

struct NonIntegralExponent : MathError {
    using MathError::MathError;
};

// Bad arguments: wrong sizes, malformed input, violated preconditions.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace qaff
