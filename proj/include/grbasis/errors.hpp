#pragma once

#include <stdexcept>

namespace grbasis {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A zero divisor was used where a unit is required.
struct NotAUnit : Error {
    using Error::Error;
};

// Matrix inversion on a matrix whose determinant is not a unit.
struct Singular : Error {
    using Error::Error;
};

// The given elements do not form a free-module basis.
struct NotABasis : Error {
    using Error::Error;
};

// Operands belong to different rings or moduli.
struct RingMismatch : Error {
    using Error::Error;
};

// A precondition on the inputs does not hold (wrong shape, not monic, ...).
struct BadArgument : Error {
    using Error::Error;
};

// An exhaustive computation would exceed the configured guard.
struct TooLarge : Error {
    using Error::Error;
};

// A literal or spec string could not be parsed.
struct ParseError : Error {
    using Error::Error;
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InternalCheckFailure : Error {
    using Error::Error;
};

}  // namespace grbasis
