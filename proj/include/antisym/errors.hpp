#pragma once

#include <stdexcept>
#include <string>

namespace antisym {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

/// A variable of an evaluated expression has no value at the point.
struct MissingAssignment : Error {
    using Error::Error;
};

struct EmptySubset : Error {
    using Error::Error;
};

/// A denominator factor vanishes at the evaluation point.
struct PoleAtPoint : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

/// Requested size is above the configured limit for the chosen mode.
struct BudgetExceeded : Error {
    using Error::Error;
};

struct DegeneratePointExhaustion : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct NonIntegerExponent : Error {
    using Error::Error;
};

/// Limit at q = 1 requested for an expression with a pole there.
struct DivergentLimit : Error {
    using Error::Error;
};

} // namespace antisym
