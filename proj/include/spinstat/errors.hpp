#pragma once

#include <stdexcept>

namespace spinstat {

/// A partition constructor received parts that increase somewhere.
struct NotWeaklyDecreasing : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A label partition does not have the number of boxes the operation expects.
struct SizeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operation that needs at least one element was given none.
struct EmptyInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parallel angle sequences do not have one entry per cycle.
struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The two-row tableau beta(f, s) is not defined for the given arguments.
struct BetaUndefined : std::logic_error {
    using std::logic_error::logic_error;
};

/// A value that must round to a nonnegative integer failed to do so within
/// tolerance.  Signals an implementation bug or a starved quadrature, never
/// a property of valid inputs.
struct NonIntegerResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace spinstat
