#pragma once

#include <stdexcept>
#include <string>

namespace f2norm {

// Three families, matching the CLI exit codes:
//   InvariantViolation -> 1, InputError -> 2, ResourceLimit -> 3.

/// A proven inequality or identity failed to hold; always an implementation bug.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Malformed input, out-of-range argument or unsupported configuration.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A configured resource cap was hit (wide-integer overflow, search budget).
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArithmeticOverflow : ResourceLimit {
    using ResourceLimit::ResourceLimit;
};

struct BudgetExceeded : ResourceLimit {
    using ResourceLimit::ResourceLimit;
};

struct ExponentOverflow : InputError {
    using InputError::InputError;
};

struct ResolutionError : InputError {
    using InputError::InputError;
};

struct DependentSet : InputError {
    using InputError::InputError;
};

struct ZeroMass : InputError {
    using InputError::InputError;
};

/// f_V vanishes identically: A is a union of V-perp cosets.
struct ZeroResidual : InputError {
    using InputError::InputError;
};

struct NoQualifyingLevel : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

}  // namespace f2norm
