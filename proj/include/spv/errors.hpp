#pragma once

#include <stdexcept>
#include <string>

namespace spv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct FieldMismatch : Error {
    using Error::Error;
};

struct NotNilpotent : Error {
    using Error::Error;
};

struct NotSplit : Error {
    using Error::Error;
};

struct NotCommuting : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct InsufficientData : Error {
    using Error::Error;
};

struct EllOutOfRange : Error {
    using Error::Error;
};

struct BadJordanType : Error {
    using Error::Error;
};

struct FieldTooSmall : Error {
    using Error::Error;
};

// Raised by gram_factor / symmetrize when the form is alternating: an
// invertible symmetric matrix with identically zero diagonal has no
// factorization X X^t with X invertible over a finite field of
// characteristic 2 (all row sums of X would have to vanish).
struct AlternatingObstruction : Error {
    using Error::Error;
};

struct InvariantViolation : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace spv
