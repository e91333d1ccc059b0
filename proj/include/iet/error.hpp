#pragma once

#include <stdexcept>
#include <string>

namespace iet {

enum class ErrorKind {
    InvalidArgument,
    ParseError,
    FieldMismatch,
    // interval exchange construction and evaluation
    LengthSumError,
    NonBijectivePermutation,
    NonPositiveLength,
    DomainError,
    // induction
    FlipUnsupported,
    KeaneViolation,
    Reducible,
    BadCutPoints,
    ZeroLine,
    SequenceTooShort,
    // dimension group
    ZeroVector,
    NotPrimitive,
    MaxIterExceeded,
    NotIrreducible,
    // symbolic
    PrefixTooShort,
    // rotation
    ZeroDenominatorEntry,
    NoRealFixedPoint,
    RationalFixedPoint,
    PrecisionLoss,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a machine-readable kind so
// callers (and the CLI) can map it to an exit status or a diagnostic record.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace iet
