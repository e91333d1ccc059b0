#include "iet/error.hpp"

namespace iet {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::LengthSumError: return "LengthSumError";
        case ErrorKind::NonBijectivePermutation: return "NonBijectivePermutation";
        case ErrorKind::NonPositiveLength: return "NonPositiveLength";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::FlipUnsupported: return "FlipUnsupported";
        case ErrorKind::KeaneViolation: return "KeaneViolation";
        case ErrorKind::Reducible: return "Reducible";
        case ErrorKind::BadCutPoints: return "BadCutPoints";
        case ErrorKind::ZeroLine: return "ZeroLine";
        case ErrorKind::SequenceTooShort: return "SequenceTooShort";
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::NotPrimitive: return "NotPrimitive";
        case ErrorKind::MaxIterExceeded: return "MaxIterExceeded";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::PrefixTooShort: return "PrefixTooShort";
        case ErrorKind::ZeroDenominatorEntry: return "ZeroDenominatorEntry";
        case ErrorKind::NoRealFixedPoint: return "NoRealFixedPoint";
        case ErrorKind::RationalFixedPoint: return "RationalFixedPoint";
        case ErrorKind::PrecisionLoss: return "PrecisionLoss";
    }
    return "Unknown";
}

}  // namespace iet
