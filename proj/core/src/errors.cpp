#include "ddfkit/errors.hpp"

namespace ddfkit {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::OverlappingClasses: return "OverlappingClasses";
        case ErrorKind::ElementOutOfRange: return "ElementOutOfRange";
        case ErrorKind::EmptyClass: return "EmptyClass";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::TooFewWords: return "TooFewWords";
        case ErrorKind::NotInNormalizer: return "NotInNormalizer";
        case ErrorKind::NotPartitionType: return "NotPartitionType";
        case ErrorKind::DegenerateTaps: return "DegenerateTaps";
        case ErrorKind::NotPrimitive: return "NotPrimitive";
        case ErrorKind::BadK: return "BadK";
        case ErrorKind::NotTransitive: return "NotTransitive";
        case ErrorKind::BadBasePoint: return "BadBasePoint";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace ddfkit
