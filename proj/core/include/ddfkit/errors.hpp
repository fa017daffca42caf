#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ddfkit {

enum class ErrorKind {
    NonPrimeCharacteristic,
    ReducibleModulus,
    ZeroConstantTerm,
    DimensionMismatch,
    SingularMatrix,
    OverlappingClasses,
    ElementOutOfRange,
    EmptyClass,
    LengthMismatch,
    TooFewWords,
    NotInNormalizer,
    NotPartitionType,
    DegenerateTaps,
    NotPrimitive,
    BadK,
    NotTransitive,
    BadBasePoint,
    NotCoprime,
    ParseError,
    InvalidArgument,
};

std::string_view error_kind_name(ErrorKind kind);

/// Library-wide exception carrying a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace ddfkit
