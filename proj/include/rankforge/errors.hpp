#pragma once

#include <stdexcept>
#include <string>

namespace rankforge {

enum class ErrorCode {
    NotPrime,
    ReducibleModulus,
    NotPrimitive,
    DivisionByZero,
    ContextMismatch,
    LogOfZero,
    TableUnavailable,
    StrideNotCoprime,
    DependentBasis,
    DependentPoints,
    EnumerationTooLarge,
    ZeroCode,
    InadmissibleEta,
    InadmissiblePair,
    BadK,
    EtaZero,
    SingularIsometry,
    WorkBoundExceeded,
    NotASpreadSet,
    NotScattered,
    DimensionMismatch,
    ParseError,
    InvalidArgument,
    FieldTooLarge,
};

const char* error_code_name(ErrorCode c);

/// All library failures throw this; code() gives the machine-readable reason.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace rankforge
