#pragma once

#include <stdexcept>
#include <string>

namespace psing {

enum class Err {
    OrderCapExceeded,
    InvalidPermutation,
    NotNormal,
    UnknownGroupName,
    CertificationFailed,
    NotAHook,
    SizeMismatch,
    IntegralityViolation,
    PrimeDoesNotDivideOrder,
    NotPSolvable,
    HypothesisNotMet,
    DimensionCap,
    ConvergenceFailure,
    CardinalityMismatch,
    NTooLarge,
    ParseError,
};

const char* err_name(Err code);

/// All library failures are thrown as Error; `code` identifies the condition
/// and maps onto CLI exit codes (input errors -> 1, verification -> 2).
class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& message)
        : std::runtime_error(std::string(err_name(code)) + ": " + message), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace psing
