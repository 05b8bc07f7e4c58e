#include "psingular/errors.hpp"

namespace psing {

const char* err_name(Err code) {
    switch (code) {
        case Err::OrderCapExceeded: return "OrderCapExceeded";
        case Err::InvalidPermutation: return "InvalidPermutation";
        case Err::NotNormal: return "NotNormal";
        case Err::UnknownGroupName: return "UnknownGroupName";
        case Err::CertificationFailed: return "CertificationFailed";
        case Err::NotAHook: return "NotAHook";
        case Err::SizeMismatch: return "SizeMismatch";
        case Err::IntegralityViolation: return "IntegralityViolation";
        case Err::PrimeDoesNotDivideOrder: return "PrimeDoesNotDivideOrder";
        case Err::NotPSolvable: return "NotPSolvable";
        case Err::HypothesisNotMet: return "HypothesisNotMet";
        case Err::DimensionCap: return "DimensionCap";
        case Err::ConvergenceFailure: return "ConvergenceFailure";
        case Err::CardinalityMismatch: return "CardinalityMismatch";
        case Err::NTooLarge: return "NTooLarge";
        case Err::ParseError: return "ParseError";
    }
    return "UnknownError";
}

}  // namespace psing
