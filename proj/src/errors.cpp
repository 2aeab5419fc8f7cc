#include "ode2/errors.hpp"

namespace ode2 {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::MixedRadicands: return "MixedRadicands";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotSecondOrder: return "NotSecondOrder";
    case ErrorCode::NonPolynomialResult: return "NonPolynomialResult";
    case ErrorCode::ApproximatePoint: return "ApproximatePoint";
    case ErrorCode::ApproximateLocations: return "ApproximateLocations";
    case ErrorCode::ApproximateCenter: return "ApproximateCenter";
    case ErrorCode::NotSingular: return "NotSingular";
    case ErrorCode::IrregularPoint: return "IrregularPoint";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotFuchsian: return "NotFuchsian";
    case ErrorCode::IndicialResonance: return "IndicialResonance";
    case ErrorCode::OutsideDisk: return "OutsideDisk";
    case ErrorCode::NotStandardizable: return "NotStandardizable";
    case ErrorCode::InconsistentExponents: return "InconsistentExponents";
    case ErrorCode::Unrecognized: return "Unrecognized";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonPolynomialCoefficient: return "NonPolynomialCoefficient";
    case ErrorCode::FreeParameter: return "FreeParameter";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace ode2
