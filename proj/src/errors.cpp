#include "conifold/errors.hpp"

namespace conifold {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::OverflowRisk: return "OverflowRisk";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NoCertificate: return "NoCertificate";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::MaxIterations: return "MaxIterations";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::TermBudgetExceeded: return "TermBudgetExceeded";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorCode::DuplicateRay: return "DuplicateRay";
    case ErrorCode::DegenerateSpan: return "DegenerateSpan";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
{
}

}  // namespace conifold
