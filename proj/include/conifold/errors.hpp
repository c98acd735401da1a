#ifndef CONIFOLD_ERRORS_HPP
#define CONIFOLD_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace conifold {

enum class ErrorCode {
    SyntaxError,
    NegativeCoefficient,
    OverflowRisk,
    NotUnimodular,
    NoCertificate,
    HypothesisViolated,
    MaxIterations,
    NotPositiveDefinite,
    TermBudgetExceeded,
    InsufficientData,
    NonPrimitiveRay,
    DuplicateRay,
    DegenerateSpan,
    UnknownName,
    InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// front end can map it onto an exit status without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace conifold

#endif
