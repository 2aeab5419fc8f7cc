#ifndef ODE2_ERRORS_HPP
#define ODE2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ode2 {

enum class ErrorCode {
    MixedRadicands,
    DivisionByZero,
    NotSecondOrder,
    NonPolynomialResult,
    ApproximatePoint,
    ApproximateLocations,
    ApproximateCenter,
    NotSingular,
    IrregularPoint,
    NotRegular,
    NotFuchsian,
    IndicialResonance,
    OutsideDisk,
    NotStandardizable,
    InconsistentExponents,
    Unrecognized,
    SyntaxError,
    NonPolynomialCoefficient,
    FreeParameter,
    UsageError,
    Internal,
};

const char* error_code_name(ErrorCode code);

// All library failures funnel through this one exception type; `code`
// distinguishes domain errors (exit 1 at the CLI) from usage/syntax
// errors (exit 2).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

    long index = -1;     // IndicialResonance: first resonant n; SyntaxError: column
    std::string detail;  // offending point, token or identifier

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace ode2

#endif
