#ifndef GRR_ERRORS_HPP
#define GRR_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace grr {

// Domain-level failure with a stable machine-readable code.
// Codes in use: DimensionMismatch, OwnerMismatch, PreconditionViolation,
// IndexOutOfRange, HNotInT, NotADivisor, NotGamma, HypothesisUnverified,
// NotPrimitive, NotPairwiseCoprime, NotSaturated, DiagnosticTooLarge,
// InvalidPresentation, ParseError, InvalidTuple.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

} // namespace grr

#endif
