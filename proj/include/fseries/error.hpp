#pragma once

#include <stdexcept>
#include <string>

namespace fseries {

enum class ErrorKind {
    DivisionByZero,
    NonUnitDivisor,
    MixedRings,
    MissingAssignment,
    BadReduction,
    DivisionValuation,
    PrecisionUnderflow,
    NonpositiveValuation,
    BadValuation,
    NonUnitConstantTerm,
    IntegrationObstruction,
    ZeroDerivative,
    PoleAtOrigin,
    ValuationNotDivisible,
    NonUnitLeading,
    BadGamma,
    BadNormalization,
    Inconsistent,
    WNotNormalized,
    NoConstantMultiplier,
    BadParametrization,
    DivisionNotExact,
    PoleCollision,
    InsufficientTerms,
    UnknownFixture,
    ParseError,
    KindMismatch,
};

const char* kind_name(ErrorKind k) noexcept;

// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace fseries
