#include "fseries/error.hpp"

namespace fseries {

const char* kind_name(ErrorKind k) noexcept {
    switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonUnitDivisor: return "NonUnitDivisor";
    case ErrorKind::MixedRings: return "MixedRings";
    case ErrorKind::MissingAssignment: return "MissingAssignment";
    case ErrorKind::BadReduction: return "BadReduction";
    case ErrorKind::DivisionValuation: return "DivisionValuation";
    case ErrorKind::PrecisionUnderflow: return "PrecisionUnderflow";
    case ErrorKind::NonpositiveValuation: return "NonpositiveValuation";
    case ErrorKind::BadValuation: return "BadValuation";
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::IntegrationObstruction: return "IntegrationObstruction";
    case ErrorKind::ZeroDerivative: return "ZeroDerivative";
    case ErrorKind::PoleAtOrigin: return "PoleAtOrigin";
    case ErrorKind::ValuationNotDivisible: return "ValuationNotDivisible";
    case ErrorKind::NonUnitLeading: return "NonUnitLeading";
    case ErrorKind::BadGamma: return "BadGamma";
    case ErrorKind::BadNormalization: return "BadNormalization";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::WNotNormalized: return "WNotNormalized";
    case ErrorKind::NoConstantMultiplier: return "NoConstantMultiplier";
    case ErrorKind::BadParametrization: return "BadParametrization";
    case ErrorKind::DivisionNotExact: return "DivisionNotExact";
    case ErrorKind::PoleCollision: return "PoleCollision";
    case ErrorKind::InsufficientTerms: return "InsufficientTerms";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::KindMismatch: return "KindMismatch";
    }
    return "Unknown";
}

}  // namespace fseries
