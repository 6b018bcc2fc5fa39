#include "qbr/error.hpp"

namespace qbr {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::MalformedSpec: return "MalformedSpec";
    case ErrorCode::ForeignElement: return "ForeignElement";
    case ErrorCode::NonUnitalRing: return "NonUnitalRing";
    case ErrorCode::DifferentRings: return "DifferentRings";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotAnExtension: return "NotAnExtension";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::NotAPartialInverse: return "NotAPartialInverse";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::NotInCorner: return "NotInCorner";
    case ErrorCode::BadEquivalenceData: return "BadEquivalenceData";
    case ErrorCode::NoReducer: return "NoReducer";
    case ErrorCode::NotInIdeal: return "NotInIdeal";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::StageWitnessNotFound: return "StageWitnessNotFound";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::NotABIdeal: return "NotABIdeal";
    case ErrorCode::IdealCapExceeded: return "IdealCapExceeded";
    case ErrorCode::NotExchange: return "NotExchange";
    case ErrorCode::ScaleCapExceeded: return "ScaleCapExceeded";
  }
  return "Unknown";
}

}  // namespace qbr
