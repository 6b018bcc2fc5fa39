#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qbr {

enum class ErrorCode {
  OrderCapExceeded,
  MalformedSpec,
  ForeignElement,
  NonUnitalRing,
  DifferentRings,
  NotAHomomorphism,
  NotIdempotent,
  PreconditionViolated,
  NotAnExtension,
  InvalidWitness,
  NotAPartialInverse,
  ConstructionFailed,
  NotInCorner,
  BadEquivalenceData,
  NoReducer,
  NotInIdeal,
  NotAUnit,
  StageWitnessNotFound,
  HypothesisFailed,
  NotABIdeal,
  IdealCapExceeded,
  NotExchange,
  ScaleCapExceeded,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qbr
