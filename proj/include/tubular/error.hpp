#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tubular {

enum class ErrorCode {
  InvalidGraph,
  Disconnected,
  NonPrimitiveInclusion,
  InconsistentPrescription,
  AllZero,
  CharacterZeroOnEdge,
  MissingVertexFamily,
  NonSurjectiveCharacter,
  ZeroEdgeValue,
  PathNotClosed,
  UnknownGenerator,
  ShapeMismatch,
  NoNonzeroGenerator,
  NonDivisible,
  ZeroPolynomial,
  MissingGenerator,
  ParseError,
  UnknownName,
  InternalError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tubular
