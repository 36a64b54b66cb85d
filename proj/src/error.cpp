#include "tubular/error.hpp"

namespace tubular {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonPrimitiveInclusion: return "NonPrimitiveInclusion";
    case ErrorCode::InconsistentPrescription: return "InconsistentPrescription";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::CharacterZeroOnEdge: return "CharacterZeroOnEdge";
    case ErrorCode::MissingVertexFamily: return "MissingVertexFamily";
    case ErrorCode::NonSurjectiveCharacter: return "NonSurjectiveCharacter";
    case ErrorCode::ZeroEdgeValue: return "ZeroEdgeValue";
    case ErrorCode::PathNotClosed: return "PathNotClosed";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NoNonzeroGenerator: return "NoNonzeroGenerator";
    case ErrorCode::NonDivisible: return "NonDivisible";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::MissingGenerator: return "MissingGenerator";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace tubular
