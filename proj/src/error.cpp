#include "ustar/error.hpp"

namespace ustar {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::EmptySpace: return "EmptySpace";
    case ErrorCode::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorCode::NegativeDistance: return "NegativeDistance";
    case ErrorCode::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case ErrorCode::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NegativeLabel: return "NegativeLabel";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotGenerating: return "NotGenerating";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotDecreasing: return "NotDecreasing";
    case ErrorCode::NotUltrametric: return "NotUltrametric";
    case ErrorCode::NotACenter: return "NotACenter";
    case ErrorCode::NotFourPoints: return "NotFourPoints";
    case ErrorCode::CardinalityThree: return "CardinalityThree";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::InvalidTailLaw: return "InvalidTailLaw";
    case ErrorCode::NotCompact: return "NotCompact";
    case ErrorCode::FiniteSpec: return "FiniteSpec";
    case ErrorCode::NotDecreasingToZero: return "NotDecreasingToZero";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::MalformedPresentation: return "MalformedPresentation";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
  }
  return "Unknown";
}

}  // namespace ustar
