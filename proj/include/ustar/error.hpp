#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ustar {

enum class ErrorCode {
  // input shape / parsing
  ParseError,
  ShapeMismatch,
  EmptySpace,
  // semimetric axioms
  AsymmetricMatrix,
  NegativeDistance,
  ZeroOffDiagonal,
  NonzeroDiagonal,
  DuplicateName,
  // subspaces
  EmptySubset,
  UnknownPoint,
  // trees
  NotATree,
  NegativeLabel,
  UnknownVertex,
  NotGenerating,
  IndexOutOfRange,
  NotDecreasing,
  // US decision
  NotUltrametric,
  NotACenter,
  NotFourPoints,
  CardinalityThree,
  InternalInconsistency,
  // infinite models
  InvalidTailLaw,
  NotCompact,
  FiniteSpec,
  NotDecreasingToZero,
  NegativeInput,
  MalformedPresentation,
  // harness
  BoundExceeded,
  PreconditionFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

/// The single exception type thrown by the library. `code()` identifies the
/// violated precondition or axiom; `what()` carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ustar
