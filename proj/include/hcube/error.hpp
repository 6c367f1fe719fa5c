#pragma once

// Error type shared by every hcube module. Failures carry a machine-readable
// code so callers (and the CLI's JSON reports) can branch on the kind.

#include <stdexcept>
#include <string>
#include <string_view>

namespace hcube {

enum class ErrorCode {
  Parity,
  MalformedFace,
  Index,
  NotStochastic,
  Shape,
  NoPreimage,
  DegenerateCell,
  EmptyCode,
  GraphMismatch,
  EigenvalueMismatch,
  Radius,
  TranslateCollision,
  Form,
  Bound,
  DuplicateCoset,
  CellOverlap,
  FaceCover,
  MergeCondition,
  NotEquitable,
  Precondition,
  Parse,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parity: return "ParityError";
    case ErrorCode::MalformedFace: return "MalformedFace";
    case ErrorCode::Index: return "IndexError";
    case ErrorCode::NotStochastic: return "NotStochastic";
    case ErrorCode::Shape: return "ShapeError";
    case ErrorCode::NoPreimage: return "NoPreimage";
    case ErrorCode::DegenerateCell: return "DegenerateCell";
    case ErrorCode::EmptyCode: return "EmptyCode";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::EigenvalueMismatch: return "EigenvalueMismatch";
    case ErrorCode::Radius: return "RadiusError";
    case ErrorCode::TranslateCollision: return "TranslateCollision";
    case ErrorCode::Form: return "FormError";
    case ErrorCode::Bound: return "BoundError";
    case ErrorCode::DuplicateCoset: return "DuplicateCoset";
    case ErrorCode::CellOverlap: return "CellOverlap";
    case ErrorCode::FaceCover: return "FaceCoverError";
    case ErrorCode::MergeCondition: return "MergeConditionError";
    case ErrorCode::NotEquitable: return "NotEquitable";
    case ErrorCode::Precondition: return "PreconditionError";
    case ErrorCode::Parse: return "ParseError";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace hcube
