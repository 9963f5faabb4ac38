#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclogon {

enum class ErrorCode {
  ComplexRoots,
  DegenerateTriangle,
  SingularLambda,
  SingularMap,
  NonConvex,
  DegenerateInput,
  NotATriangle,
  NoCyclicQuad,
  NoConvexCyclicPolygon,
  ZeroDenominator,
  FormMismatch,
  PartTooLarge,
  NotSymmetric,
  NotDivisible,
  ZeroPolynomial,
  DegreeMismatch,
  ExtraneousFactorUnremovable,
  MismatchWithPaperForm,
  InvalidArgument,
  Parse,
  Io,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ComplexRoots: return "ComplexRoots";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::SingularLambda: return "SingularLambda";
    case ErrorCode::SingularMap: return "SingularMap";
    case ErrorCode::NonConvex: return "NonConvex";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NotATriangle: return "NotATriangle";
    case ErrorCode::NoCyclicQuad: return "NoCyclicQuad";
    case ErrorCode::NoConvexCyclicPolygon: return "NoConvexCyclicPolygon";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::FormMismatch: return "FormMismatch";
    case ErrorCode::PartTooLarge: return "PartTooLarge";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ExtraneousFactorUnremovable: return "ExtraneousFactorUnremovable";
    case ErrorCode::MismatchWithPaperForm: return "MismatchWithPaperForm";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

/// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cyclogon
