#include "filiform/errors.hpp"

namespace filiform {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotFiliform: return "NotFiliform";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::AlphaNonzero: return "AlphaNonzero";
    case ErrorCode::WeightsMissing: return "WeightsMissing";
    case ErrorCode::NotCocycle: return "NotCocycle";
    case ErrorCode::CenterNotOneDimensional: return "CenterNotOneDimensional";
    case ErrorCode::NotGradedFiliform: return "NotGradedFiliform";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::EvenDimension: return "EvenDimension";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::GuardViolated: return "GuardViolated";
    case ErrorCode::NoPrintedForm: return "NoPrintedForm";
    case ErrorCode::FiltrationUndefined: return "FiltrationUndefined";
    case ErrorCode::GrLNotSymplectic: return "GrLNotSymplectic";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace filiform
