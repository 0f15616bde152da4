#pragma once

#include <stdexcept>
#include <string>

namespace filiform {

enum class ErrorCode {
  InvalidInput,
  ParseError,
  NotFiliform,
  NotNilpotent,
  AlphaNonzero,
  WeightsMissing,
  NotCocycle,
  CenterNotOneDimensional,
  NotGradedFiliform,
  OddDimension,
  EvenDimension,
  NotSymplectic,
  GuardViolated,
  NoPrintedForm,
  FiltrationUndefined,
  GrLNotSymplectic,
  InvariantViolation
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace filiform
