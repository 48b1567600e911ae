#pragma once

#include <stdexcept>
#include <string>

namespace bicentric {

enum class ErrorCode {
  DegenerateInput,
  PointInsideCircle,
  PointOnCircle,
  CollinearPoints,
  VertexInsideC,
  VertexOnC,
  AmbiguousTangent,
  PorismViolation,
  NoSolution,
  NonMonotonic,
  PoleAtDEqualsRK,
  ParallelBisectors,
  TangencyViolation,
  WrongArity,
  NotConvex,
  DegenerateE,
  NoChord,
  SchemaError,
  InvariantError,
  InvalidArgument,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace bicentric
