#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lck {

enum class ErrorKind {
  DimensionMismatch,
  ArityMismatch,
  NotReductive,
  NotSemisimple,
  ThetaNotClosed,
  NoSolution,
  NotIntegrable,
  NotTransverse,
  NotClosed,
  DegenerateParameter,
  NotLck,
  LeeNotClosed,
  NotSymmetric,
  NotPositiveDefinite,
  DegenerateForm,
  DegeneratePotential,
  NotTorusLike,
  NotDecomposable,
  Precondition,
  UnknownName,
  ParseError,
  SchemaError,
  JacobiViolation,
};

std::string_view to_string(ErrorKind kind);

// All engine failures are reported through this one exception type; the kind
// carries the contract-level error name, the message carries the witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lck
