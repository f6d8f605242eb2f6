#pragma once

#include <stdexcept>
#include <string>

namespace latrec {

enum class ErrorKind {
  DegenerateBasis,
  SingularMatrix,
  NotASublattice,
  NotPrimitive,
  InvalidRank,
  RankMismatch,
  RankTooLarge,
  InvalidParams,
  HypothesisViolated,
  InvariantViolation,
  MissingCell,
  PlanLatticeMismatch,
  SizeTooSmall,
  Parse,
};

const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace latrec
