#pragma once

#include <stdexcept>
#include <string>

namespace pgres {

enum class ErrorKind {
  NonPrime,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  FieldMismatch,
  NotASquareOrder,
  FieldTooLarge,
  EqualArguments,
  SingularMatrix,
  CollinearPoints,
  OrderTooSmall,
  WrongOrder,
  OddOrder,
  SideConditionInfeasible,
  InvalidId,
  NotASquare,
  NotDoubleBlocking,
  NotDisjointBlockingPair,
  PreconditionUnmet,
  NonAffinePoint,
  NoValidFrame,
  DegreeUnstable,
  BudgetExceeded,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pgres
