#include "pgres/error.hpp"

namespace pgres {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotASquareOrder: return "NotASquareOrder";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::EqualArguments: return "EqualArguments";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::CollinearPoints: return "CollinearPoints";
    case ErrorKind::OrderTooSmall: return "OrderTooSmall";
    case ErrorKind::WrongOrder: return "WrongOrder";
    case ErrorKind::OddOrder: return "OddOrder";
    case ErrorKind::SideConditionInfeasible: return "SideConditionInfeasible";
    case ErrorKind::InvalidId: return "InvalidId";
    case ErrorKind::NotASquare: return "NotASquare";
    case ErrorKind::NotDoubleBlocking: return "NotDoubleBlocking";
    case ErrorKind::NotDisjointBlockingPair: return "NotDisjointBlockingPair";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::NonAffinePoint: return "NonAffinePoint";
    case ErrorKind::NoValidFrame: return "NoValidFrame";
    case ErrorKind::DegreeUnstable: return "DegreeUnstable";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace pgres
