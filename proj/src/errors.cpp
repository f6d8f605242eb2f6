#include "latrec/errors.hpp"

namespace latrec {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateBasis: return "DegenerateBasis";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotASublattice: return "NotASublattice";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::MissingCell: return "MissingCell";
    case ErrorKind::PlanLatticeMismatch: return "PlanLatticeMismatch";
    case ErrorKind::SizeTooSmall: return "SizeTooSmall";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace latrec
