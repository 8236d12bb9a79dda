#include "bohr/error.hpp"

namespace bohr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::IncommensurableFrequencies: return "IncommensurableFrequencies";
    case ErrorKind::ConstantFunction: return "ConstantFunction";
    case ErrorKind::NotAlmostPeriodic: return "NotAlmostPeriodic";
    case ErrorKind::AlreadyBounded: return "AlreadyBounded";
    case ErrorKind::InvalidTau: return "InvalidTau";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace bohr
