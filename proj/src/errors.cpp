#include "jacobsthal/errors.hpp"

namespace jacobsthal {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotASquare: return "NotASquare";
    case Errc::NotANonresidue: return "NotANonresidue";
    case Errc::NIsACube: return "NIsACube";
    case Errc::ThresholdExceeded: return "ThresholdExceeded";
    case Errc::WrongResidueClass: return "WrongResidueClass";
    case Errc::NoRepresentation: return "NoRepresentation";
    case Errc::BadReduction: return "BadReduction";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::DivisibilityViolation: return "DivisibilityViolation";
    case Errc::WeilBoundViolation: return "WeilBoundViolation";
    case Errc::HasseViolation: return "HasseViolation";
    case Errc::InconsistentCounts: return "InconsistentCounts";
  }
  return "Unknown";
}

bool is_falsification(Errc code) {
  switch (code) {
    case Errc::ParityViolation:
    case Errc::DivisibilityViolation:
    case Errc::WeilBoundViolation:
    case Errc::HasseViolation:
    case Errc::InconsistentCounts:
      return true;
    default:
      return false;
  }
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace jacobsthal
