#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jacobsthal {

enum class Errc {
  InvalidArgument,
  NotPrime,
  NotASquare,
  NotANonresidue,
  NIsACube,
  ThresholdExceeded,
  WrongResidueClass,
  NoRepresentation,
  BadReduction,
  // The following can only be raised when a checked identity fails.
  ParityViolation,
  DivisibilityViolation,
  WeilBoundViolation,
  HasseViolation,
  InconsistentCounts,
};

std::string_view to_string(Errc code);

/// True for error codes that signal a failed mathematical identity rather
/// than a bad input.
bool is_falsification(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace jacobsthal
