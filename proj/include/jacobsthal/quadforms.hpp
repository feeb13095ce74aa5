#pragma once

// Representations p = a^2 + D b^2 (D = 1, 2) and 3p = A^2 + AB + B^2, and the
// Frobenius-trace sign laws of y^2 = x^3 - x and y^2 = x^3 + 4x^2 + 2x.

#include <cstdint>
#include <vector>

#include "jacobsthal/charsums.hpp"
#include "jacobsthal/modarith.hpp"

namespace jacobsthal {

/// p = a^2 + D b^2 with a > 0, b >= 0; for D = 1 also a odd, b even.
struct QuadRep {
  uint64_t a;
  uint64_t b;
  int D;
  OddPrime p;

  friend bool operator==(const QuadRep&, const QuadRep&) = default;
};

/// 3p = A^2 + AB + B^2.
struct CubicRep {
  int64_t A;
  int64_t B;
  OddPrime p;

  friend bool operator==(const CubicRep&, const CubicRep&) = default;
};

struct SignReport {
  OddPrime p;
  int64_t predicted_trace;
  int64_t observed_trace;  // p + 1 - #E(F_p)
  bool consistent;
  uint64_t a;
  uint64_t b;
  int64_t epsilon;
};

/// Errors: NoRepresentation when (-D/p) = -1; InvalidArgument for D not in {1, 2}.
QuadRep cornacchia(const OddPrime& p, int D);

inline constexpr uint64_t kBruteForceReprLimit = 100'000'000;

/// Scans b = 0 .. sqrt(p/D). Errors: NoRepresentation, ThresholdExceeded.
QuadRep brute_force_repr(const OddPrime& p, int D);

/// Every normalized representation found by the scan (class number one makes
/// this a single element whenever one exists).
std::vector<QuadRep> brute_force_repr_all(const OddPrime& p, int D);

/// Canonical choice: A > 0 minimal, then B > 0. Errors: WrongResidueClass.
CubicRep cubic_rep(const OddPrime& p);

/// All (A, B) with A^2 + AB + B^2 = 3p, by exhaustive scan.
std::vector<CubicRep> cubic_rep_all(const OddPrime& p);

/// Predicted trace 2 eps a with eps = (-1/a)(-1)^(b/2), p = 1 mod 4, against the
/// counted trace of y^2 = x^3 - x. Errors: WrongResidueClass.
SignReport epsilon_classical(const OddPrime& p);
SignReport epsilon_classical(const QrTable& table);

/// Predicted trace eps a with eps = 2(-1)^(b/2)(-2/a) for p = 1 mod 8 and
/// -2(-2/a) for p = 3 mod 8, against the counted trace of y^2 = x^3 + 4x^2 + 2x.
/// Errors: WrongResidueClass.
SignReport epsilon_sqrtm2(const OddPrime& p);
SignReport epsilon_sqrtm2(const QrTable& table);

}  // namespace jacobsthal
