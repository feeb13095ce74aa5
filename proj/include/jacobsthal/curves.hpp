#pragma once

// Point counts of y^2 = f(x) over F_p and F_p^2, local factors rebuilt from the
// counts, and the quartic character attached to the fourth root of i(sqrt2 - 1).

#include <cstdint>
#include <string>
#include <vector>

#include "jacobsthal/charsums.hpp"
#include "jacobsthal/modarith.hpp"
#include "jacobsthal/poly.hpp"

namespace jacobsthal {

enum class CurveId {
  E1,         // y^2 = x^3 + 4x^2 + 2x
  E2,         // y^2 = x^3 - 4x^2 + 2x
  X1,         // y^2 = x^5 + x
  X2,         // y^2 = x^6 + 4x^5 + 10x^4 - 20x^2 - 16x - 8
  Congruent,  // y^2 = x^3 - x
};

/// y^2 = f(x) with integer f of degree 3 (genus 1), 5 or 6 (genus 2).
class HyperellipticModel {
 public:
  /// Throws Error(InvalidArgument) for other degrees.
  explicit HyperellipticModel(std::vector<int64_t> coefficients, std::string name = {});

  static HyperellipticModel named(CurveId id);

  const std::vector<int64_t>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  int genus() const noexcept { return degree() == 3 ? 1 : 2; }
  const std::string& name() const noexcept { return name_; }

  /// f mod p. Throws Error(BadReduction) when the degree drops or f is not
  /// squarefree mod p.
  PolyModP reduce(const OddPrime& p) const;
  bool has_good_reduction(const OddPrime& p) const;

 private:
  std::vector<int64_t> coeffs_;
  std::string name_;
};

/// Largest p for which F_p^2 counts are enumerated.
inline constexpr uint64_t kFp2CountLimit = 2000;

/// Projective point count over F_p (extension_degree 1) or F_p^2 (2).
/// Errors: BadReduction, ThresholdExceeded (F_p^2 above kFp2CountLimit),
/// InvalidArgument.
uint64_t count_points(const HyperellipticModel& model, const OddPrime& p, int extension_degree);
uint64_t count_points(const HyperellipticModel& model, const QrTable& table, int extension_degree);

/// P(T) = 1 + c1 T + ... + c_{2g} T^{2g}, the reciprocal of the local factor
/// in T = p^{-s}.
struct LocalFactor {
  int genus;
  std::vector<int64_t> coefficients;  // c1 .. c_{2g}
  OddPrime p;

  int64_t c(int i) const { return coefficients.at(static_cast<std::size_t>(i - 1)); }
};

/// c1 = N1 - p - 1, c2 = p. Throws Error(HasseViolation) if c1^2 > 4p.
LocalFactor local_factor_genus1(const OddPrime& p, uint64_t n1);

/// Newton's identities on N1 = #C(F_p), N2 = #C(F_p^2).
/// Throws Error(InconsistentCounts) on a half-integral c2 or a broken bound.
LocalFactor local_factor_genus2(const OddPrime& p, uint64_t n1, uint64_t n2);

/// Counts the model and rebuilds its factor.
LocalFactor local_factor(const HyperellipticModel& model, const OddPrime& p);

/// #C(F_{p^k}) predicted by the factor via power sums of its reciprocal roots.
int64_t point_count_from_factor(const LocalFactor& factor, int extension_degree);

struct TraceCheck {
  int64_t sum_x1;
  int64_t sum_e1;
  int64_t sum_e2;
  int minus_one_symbol;  // (-1/p)
  bool identity_holds;   // sum_x1 = sum_e1 + sum_e2
  bool twist_holds;      // sum_e2 = (-1/p) sum_e1
};

TraceCheck trace_check(const OddPrime& p);
TraceCheck trace_check(const QrTable& table);
bool trace_identity_check(const OddPrime& p);
bool quadratic_twist_check(const OddPrime& p);

/// chi_k at a degree-two prime above p, as a power of i.
struct KummerValue {
  OddPrime p;
  int k;
  int artin_exponent;  // j with eta^(p^2 - 1) = i^j
  int exponent;        // j * k mod 4; the value is i^exponent
};

/// i(sqrt2 - 1) in F_p^2, with i = fp2_sqrt(-1) and sqrt2 = fp2_sqrt(2).
Fp2Element kummer_radicand(const Fp2Context& ctx);
/// sqrt2 - 1 in F_p^2 with sqrt2 = fp2_sqrt(2).
Fp2Element sqrt2_minus_one(const Fp2Context& ctx);

/// Requires p = 3, 5, 7 mod 8 and 0 <= k <= 3.
/// Errors: WrongResidueClass, InvalidArgument, InconsistentCounts.
KummerValue kummer_character(const OddPrime& p, int k);

}  // namespace jacobsthal
