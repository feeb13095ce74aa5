#pragma once

// Jacobsthal sums sum_{x mod p} (f(x)/p) and the specific families whose
// values encode the representations p = a^2 + b^2, p = a^2 + 2b^2 and
// 3p = A^2 + AB + B^2.

#include <cstdint>
#include <span>
#include <vector>

#include "jacobsthal/modarith.hpp"
#include "jacobsthal/poly.hpp"

namespace jacobsthal {

/// Legendre symbols of every residue modulo p, built in one pass over the
/// squares.
class QrTable {
 public:
  static constexpr uint64_t kDefaultLimit = uint64_t{1} << 31;

  /// Throws Error(ThresholdExceeded) when p > limit.
  explicit QrTable(const OddPrime& p, uint64_t limit = kDefaultLimit);

  const OddPrime& prime() const noexcept { return p_; }
  int operator[](uint64_t a) const noexcept { return table_[a]; }
  std::span<const int8_t> values() const noexcept { return table_; }

 private:
  OddPrime p_;
  std::vector<int8_t> table_;
};

inline QrTable qr_table(const OddPrime& p, uint64_t limit = QrTable::kDefaultLimit) {
  return QrTable(p, limit);
}

struct SumResult {
  int64_t raw_sum;
  OddPrime p;
  PolyModP poly;
};

enum class SumPath {
  Auto,   // table below kAutoTableLimit, Euler's criterion above
  Table,
  Euler,
};

inline constexpr uint64_t kAutoTableLimit = uint64_t{1} << 28;

SumResult jacobsthal_sum(const PolyModP& f, SumPath path = SumPath::Auto);
SumResult jacobsthal_sum(const PolyModP& f, const QrTable& table);
SumResult jacobsthal_sum(std::span<const int64_t> coefficients, const OddPrime& p);

/// A family sum together with the integer it encodes (raw / 2, raw / 4 or
/// (1 + raw) / 4). Signs are kept as computed.
struct ScaledSum {
  int64_t raw_sum;
  int64_t value;

  uint64_t magnitude() const noexcept {
    return static_cast<uint64_t>(value < 0 ? -value : value);
  }
};

struct CubicSums {
  int64_t A;
  int64_t B;
};

// Integer coefficient vectors (constant term first) of the named families.
std::vector<int64_t> a_part_polynomial();                  // x^3 + 4x^2 + 2x
std::vector<int64_t> b_part_polynomial_1mod8(int64_t n);   // x^5 + n x
std::vector<int64_t> b_part_polynomial_3mod8();            // x^6 + 4x^5 + 10x^4 - 20x^2 - 16x - 8
std::vector<int64_t> classical_polynomial(int64_t n);      // x^3 - n x
std::vector<int64_t> cubic_polynomial(int64_t n);          // x^3 + n

/// A = raw / 2 for x^3 + 4x^2 + 2x, p = 1, 3 mod 8.
/// Errors: WrongResidueClass, ParityViolation, WeilBoundViolation.
ScaledSum sum_A(const OddPrime& p);
ScaledSum sum_A(const QrTable& table);

/// B = raw / 4 for x^5 + n x, p = 1 mod 8 and n a nonresidue.
/// Errors: WrongResidueClass, NotANonresidue, DivisibilityViolation,
/// WeilBoundViolation.
ScaledSum sum_B1(const OddPrime& p, const FpElement& n);
ScaledSum sum_B1(const QrTable& table, const FpElement& n);

/// B = (1 + raw) / 4 for the sextic, p = 3 mod 8.
/// Errors: WrongResidueClass, DivisibilityViolation, WeilBoundViolation.
ScaledSum sum_B2(const OddPrime& p);
ScaledSum sum_B2(const QrTable& table);

/// Raw sum for x^3 - n x at any odd p. Weil bound checked when p does not
/// divide n.
int64_t sum_classical(const OddPrime& p, int64_t n);
int64_t sum_classical(const QrTable& table, int64_t n);

/// raw / 2 for x^3 - n x; requires p = 1 mod 4.
/// Errors: WrongResidueClass, ParityViolation.
ScaledSum classical_half(const OddPrime& p, int64_t n);
ScaledSum classical_half(const QrTable& table, int64_t n);

/// A = sum (x^3 + 1 / p), B = (n/p) sum (x^3 + n / p) for p = 1 mod 6 and n
/// a non-cube. Errors: WrongResidueClass, NIsACube.
CubicSums sum_cubic(const OddPrime& p, int64_t n);
CubicSums sum_cubic(const QrTable& table, int64_t n);

/// x^3 = n is solvable mod p (p = 1 mod 3 makes this a proper subgroup test).
bool is_cube_mod(int64_t n, const OddPrime& p);

/// Smallest n > after that is not a cube mod p; requires p = 1 mod 3.
FpElement next_noncube(const OddPrime& p, uint64_t after = 1);

/// Smallest quadratic nonresidue greater than `after`.
FpElement next_nonresidue(const OddPrime& p, uint64_t after);

}  // namespace jacobsthal
