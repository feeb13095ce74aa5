#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "jacobsthal/modarith.hpp"

namespace jacobsthal {

/// Integer polynomial reduced modulo an odd prime. Coefficients are indexed by
/// degree and normalized to [0, p) with trailing zeros stripped, so the
/// leading coefficient is nonzero unless the polynomial is zero.
class PolyModP {
 public:
  PolyModP(std::span<const int64_t> coefficients, const OddPrime& p);
  PolyModP(std::initializer_list<int64_t> coefficients, const OddPrime& p)
      : PolyModP(std::span<const int64_t>(coefficients.begin(), coefficients.size()), p) {}

  static PolyModP from_residues(std::vector<uint64_t> residues, const OddPrime& p);

  const OddPrime& prime() const noexcept { return p_; }
  const std::vector<uint64_t>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// 0 for constants and for the zero polynomial.
  int degree() const noexcept { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
  uint64_t leading_coefficient() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  /// Horner evaluation at x in [0, p).
  uint64_t operator()(uint64_t x) const noexcept;
  Fp2Element operator()(const Fp2Element& x) const;

  PolyModP derivative() const;

  friend bool operator==(const PolyModP&, const PolyModP&) = default;

 private:
  PolyModP(std::vector<uint64_t> residues, const OddPrime& p, int);
  void normalize();

  OddPrime p_;
  std::vector<uint64_t> coeffs_;
};

/// Monic gcd over F_p (zero if both inputs are zero).
PolyModP poly_gcd(PolyModP a, PolyModP b);

/// gcd(f, f') is a nonzero constant.
bool is_squarefree(const PolyModP& f);

}  // namespace jacobsthal
