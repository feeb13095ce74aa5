#pragma once

// Exact arithmetic modulo a 64-bit odd prime and in its quadratic extension.

#include <cstdint>
#include <optional>

namespace jacobsthal {

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

// ---------------------------------------------------------------------------
// Word-level helpers. Arguments are assumed reduced (< m) where it matters.

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t m) {
  uint64_t s = a + b;
  return (s < a || s >= m) ? s - m : s;
}

inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<u128>(a) * b % m);
}

uint64_t pow_mod(uint64_t base, uint64_t exponent, uint64_t m);

/// Inverse of a modulo m; a must be coprime to m.
uint64_t inv_mod(uint64_t a, uint64_t m);

/// Representative of a in [0, m).
uint64_t reduce_signed(int64_t a, uint64_t m);

/// floor(sqrt(n)), exact for the whole 64-bit range.
uint64_t isqrt(uint64_t n);

/// The root when n is a perfect square.
std::optional<uint64_t> exact_sqrt(uint64_t n);

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(uint64_t n);

// ---------------------------------------------------------------------------

/// An odd prime, checked at construction.
class OddPrime {
 public:
  /// Throws Error(NotPrime) for composites, 0 and 1, and
  /// Error(InvalidArgument) for 2.
  explicit OddPrime(uint64_t p);

  uint64_t value() const noexcept { return p_; }
  uint64_t residue(uint64_t m) const noexcept { return p_ % m; }

  friend bool operator==(const OddPrime&, const OddPrime&) = default;
  friend auto operator<=>(const OddPrime&, const OddPrime&) = default;

 private:
  uint64_t p_;
};

/// A residue class modulo an odd prime, stored in [0, p).
class FpElement {
 public:
  FpElement(uint64_t value, const OddPrime& p) : value_(value % p.value()), p_(p) {}

  static FpElement from_signed(int64_t value, const OddPrime& p) {
    return FpElement(reduce_signed(value, p.value()), p);
  }

  uint64_t value() const noexcept { return value_; }
  const OddPrime& modulus() const noexcept { return p_; }

  friend bool operator==(const FpElement&, const FpElement&) = default;

 private:
  uint64_t value_;
  OddPrime p_;
};

int legendre_symbol(int64_t a, const OddPrime& p);
int legendre_symbol(const FpElement& a);

/// Legendre symbol of an already reduced residue, a < p.
int legendre_symbol_reduced(uint64_t a, uint64_t p);

/// Legendre symbol through a^((p-1)/2) mod p. Slow reference path for the
/// table-driven and Jacobi-reciprocity paths.
int euler_criterion(uint64_t a, const OddPrime& p);

/// Jacobi symbol (a/m) for odd m >= 1. Throws Error(InvalidArgument) on even m
/// or m = 0.
int jacobi_symbol(int64_t a, uint64_t m);

/// Square root modulo p returning the smaller of {s, p - s}.
/// Throws Error(NotASquare) for quadratic nonresidues.
FpElement sqrt_mod(const FpElement& a);

/// Smallest n >= 2 with (n/p) = -1.
FpElement least_nonresidue(const OddPrime& p);

// ---------------------------------------------------------------------------
// F_p^2 = F_p[t] / (t^2 - r) for a quadratic nonresidue r.

class Fp2Element;

class Fp2Context {
 public:
  /// Uses r = least_nonresidue(p).
  explicit Fp2Context(const OddPrime& p);
  /// Throws Error(NotANonresidue) unless (r/p) = -1.
  Fp2Context(const OddPrime& p, const FpElement& r);

  const OddPrime& prime() const noexcept { return p_; }
  uint64_t nonresidue() const noexcept { return r_; }

  /// p^2 - 1, the order of the multiplicative group.
  u128 group_order() const noexcept {
    return static_cast<u128>(p_.value()) * p_.value() - 1;
  }

  Fp2Element zero() const;
  Fp2Element one() const;
  /// The adjoined square root t of r.
  Fp2Element root_of_nonresidue() const;
  Fp2Element element(uint64_t c0, uint64_t c1) const;
  Fp2Element from_integer(int64_t value) const;

  friend bool operator==(const Fp2Context&, const Fp2Context&) = default;

 private:
  OddPrime p_;
  uint64_t r_;
};

/// c0 + c1*t with both coordinates reduced modulo p.
class Fp2Element {
 public:
  Fp2Element(const Fp2Context& ctx, uint64_t c0, uint64_t c1);

  uint64_t c0() const noexcept { return c0_; }
  uint64_t c1() const noexcept { return c1_; }
  const Fp2Context& context() const noexcept { return ctx_; }

  bool is_zero() const noexcept { return c0_ == 0 && c1_ == 0; }
  bool in_base_field() const noexcept { return c1_ == 0; }

  Fp2Element operator+(const Fp2Element& o) const;
  Fp2Element operator-(const Fp2Element& o) const;
  Fp2Element operator*(const Fp2Element& o) const;
  Fp2Element operator-() const;

  /// x^p, i.e. c0 - c1*t.
  Fp2Element frobenius() const;
  /// x^(p+1) = c0^2 - r*c1^2, an element of F_p.
  uint64_t norm() const;
  /// Throws Error(InvalidArgument) for zero.
  Fp2Element inverse() const;

  friend bool operator==(const Fp2Element&, const Fp2Element&) = default;

 private:
  Fp2Context ctx_;
  uint64_t c0_;
  uint64_t c1_;
};

Fp2Element fp2_pow(const Fp2Element& x, u128 exponent);

/// Quadratic character on F_p^2: 0, +1 or -1 according to x^((p^2-1)/2).
int fp2_quadratic_character(const Fp2Element& x);

/// Square root in F_p^2; of the two roots the one with the lexicographically
/// smaller (c0, c1) is returned. Throws Error(NotASquare).
Fp2Element fp2_sqrt(const Fp2Element& a);

}  // namespace jacobsthal
