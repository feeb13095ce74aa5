#include "jacobsthal/modarith.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "jacobsthal/errors.hpp"

namespace jacobsthal {

uint64_t pow_mod(uint64_t base, uint64_t exponent, uint64_t m) {
  uint64_t result = 1 % m;
  base %= m;
  while (exponent) {
    if (exponent & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

uint64_t inv_mod(uint64_t a, uint64_t m) {
  // Extended Euclid on signed 128-bit to stay clear of overflow near 2^64.
  i128 old_r = a % m, r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) throw Error(Errc::InvalidArgument, "value is not invertible");
  i128 res = old_s % static_cast<i128>(m);
  if (res < 0) res += m;
  return static_cast<uint64_t>(res);
}

uint64_t reduce_signed(int64_t a, uint64_t m) {
  if (a >= 0) return static_cast<uint64_t>(a) % m;
  // -(a) may overflow for INT64_MIN; go through unsigned negation.
  uint64_t neg = (~static_cast<uint64_t>(a) + 1) % m;
  return neg == 0 ? 0 : m - neg;
}

uint64_t isqrt(uint64_t n) {
  if (n == 0) return 0;
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::optional<uint64_t> exact_sqrt(uint64_t n) {
  uint64_t r = isqrt(n);
  if (static_cast<u128>(r) * r == n) return r;
  return std::nullopt;
}

namespace {

constexpr std::array<uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_round(uint64_t n, uint64_t a, uint64_t d, int s) {
  uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : kWitnesses) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  if (n < 41 * 41) return true;
  uint64_t d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  // The first twelve primes are a complete witness set below 3.3 * 10^24.
  for (uint64_t a : kWitnesses) {
    if (!miller_rabin_round(n, a, d, s)) return false;
  }
  return true;
}

OddPrime::OddPrime(uint64_t p) : p_(p) {
  if (p == 2) throw Error(Errc::InvalidArgument, "2 is not an odd prime");
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
}

namespace {

// Binary Jacobi algorithm, a < m not required; m odd.
int jacobi_unsigned(uint64_t a, uint64_t m) {
  a %= m;
  int result = 1;
  while (a != 0) {
    int tz = std::countr_zero(a);
    a >>= tz;
    uint64_t m8 = m & 7;
    if ((tz & 1) && (m8 == 3 || m8 == 5)) result = -result;
    if ((a & 3) == 3 && (m & 3) == 3) result = -result;
    std::swap(a, m);
    a %= m;
  }
  return m == 1 ? result : 0;
}

}  // namespace

int jacobi_symbol(int64_t a, uint64_t m) {
  if (m == 0 || (m & 1) == 0) {
    throw Error(Errc::InvalidArgument, "Jacobi symbol needs an odd positive modulus");
  }
  if (m == 1) return 1;
  return jacobi_unsigned(reduce_signed(a, m), m);
}

int legendre_symbol_reduced(uint64_t a, uint64_t p) { return jacobi_unsigned(a, p); }

int legendre_symbol(int64_t a, const OddPrime& p) {
  return jacobi_unsigned(reduce_signed(a, p.value()), p.value());
}

int legendre_symbol(const FpElement& a) {
  return jacobi_unsigned(a.value(), a.modulus().value());
}

int euler_criterion(uint64_t a, const OddPrime& p) {
  const uint64_t q = p.value();
  a %= q;
  if (a == 0) return 0;
  uint64_t e = pow_mod(a, (q - 1) / 2, q);
  return e == 1 ? 1 : -1;
}

FpElement least_nonresidue(const OddPrime& p) {
  for (uint64_t n = 2;; ++n) {
    if (legendre_symbol_reduced(n, p.value()) == -1) return FpElement(n, p);
  }
}

FpElement sqrt_mod(const FpElement& a) {
  const OddPrime& prime = a.modulus();
  const uint64_t p = prime.value();
  const uint64_t v = a.value();
  if (v == 0) return a;
  if (legendre_symbol(a) != 1) {
    throw Error(Errc::NotASquare,
                std::to_string(v) + " is not a square mod " + std::to_string(p));
  }
  uint64_t root;
  if ((p & 3) == 3) {
    root = pow_mod(v, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks.
    uint64_t m = p - 1;
    int s = std::countr_zero(m);
    m >>= s;
    uint64_t z = least_nonresidue(prime).value();
    uint64_t c = pow_mod(z, m, p);
    uint64_t x = pow_mod(v, (m + 1) / 2, p);
    uint64_t t = pow_mod(v, m, p);
    int level = s;
    while (t != 1) {
      int i = 0;
      uint64_t t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, p);
        ++i;
      }
      uint64_t b = c;
      for (int j = 0; j < level - i - 1; ++j) b = mul_mod(b, b, p);
      x = mul_mod(x, b, p);
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      level = i;
    }
    root = x;
  }
  uint64_t other = p - root;
  return FpElement(root < other ? root : other, prime);
}

// ---------------------------------------------------------------------------

Fp2Context::Fp2Context(const OddPrime& p) : p_(p), r_(least_nonresidue(p).value()) {}

Fp2Context::Fp2Context(const OddPrime& p, const FpElement& r) : p_(p), r_(r.value()) {
  if (r.modulus() != p || legendre_symbol(r) != -1) {
    throw Error(Errc::NotANonresidue, "extension needs a quadratic nonresidue");
  }
}

Fp2Element Fp2Context::zero() const { return Fp2Element(*this, 0, 0); }
Fp2Element Fp2Context::one() const { return Fp2Element(*this, 1, 0); }
Fp2Element Fp2Context::root_of_nonresidue() const { return Fp2Element(*this, 0, 1); }

Fp2Element Fp2Context::element(uint64_t c0, uint64_t c1) const {
  return Fp2Element(*this, c0, c1);
}

Fp2Element Fp2Context::from_integer(int64_t value) const {
  return Fp2Element(*this, reduce_signed(value, p_.value()), 0);
}

Fp2Element::Fp2Element(const Fp2Context& ctx, uint64_t c0, uint64_t c1)
    : ctx_(ctx), c0_(c0 % ctx.prime().value()), c1_(c1 % ctx.prime().value()) {}

Fp2Element Fp2Element::operator+(const Fp2Element& o) const {
  const uint64_t p = ctx_.prime().value();
  return Fp2Element(ctx_, add_mod(c0_, o.c0_, p), add_mod(c1_, o.c1_, p));
}

Fp2Element Fp2Element::operator-(const Fp2Element& o) const {
  const uint64_t p = ctx_.prime().value();
  return Fp2Element(ctx_, sub_mod(c0_, o.c0_, p), sub_mod(c1_, o.c1_, p));
}

Fp2Element Fp2Element::operator-() const {
  const uint64_t p = ctx_.prime().value();
  return Fp2Element(ctx_, sub_mod(0, c0_, p), sub_mod(0, c1_, p));
}

Fp2Element Fp2Element::operator*(const Fp2Element& o) const {
  const uint64_t p = ctx_.prime().value();
  const uint64_t r = ctx_.nonresidue();
  // (a + bt)(c + dt) = (ac + r bd) + (ad + bc) t
  uint64_t ac = mul_mod(c0_, o.c0_, p);
  uint64_t bd = mul_mod(c1_, o.c1_, p);
  uint64_t ad = mul_mod(c0_, o.c1_, p);
  uint64_t bc = mul_mod(c1_, o.c0_, p);
  return Fp2Element(ctx_, add_mod(ac, mul_mod(r, bd, p), p), add_mod(ad, bc, p));
}

Fp2Element Fp2Element::frobenius() const {
  return Fp2Element(ctx_, c0_, sub_mod(0, c1_, ctx_.prime().value()));
}

uint64_t Fp2Element::norm() const {
  const uint64_t p = ctx_.prime().value();
  return sub_mod(mul_mod(c0_, c0_, p), mul_mod(ctx_.nonresidue(), mul_mod(c1_, c1_, p), p), p);
}

Fp2Element Fp2Element::inverse() const {
  if (is_zero()) throw Error(Errc::InvalidArgument, "zero has no inverse");
  const uint64_t p = ctx_.prime().value();
  uint64_t n_inv = inv_mod(norm(), p);
  Fp2Element conj = frobenius();
  return Fp2Element(ctx_, mul_mod(conj.c0_, n_inv, p), mul_mod(conj.c1_, n_inv, p));
}

Fp2Element fp2_pow(const Fp2Element& x, u128 exponent) {
  Fp2Element result = x.context().one();
  Fp2Element base = x;
  while (exponent) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

int fp2_quadratic_character(const Fp2Element& x) {
  // x^((p^2-1)/2) = (x^(p+1))^((p-1)/2)
  return legendre_symbol_reduced(x.norm(), x.context().prime().value());
}

Fp2Element fp2_sqrt(const Fp2Element& a) {
  const Fp2Context& ctx = a.context();
  if (a.is_zero()) return a;
  if (fp2_quadratic_character(a) != 1) {
    throw Error(Errc::NotASquare, "element is not a square in F_p^2");
  }
  // Tonelli-Shanks in the cyclic group of order p^2 - 1.
  u128 m = ctx.group_order();
  int s = 0;
  while ((m & 1) == 0) {
    m >>= 1;
    ++s;
  }
  // First nonsquare among t, 1 + t, 2 + t, ...
  Fp2Element z = ctx.root_of_nonresidue();
  for (uint64_t shift = 1; fp2_quadratic_character(z) != -1; ++shift) {
    z = ctx.element(shift, 1);
  }
  Fp2Element c = fp2_pow(z, m);
  Fp2Element x = fp2_pow(a, (m + 1) / 2);
  Fp2Element t = fp2_pow(a, m);
  const Fp2Element one = ctx.one();
  int level = s;
  while (t != one) {
    int i = 0;
    Fp2Element t2 = t;
    while (t2 != one) {
      t2 = t2 * t2;
      ++i;
    }
    Fp2Element b = c;
    for (int j = 0; j < level - i - 1; ++j) b = b * b;
    x = x * b;
    c = b * b;
    t = t * c;
    level = i;
  }
  Fp2Element other = -x;
  if (std::pair(other.c0(), other.c1()) < std::pair(x.c0(), x.c1())) return other;
  return x;
}

}  // namespace jacobsthal
