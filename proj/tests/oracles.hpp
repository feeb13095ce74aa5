#pragma once

// Brute-force references used only by the tests. Nothing here calls into the
// library, so each check compares two independent routes.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

inline bool is_prime_trial(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<uint64_t> odd_primes_upto(uint64_t hi, uint64_t lo = 3) {
  std::vector<uint64_t> out;
  for (uint64_t n = lo < 3 ? 3 : lo; n <= hi; ++n) {
    if (is_prime_trial(n)) out.push_back(n);
  }
  return out;
}

inline uint64_t reduce(int64_t a, uint64_t p) {
  int64_t m = static_cast<int64_t>(p);
  int64_t r = a % m;
  return static_cast<uint64_t>(r < 0 ? r + m : r);
}

/// Squares mod p as a membership table.
inline std::vector<bool> square_set(uint64_t p) {
  std::vector<bool> sq(p, false);
  for (uint64_t y = 0; y < p; ++y) sq[y * y % p] = true;
  return sq;
}

inline int legendre_enum(int64_t a, uint64_t p) {
  const uint64_t r = reduce(a, p);
  if (r == 0) return 0;
  return square_set(p)[r] ? 1 : -1;
}

/// f(x) mod p with each power computed from scratch.
inline uint64_t eval_naive(const std::vector<int64_t>& coeffs, uint64_t x, uint64_t p) {
  uint64_t total = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    uint64_t power = 1;
    for (std::size_t k = 0; k < i; ++k) power = power * x % p;
    total = (total + reduce(coeffs[i], p) * power) % p;
  }
  return total;
}

inline int64_t jacobsthal_sum(const std::vector<int64_t>& coeffs, uint64_t p) {
  const auto sq = square_set(p);
  int64_t s = 0;
  for (uint64_t x = 0; x < p; ++x) {
    uint64_t v = eval_naive(coeffs, x, p);
    if (v != 0) s += sq[v] ? 1 : -1;
  }
  return s;
}

inline int degree_of(const std::vector<int64_t>& coeffs) {
  int d = static_cast<int>(coeffs.size()) - 1;
  while (d > 0 && coeffs[d] == 0) --d;
  return d;
}

/// Projective count over F_p of y^2 = f(x) by looping over all (x, y).
inline uint64_t count_points_pairs(const std::vector<int64_t>& coeffs, uint64_t p) {
  uint64_t count = 0;
  for (uint64_t x = 0; x < p; ++x) {
    uint64_t v = eval_naive(coeffs, x, p);
    for (uint64_t y = 0; y < p; ++y) {
      if (y * y % p == v) ++count;
    }
  }
  const int d = degree_of(coeffs);
  if (d % 2 == 1) return count + 1;
  return count + (legendre_enum(coeffs[d], p) == 1 ? 2 : 0);
}

/// Minimal F_p^2 = F_p[t]/(t^2 - r) used only by the oracles.
struct Gf2 {
  uint64_t p;
  uint64_t r;

  using El = std::pair<uint64_t, uint64_t>;

  El add(El a, El b) const { return {(a.first + b.first) % p, (a.second + b.second) % p}; }
  El mul(El a, El b) const {
    return {(a.first * b.first + r * (a.second * b.second % p)) % p,
            (a.first * b.second + a.second * b.first) % p};
  }
  El eval(const std::vector<int64_t>& coeffs, El x) const {
    El total{0, 0};
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      El power{1, 0};
      for (std::size_t k = 0; k < i; ++k) power = mul(power, x);
      total = add(total, mul({reduce(coeffs[i], p), 0}, power));
    }
    return total;
  }
  std::set<El> squares() const {
    std::set<El> s;
    for (uint64_t a = 0; a < p; ++a) {
      for (uint64_t b = 0; b < p; ++b) s.insert(mul({a, b}, {a, b}));
    }
    return s;
  }
};

inline uint64_t least_nonresidue_enum(uint64_t p) {
  const auto sq = square_set(p);
  for (uint64_t n = 2;; ++n) {
    if (!sq[n % p]) return n;
  }
}

/// Projective count over F_p^2: every x, with the number of y having y^2 =
/// f(x) taken from an enumerated table of squares. Even degree gets two
/// points at infinity since every element of F_p is a square in F_p^2.
inline uint64_t count_points_fp2(const std::vector<int64_t>& coeffs, uint64_t p) {
  Gf2 g{p, least_nonresidue_enum(p)};
  std::map<Gf2::El, uint64_t> roots;
  for (uint64_t a = 0; a < p; ++a) {
    for (uint64_t b = 0; b < p; ++b) ++roots[g.mul({a, b}, {a, b})];
  }
  uint64_t count = 0;
  for (uint64_t a = 0; a < p; ++a) {
    for (uint64_t b = 0; b < p; ++b) {
      auto it = roots.find(g.eval(coeffs, {a, b}));
      if (it != roots.end()) count += it->second;
    }
  }
  return count + (degree_of(coeffs) % 2 == 1 ? 1 : 2);
}

/// All (a, b), a > 0, b >= 0, with a^2 + D b^2 = p.
inline std::vector<std::pair<uint64_t, uint64_t>> representations(uint64_t p, uint64_t D) {
  std::vector<std::pair<uint64_t, uint64_t>> out;
  for (uint64_t a = 1; a * a <= p; ++a) {
    for (uint64_t b = 0; a * a + D * b * b <= p; ++b) {
      if (a * a + D * b * b == p) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace oracle
