#include "jacobsthal/quadforms.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "jacobsthal/curves.hpp"
#include "jacobsthal/errors.hpp"

namespace jacobsthal {

namespace {

void require_d(int D) {
  if (D != 1 && D != 2) throw Error(Errc::InvalidArgument, "D must be 1 or 2");
}

[[noreturn]] void no_representation(const OddPrime& p, int D) {
  throw Error(Errc::NoRepresentation, std::to_string(p.value()) + " is not of the form a^2 + " +
                                          std::to_string(D) + "b^2");
}

QuadRep normalized(uint64_t a, uint64_t b, int D, const OddPrime& p) {
  if (D == 1 && a % 2 == 0) std::swap(a, b);
  return QuadRep{a, b, D, p};
}

}  // namespace

QuadRep cornacchia(const OddPrime& p, int D) {
  require_d(D);
  const uint64_t q = p.value();
  if (legendre_symbol(-D, p) != 1) no_representation(p, D);

  uint64_t x0 = sqrt_mod(FpElement::from_signed(-D, p)).value();
  if (x0 <= q / 2) x0 = q - x0;

  // Euclid on (p, x0) until the remainder drops below sqrt(p).
  const uint64_t limit = isqrt(q);
  uint64_t a = q, b = x0;
  while (b > limit) {
    uint64_t r = a % b;
    a = b;
    b = r;
  }
  const uint64_t rest = q - b * b;
  if (rest % static_cast<uint64_t>(D) != 0) no_representation(p, D);
  const auto c = exact_sqrt(rest / static_cast<uint64_t>(D));
  if (!c) no_representation(p, D);
  return normalized(b, *c, D, p);
}

std::vector<QuadRep> brute_force_repr_all(const OddPrime& p, int D) {
  require_d(D);
  const uint64_t q = p.value();
  if (q > kBruteForceReprLimit) {
    throw Error(Errc::ThresholdExceeded, "brute-force scan is capped at p <= " +
                                             std::to_string(kBruteForceReprLimit));
  }
  std::vector<QuadRep> found;
  const uint64_t ud = static_cast<uint64_t>(D);
  for (uint64_t b = 0; ud * b * b <= q; ++b) {
    const auto a = exact_sqrt(q - ud * b * b);
    if (!a || *a == 0) continue;
    if (D == 1 && (*a % 2 == 0 || b % 2 == 1)) continue;
    found.push_back(QuadRep{*a, b, D, p});
  }
  return found;
}

QuadRep brute_force_repr(const OddPrime& p, int D) {
  auto all = brute_force_repr_all(p, D);
  if (all.empty()) no_representation(p, D);
  return all.front();
}

std::vector<CubicRep> cubic_rep_all(const OddPrime& p) {
  if (p.residue(6) != 1) {
    throw Error(Errc::WrongResidueClass, "3p = A^2 + AB + B^2 needs p = 1 mod 6");
  }
  // A^2 + AB + B^2 >= 3B^2/4, so |A|, |B| <= 2 sqrt(p).
  const int64_t n = static_cast<int64_t>(3 * p.value());
  const int64_t bound = static_cast<int64_t>(2 * isqrt(p.value()) + 2);
  std::vector<CubicRep> found;
  for (int64_t A = -bound; A <= bound; ++A) {
    for (int64_t B = -bound; B <= bound; ++B) {
      if (A * A + A * B + B * B == n) found.push_back(CubicRep{A, B, p});
    }
  }
  return found;
}

CubicRep cubic_rep(const OddPrime& p) {
  if (p.residue(6) != 1) {
    throw Error(Errc::WrongResidueClass, "3p = A^2 + AB + B^2 needs p = 1 mod 6");
  }
  // For fixed A > 0, B solves B^2 + AB + (A^2 - 3p) = 0.
  const int64_t n = static_cast<int64_t>(3 * p.value());
  for (int64_t A = 1; A * A <= 4 * n / 3; ++A) {
    const int64_t disc = 4 * n - 3 * A * A;
    const auto root = exact_sqrt(static_cast<uint64_t>(disc));
    if (!root) continue;
    const int64_t r = static_cast<int64_t>(*root);
    if ((r - A) % 2 == 0 && r - A > 0) return CubicRep{A, (r - A) / 2, p};
  }
  throw Error(Errc::NoRepresentation, "no representation of 3p found");
}

SignReport epsilon_classical(const OddPrime& p) {
  if (p.residue(4) != 1) throw Error(Errc::WrongResidueClass, "classical sign law needs p = 1 mod 4");
  return epsilon_classical(QrTable(p));
}

SignReport epsilon_classical(const QrTable& table) {
  const OddPrime& p = table.prime();
  if (p.residue(4) != 1) throw Error(Errc::WrongResidueClass, "classical sign law needs p = 1 mod 4");
  const QuadRep rep = cornacchia(p, 1);
  const int64_t a = static_cast<int64_t>(rep.a);
  const int64_t eps = jacobi_symbol(-1, rep.a) * ((rep.b / 2) % 2 == 0 ? 1 : -1);
  const int64_t predicted = 2 * eps * a;
  const uint64_t n1 = count_points(HyperellipticModel::named(CurveId::Congruent), table, 1);
  const int64_t observed = static_cast<int64_t>(p.value()) + 1 - static_cast<int64_t>(n1);
  return SignReport{p, predicted, observed, predicted == observed, rep.a, rep.b, eps};
}

SignReport epsilon_sqrtm2(const OddPrime& p) {
  const uint64_t r = p.residue(8);
  if (r != 1 && r != 3) throw Error(Errc::WrongResidueClass, "sqrt(-2) sign law needs p = 1, 3 mod 8");
  return epsilon_sqrtm2(QrTable(p));
}

SignReport epsilon_sqrtm2(const QrTable& table) {
  const OddPrime& p = table.prime();
  const uint64_t r = p.residue(8);
  if (r != 1 && r != 3) throw Error(Errc::WrongResidueClass, "sqrt(-2) sign law needs p = 1, 3 mod 8");
  const QuadRep rep = cornacchia(p, 2);
  const int64_t a = static_cast<int64_t>(rep.a);
  const int64_t chi = jacobi_symbol(-2, rep.a);
  // b is even exactly when p = 1 mod 8.
  const int64_t eps = r == 1 ? 2 * ((rep.b / 2) % 2 == 0 ? 1 : -1) * chi : -2 * chi;
  const int64_t predicted = eps * a;
  const uint64_t n1 = count_points(HyperellipticModel::named(CurveId::E1), table, 1);
  const int64_t observed = static_cast<int64_t>(p.value()) + 1 - static_cast<int64_t>(n1);
  return SignReport{p, predicted, observed, predicted == observed, rep.a, rep.b, eps};
}

}  // namespace jacobsthal
