#include "jacobsthal/curves.hpp"

#include <array>
#include <string>
#include <utility>

#include "jacobsthal/errors.hpp"

namespace jacobsthal {

HyperellipticModel::HyperellipticModel(std::vector<int64_t> coefficients, std::string name)
    : coeffs_(std::move(coefficients)), name_(std::move(name)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  const int d = degree();
  if (d != 3 && d != 5 && d != 6) {
    throw Error(Errc::InvalidArgument,
                "hyperelliptic model needs degree 3, 5 or 6, got " + std::to_string(d));
  }
}

HyperellipticModel HyperellipticModel::named(CurveId id) {
  switch (id) {
    case CurveId::E1: return HyperellipticModel(a_part_polynomial(), "e1");
    case CurveId::E2: return HyperellipticModel({0, 2, -4, 1}, "e2");
    case CurveId::X1: return HyperellipticModel({0, 1, 0, 0, 0, 1}, "x1");
    case CurveId::X2: return HyperellipticModel(b_part_polynomial_3mod8(), "x2");
    case CurveId::Congruent: return HyperellipticModel(classical_polynomial(1), "e");
  }
  throw Error(Errc::InvalidArgument, "unknown curve");
}

PolyModP HyperellipticModel::reduce(const OddPrime& p) const {
  PolyModP f(coeffs_, p);
  if (f.degree() != degree() || !is_squarefree(f)) {
    throw Error(Errc::BadReduction, (name_.empty() ? std::string("model") : name_) +
                                        " has bad reduction at p = " + std::to_string(p.value()));
  }
  return f;
}

bool HyperellipticModel::has_good_reduction(const OddPrime& p) const {
  PolyModP f(coeffs_, p);
  return f.degree() == degree() && is_squarefree(f);
}

namespace {

uint64_t points_at_infinity(const PolyModP& f, int extension_degree) {
  if (f.degree() % 2 == 1) return 1;
  // Every element of F_p is a square in F_p^2.
  if (extension_degree == 2) return 2;
  return legendre_symbol_reduced(f.leading_coefficient(), f.prime().value()) == 1 ? 2 : 0;
}

uint64_t affine_count_fp(const PolyModP& f, const QrTable& table) {
  const uint64_t p = f.prime().value();
  uint64_t count = 0;
  for (uint64_t x = 0; x < p; ++x) {
    uint64_t v = f(x);
    count += v == 0 ? 1 : (table[v] == 1 ? 2 : 0);
  }
  return count;
}

// Enumerates x = c0 + c1 t. For fixed c1 the values f(c0 + c1 t) form a
// polynomial sequence in c0 of degree deg f, stepped by forward differences.
uint64_t affine_count_fp2(const PolyModP& f, const QrTable& table) {
  const OddPrime& prime = f.prime();
  const uint64_t p = prime.value();
  const Fp2Context ctx(prime);
  const uint64_t r = ctx.nonresidue();
  const int d = f.degree();

  std::array<std::pair<uint64_t, uint64_t>, 8> diff{};
  uint64_t count = 0;
  for (uint64_t c1 = 0; c1 < p; ++c1) {
    std::array<Fp2Element, 8> vals{ctx.zero(), ctx.zero(), ctx.zero(), ctx.zero(),
                                   ctx.zero(), ctx.zero(), ctx.zero(), ctx.zero()};
    for (int k = 0; k <= d; ++k) vals[k] = f(ctx.element(static_cast<uint64_t>(k) % p, c1));
    for (int j = 1; j <= d; ++j) {
      for (int i = d; i >= j; --i) vals[i] = vals[i] - vals[i - 1];
    }
    for (int j = 0; j <= d; ++j) diff[j] = {vals[j].c0(), vals[j].c1()};

    for (uint64_t c0 = 0; c0 < p; ++c0) {
      const auto [a, b] = diff[0];
      if (a == 0 && b == 0) {
        count += 1;
      } else {
        uint64_t norm = sub_mod(a * a % p, r * (b * b % p) % p, p);
        count += table[norm] == 1 ? 2 : 0;
      }
      for (int j = 0; j < d; ++j) {
        diff[j].first = add_mod(diff[j].first, diff[j + 1].first, p);
        diff[j].second = add_mod(diff[j].second, diff[j + 1].second, p);
      }
    }
  }
  return count;
}

}  // namespace

uint64_t count_points(const HyperellipticModel& model, const OddPrime& p, int extension_degree) {
  return count_points(model, QrTable(p), extension_degree);
}

uint64_t count_points(const HyperellipticModel& model, const QrTable& table, int extension_degree) {
  const OddPrime& p = table.prime();
  if (extension_degree != 1 && extension_degree != 2) {
    throw Error(Errc::InvalidArgument, "extension degree must be 1 or 2");
  }
  if (extension_degree == 2 && p.value() > kFp2CountLimit) {
    throw Error(Errc::ThresholdExceeded, "F_p^2 enumeration is capped at p <= " +
                                             std::to_string(kFp2CountLimit));
  }
  const PolyModP f = model.reduce(p);
  const uint64_t affine = extension_degree == 1 ? affine_count_fp(f, table) : affine_count_fp2(f, table);
  return affine + points_at_infinity(f, extension_degree);
}

LocalFactor local_factor_genus1(const OddPrime& p, uint64_t n1) {
  const int64_t c1 = static_cast<int64_t>(n1) - static_cast<int64_t>(p.value()) - 1;
  if (static_cast<i128>(c1) * c1 > static_cast<i128>(4) * p.value()) {
    throw Error(Errc::HasseViolation, "count " + std::to_string(n1) + " breaks the Hasse bound at p = " +
                                          std::to_string(p.value()));
  }
  return LocalFactor{1, {c1, static_cast<int64_t>(p.value())}, p};
}

LocalFactor local_factor_genus2(const OddPrime& p, uint64_t n1, uint64_t n2) {
  const i128 q = p.value();
  const i128 c1 = static_cast<i128>(n1) - q - 1;
  // Power sums of the reciprocal roots: s1 = q + 1 - N1, s2 = q^2 + 1 - N2.
  // With P(T) = 1 + c1 T + c2 T^2 + ..., s2 = c1^2 - 2 c2.
  const i128 s2 = q * q + 1 - static_cast<i128>(n2);
  const i128 twice_c2 = c1 * c1 - s2;
  auto fail = [&](const std::string& why) {
    throw Error(Errc::InconsistentCounts, why + " (p = " + std::to_string(p.value()) +
                                              ", N1 = " + std::to_string(n1) +
                                              ", N2 = " + std::to_string(n2) + ")");
  };
  if (twice_c2 % 2 != 0) fail("c2 is not an integer");
  const i128 c2 = twice_c2 / 2;
  if (c1 * c1 > 16 * q) fail("|c1| exceeds 4 sqrt(p)");
  if (c2 > 6 * q || c2 < -6 * q) fail("|c2| exceeds 6p");
  const i128 c3 = q * c1;
  const i128 c4 = q * q;
  return LocalFactor{2,
                     {static_cast<int64_t>(c1), static_cast<int64_t>(c2), static_cast<int64_t>(c3),
                      static_cast<int64_t>(c4)},
                     p};
}

LocalFactor local_factor(const HyperellipticModel& model, const OddPrime& p) {
  const QrTable table(p);
  const uint64_t n1 = count_points(model, table, 1);
  if (model.genus() == 1) return local_factor_genus1(p, n1);
  return local_factor_genus2(p, n1, count_points(model, table, 2));
}

int64_t point_count_from_factor(const LocalFactor& factor, int extension_degree) {
  if (extension_degree < 1) throw Error(Errc::InvalidArgument, "extension degree must be positive");
  const int n = 2 * factor.genus;
  // Elementary symmetric functions of the reciprocal roots: e_i = (-1)^i c_i.
  std::vector<i128> e(static_cast<std::size_t>(n) + 1, 0);
  e[0] = 1;
  for (int i = 1; i <= n; ++i) e[i] = (i % 2 ? -1 : 1) * static_cast<i128>(factor.c(i));
  // Newton: s_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i s_{k-i} + (-1)^{k-1} k e_k.
  std::vector<i128> s(static_cast<std::size_t>(extension_degree) + 1, 0);
  for (int k = 1; k <= extension_degree; ++k) {
    i128 acc = 0;
    for (int i = 1; i < k && i <= n; ++i) acc += (i % 2 ? 1 : -1) * e[i] * s[k - i];
    if (k <= n) acc += (k % 2 ? 1 : -1) * static_cast<i128>(k) * e[k];
    s[k] = acc;
  }
  i128 qk = 1;
  for (int k = 0; k < extension_degree; ++k) qk *= factor.p.value();
  return static_cast<int64_t>(qk + 1 - s[extension_degree]);
}

TraceCheck trace_check(const OddPrime& p) { return trace_check(QrTable(p)); }

TraceCheck trace_check(const QrTable& table) {
  const OddPrime& p = table.prime();
  auto sum_of = [&](CurveId id) {
    return jacobsthal_sum(PolyModP(HyperellipticModel::named(id).coefficients(), p), table).raw_sum;
  };
  TraceCheck t{};
  t.sum_x1 = sum_of(CurveId::X1);
  t.sum_e1 = sum_of(CurveId::E1);
  t.sum_e2 = sum_of(CurveId::E2);
  t.minus_one_symbol = legendre_symbol(-1, p);
  t.identity_holds = t.sum_x1 == t.sum_e1 + t.sum_e2;
  t.twist_holds = t.sum_e2 == t.minus_one_symbol * t.sum_e1;
  return t;
}

bool trace_identity_check(const OddPrime& p) { return trace_check(p).identity_holds; }
bool quadratic_twist_check(const OddPrime& p) { return trace_check(p).twist_holds; }

Fp2Element sqrt2_minus_one(const Fp2Context& ctx) {
  return fp2_sqrt(ctx.from_integer(2)) - ctx.one();
}

Fp2Element kummer_radicand(const Fp2Context& ctx) {
  return fp2_sqrt(ctx.from_integer(-1)) * sqrt2_minus_one(ctx);
}

KummerValue kummer_character(const OddPrime& p, int k) {
  if (k < 0 || k > 3) throw Error(Errc::InvalidArgument, "k must lie in 0..3");
  if (p.residue(8) == 1) {
    throw Error(Errc::WrongResidueClass, "p = 1 mod 8 splits completely; no degree-two prime above " +
                                             std::to_string(p.value()));
  }
  const Fp2Context ctx(p);
  const u128 order = ctx.group_order();
  // p^2 - 1 = 0 mod 8 for odd p.
  if (order % 8 != 0) throw Error(Errc::InconsistentCounts, "p^2 - 1 is not divisible by 8");
  const u128 quarter = order / 4;

  const Fp2Element i = fp2_sqrt(ctx.from_integer(-1));
  const Fp2Element w = kummer_radicand(ctx);

  std::array<Fp2Element, 4> powers_of_i{ctx.one(), i, i * i, i * i * i};
  auto exponent_of = [&](const Fp2Element& v) {
    for (int j = 0; j < 4; ++j) {
      if (powers_of_i[j] == v) return j;
    }
    throw Error(Errc::InconsistentCounts, "eta^(N - 1) is not a fourth root of unity at p = " +
                                              std::to_string(p.value()));
  };

  const int j = exponent_of(fp2_pow(w, quarter));
  const int e = (j * k) % 4;
  if (fp2_pow(w, quarter * static_cast<unsigned>(k)) != powers_of_i[e]) {
    throw Error(Errc::InconsistentCounts, "chi_k is not the k-th power of chi_1");
  }
  return KummerValue{p, k, j, e};
}

}  // namespace jacobsthal
