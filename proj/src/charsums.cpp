#include "jacobsthal/charsums.hpp"

#include <string>

#include "jacobsthal/errors.hpp"

namespace jacobsthal {

QrTable::QrTable(const OddPrime& p, uint64_t limit) : p_(p) {
  const uint64_t q = p.value();
  if (q > limit) {
    throw Error(Errc::ThresholdExceeded,
                "residue table for p = " + std::to_string(q) + " exceeds limit " +
                    std::to_string(limit));
  }
  table_.assign(q, -1);
  table_[0] = 0;
  // (x + 1)^2 = x^2 + 2x + 1
  uint64_t square = 0;
  for (uint64_t x = 0; x < (q - 1) / 2; ++x) {
    square += 2 * x + 1;
    if (square >= q) square -= q;
    table_[square] = 1;
  }
}

namespace {

template <class Symbol>
int64_t accumulate(const PolyModP& f, Symbol&& symbol) {
  const uint64_t p = f.prime().value();
  int64_t total = 0;
  for (uint64_t x = 0; x < p; ++x) total += symbol(f(x));
  return total;
}

void require_class(const OddPrime& p, uint64_t modulus, std::initializer_list<uint64_t> classes,
                   const char* what) {
  const uint64_t r = p.residue(modulus);
  for (uint64_t c : classes) {
    if (r == c) return;
  }
  throw Error(Errc::WrongResidueClass,
              std::string(what) + " needs a different residue class; p = " +
                  std::to_string(p.value()));
}

// |value| <= k * sqrt(p)
void check_weil(int64_t value, int64_t k, const OddPrime& p, const char* what) {
  const i128 v = value;
  if (v * v > static_cast<i128>(k) * k * p.value()) {
    throw Error(Errc::WeilBoundViolation,
                std::string(what) + " = " + std::to_string(value) + " breaks the Weil bound at p = " +
                    std::to_string(p.value()));
  }
}

int64_t table_sum(const QrTable& table, const std::vector<int64_t>& coeffs) {
  return jacobsthal_sum(PolyModP(coeffs, table.prime()), table).raw_sum;
}

}  // namespace

SumResult jacobsthal_sum(const PolyModP& f, SumPath path) {
  const OddPrime& p = f.prime();
  if (path == SumPath::Auto) path = p.value() <= kAutoTableLimit ? SumPath::Table : SumPath::Euler;
  if (path == SumPath::Table) return jacobsthal_sum(f, QrTable(p));
  int64_t total = accumulate(f, [&](uint64_t v) { return euler_criterion(v, p); });
  return SumResult{total, p, f};
}

SumResult jacobsthal_sum(const PolyModP& f, const QrTable& table) {
  if (table.prime() != f.prime()) {
    throw Error(Errc::InvalidArgument, "residue table built for a different prime");
  }
  int64_t total = accumulate(f, [&](uint64_t v) { return table[v]; });
  return SumResult{total, f.prime(), f};
}

SumResult jacobsthal_sum(std::span<const int64_t> coefficients, const OddPrime& p) {
  return jacobsthal_sum(PolyModP(coefficients, p));
}

std::vector<int64_t> a_part_polynomial() { return {0, 2, 4, 1}; }
std::vector<int64_t> b_part_polynomial_1mod8(int64_t n) { return {0, n, 0, 0, 0, 1}; }
std::vector<int64_t> b_part_polynomial_3mod8() { return {-8, -16, -20, 0, 10, 4, 1}; }
std::vector<int64_t> classical_polynomial(int64_t n) { return {0, -n, 0, 1}; }
std::vector<int64_t> cubic_polynomial(int64_t n) { return {n, 0, 0, 1}; }

ScaledSum sum_A(const OddPrime& p) {
  require_class(p, 8, {1, 3}, "sum_A");
  return sum_A(QrTable(p));
}

ScaledSum sum_A(const QrTable& table) {
  const OddPrime& p = table.prime();
  require_class(p, 8, {1, 3}, "sum_A");
  int64_t raw = table_sum(table, a_part_polynomial());
#ifdef JACOBSTHAL_FAULT_INJECTION
  raw += 1;
#endif
  if (raw % 2 != 0) {
    throw Error(Errc::ParityViolation,
                "sum for x^3+4x^2+2x is odd (" + std::to_string(raw) + ") at p = " +
                    std::to_string(p.value()));
  }
  check_weil(raw, 2, p, "sum for x^3+4x^2+2x");
  return ScaledSum{raw, raw / 2};
}

ScaledSum sum_B1(const OddPrime& p, const FpElement& n) {
  require_class(p, 8, {1}, "sum_B1");
  return sum_B1(QrTable(p), n);
}

ScaledSum sum_B1(const QrTable& table, const FpElement& n) {
  const OddPrime& p = table.prime();
  require_class(p, 8, {1}, "sum_B1");
  if (n.modulus() != p || legendre_symbol(n) != -1) {
    throw Error(Errc::NotANonresidue,
                std::to_string(n.value()) + " is not a nonresidue mod " + std::to_string(p.value()));
  }
  int64_t raw = table_sum(table, b_part_polynomial_1mod8(static_cast<int64_t>(n.value())));
  if (raw % 4 != 0) {
    throw Error(Errc::DivisibilityViolation,
                "sum for x^5+nx is " + std::to_string(raw) + ", not divisible by 4, at p = " +
                    std::to_string(p.value()));
  }
  check_weil(raw, 4, p, "sum for x^5+nx");
  return ScaledSum{raw, raw / 4};
}

ScaledSum sum_B2(const OddPrime& p) {
  require_class(p, 8, {3}, "sum_B2");
  return sum_B2(QrTable(p));
}

ScaledSum sum_B2(const QrTable& table) {
  const OddPrime& p = table.prime();
  require_class(p, 8, {3}, "sum_B2");
  int64_t raw = table_sum(table, b_part_polynomial_3mod8());
  if ((1 + raw) % 4 != 0) {
    throw Error(Errc::DivisibilityViolation,
                "1 + sum for the sextic is " + std::to_string(1 + raw) +
                    ", not divisible by 4, at p = " + std::to_string(p.value()));
  }
  check_weil(1 + raw, 4, p, "1 + sum for the sextic");
  return ScaledSum{raw, (1 + raw) / 4};
}

int64_t sum_classical(const OddPrime& p, int64_t n) { return sum_classical(QrTable(p), n); }

int64_t sum_classical(const QrTable& table, int64_t n) {
  const OddPrime& p = table.prime();
  int64_t raw = table_sum(table, classical_polynomial(n));
  if (reduce_signed(n, p.value()) != 0) check_weil(raw, 2, p, "sum for x^3-nx");
  return raw;
}

ScaledSum classical_half(const OddPrime& p, int64_t n) {
  require_class(p, 4, {1}, "classical_half");
  return classical_half(QrTable(p), n);
}

ScaledSum classical_half(const QrTable& table, int64_t n) {
  const OddPrime& p = table.prime();
  require_class(p, 4, {1}, "classical_half");
  int64_t raw = sum_classical(table, n);
  if (raw % 2 != 0) {
    throw Error(Errc::ParityViolation,
                "sum for x^3-nx is odd (" + std::to_string(raw) + ") at p = " +
                    std::to_string(p.value()));
  }
  return ScaledSum{raw, raw / 2};
}

bool is_cube_mod(int64_t n, const OddPrime& p) {
  const uint64_t q = p.value();
  const uint64_t v = reduce_signed(n, q);
  if (v == 0) return true;
  if (q % 3 != 1) return true;  // cubing is a bijection
  return pow_mod(v, (q - 1) / 3, q) == 1;
}

FpElement next_noncube(const OddPrime& p, uint64_t after) {
  require_class(p, 3, {1}, "next_noncube");
  for (uint64_t n = after + 1;; ++n) {
    if (!is_cube_mod(static_cast<int64_t>(n % p.value()), p)) return FpElement(n, p);
  }
}

FpElement next_nonresidue(const OddPrime& p, uint64_t after) {
  for (uint64_t n = after + 1;; ++n) {
    if (legendre_symbol_reduced(n % p.value(), p.value()) == -1) return FpElement(n, p);
  }
}

CubicSums sum_cubic(const OddPrime& p, int64_t n) {
  require_class(p, 6, {1}, "sum_cubic");
  return sum_cubic(QrTable(p), n);
}

CubicSums sum_cubic(const QrTable& table, int64_t n) {
  const OddPrime& p = table.prime();
  require_class(p, 6, {1}, "sum_cubic");
  if (is_cube_mod(n, p)) {
    throw Error(Errc::NIsACube,
                std::to_string(n) + " is a cube mod " + std::to_string(p.value()));
  }
  int64_t a = table_sum(table, cubic_polynomial(1));
  int64_t b_raw = table_sum(table, cubic_polynomial(n));
  check_weil(a, 2, p, "sum for x^3+1");
  check_weil(b_raw, 2, p, "sum for x^3+n");
  return CubicSums{a, legendre_symbol(n, p) * b_raw};
}

}  // namespace jacobsthal
