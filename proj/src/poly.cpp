#include "jacobsthal/poly.hpp"

#include <utility>

namespace jacobsthal {

PolyModP::PolyModP(std::span<const int64_t> coefficients, const OddPrime& p) : p_(p) {
  coeffs_.reserve(coefficients.size());
  for (int64_t c : coefficients) coeffs_.push_back(reduce_signed(c, p.value()));
  normalize();
}

PolyModP::PolyModP(std::vector<uint64_t> residues, const OddPrime& p, int)
    : p_(p), coeffs_(std::move(residues)) {
  for (auto& c : coeffs_) c %= p.value();
  normalize();
}

PolyModP PolyModP::from_residues(std::vector<uint64_t> residues, const OddPrime& p) {
  return PolyModP(std::move(residues), p, 0);
}

void PolyModP::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

uint64_t PolyModP::operator()(uint64_t x) const noexcept {
  const uint64_t p = p_.value();
  uint64_t acc = 0;
  if (p < (uint64_t{1} << 32)) {
    // acc * x + c < p^2 + p fits in 64 bits: one reduction per step.
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (acc * x + *it) % p;
  } else {
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = static_cast<uint64_t>((static_cast<u128>(acc) * x + *it) % p);
    }
  }
  return acc;
}

Fp2Element PolyModP::operator()(const Fp2Element& x) const {
  const Fp2Context& ctx = x.context();
  Fp2Element acc = ctx.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + ctx.element(*it, 0);
  }
  return acc;
}

PolyModP PolyModP::derivative() const {
  const uint64_t p = p_.value();
  std::vector<uint64_t> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(mul_mod(coeffs_[i], i % p, p));
  return from_residues(std::move(d), p_);
}

namespace {

// a mod b, b nonzero.
std::vector<uint64_t> poly_rem(std::vector<uint64_t> a, const std::vector<uint64_t>& b, uint64_t p) {
  const uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    uint64_t q = mul_mod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = sub_mod(a[shift + i], mul_mod(q, b[i], p), p);
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

PolyModP poly_gcd(PolyModP a, PolyModP b) {
  const uint64_t p = a.prime().value();
  std::vector<uint64_t> x = a.coefficients(), y = b.coefficients();
  while (!y.empty()) {
    std::vector<uint64_t> r = poly_rem(std::move(x), y, p);
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.empty()) {
    uint64_t inv = inv_mod(x.back(), p);
    for (auto& c : x) c = mul_mod(c, inv, p);
  }
  return PolyModP::from_residues(std::move(x), a.prime());
}

bool is_squarefree(const PolyModP& f) {
  if (f.is_zero()) return false;
  PolyModP g = poly_gcd(f, f.derivative());
  return !g.is_zero() && g.degree() == 0;
}

}  // namespace jacobsthal
