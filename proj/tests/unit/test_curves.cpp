#include <cmath>

#include "doctest.h"
#include "jacobsthal/curves.hpp"
#include "jacobsthal/errors.hpp"
#include "jacobsthal/quadforms.hpp"
#include "oracles.hpp"

using namespace jacobsthal;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InvalidArgument;
}

const CurveId kAll[] = {CurveId::E1, CurveId::E2, CurveId::X1, CurveId::X2, CurveId::Congruent};

// #C(F_p^2) through x^((p^2-1)/2) with naive evaluation; independent of the
// norm and forward-difference route in the library.
uint64_t count_fp2_by_euler(const std::vector<int64_t>& f, uint64_t p) {
  const Fp2Context ctx{OddPrime(p)};
  uint64_t count = 0;
  for (uint64_t a = 0; a < p; ++a) {
    for (uint64_t b = 0; b < p; ++b) {
      const Fp2Element x = ctx.element(a, b);
      Fp2Element v = ctx.zero();
      Fp2Element power = ctx.one();
      for (int64_t c : f) {
        v = v + ctx.from_integer(c) * power;
        power = power * x;
      }
      if (v.is_zero()) {
        count += 1;
      } else if (fp2_pow(v, ctx.group_order() / 2) == ctx.one()) {
        count += 2;
      }
    }
  }
  return count + (f.size() % 2 == 0 ? 1 : 2);
}

}  // namespace

TEST_SUITE("curves") {

TEST_CASE("models") {
  CHECK(HyperellipticModel::named(CurveId::E1).coefficients() == std::vector<int64_t>{0, 2, 4, 1});
  CHECK(HyperellipticModel::named(CurveId::X2).genus() == 2);
  CHECK(HyperellipticModel::named(CurveId::E2).genus() == 1);
  CHECK(code_of([] { HyperellipticModel({1, 1}); }) == Errc::InvalidArgument);
  CHECK(code_of([] { HyperellipticModel({1, 0, 0, 0, 1, 0, 0, 1}); }) == Errc::InvalidArgument);
  const HyperellipticModel cube({0, 0, 0, 1});
  CHECK(code_of([&] { cube.reduce(OddPrime(5)); }) == Errc::BadReduction);
  const HyperellipticModel lead3({1, 0, 0, 3});
  CHECK(code_of([&] { lead3.reduce(OddPrime(3)); }) == Errc::BadReduction);
  CHECK(HyperellipticModel::named(CurveId::Congruent).has_good_reduction(OddPrime(3)));
  CHECK(HyperellipticModel::named(CurveId::E1).has_good_reduction(OddPrime(5)));
  CHECK(code_of([] { count_points(HyperellipticModel::named(CurveId::E1), OddPrime(5), 3); }) ==
        Errc::InvalidArgument);
}

TEST_CASE("count_points examples") {
  const OddPrime p3(3);
  CHECK(count_points(HyperellipticModel::named(CurveId::E1), p3, 1) == 6);
  CHECK(count_points(HyperellipticModel::named(CurveId::X2), p3, 1) == 8);
  CHECK(count_points(HyperellipticModel::named(CurveId::X1), p3, 1) == 4);
  // Enumeration over the nine-element field.
  CHECK(count_points(HyperellipticModel::named(CurveId::X2), p3, 2) == 10);
  CHECK(oracle::count_points_fp2({-8, -16, -20, 0, 10, 4, 1}, 3) == 10);
  CHECK(code_of([] { count_points(HyperellipticModel::named(CurveId::X1), OddPrime(2003), 2); }) ==
        Errc::ThresholdExceeded);
}

TEST_CASE("counts match (x, y) enumeration, p <= 200") {
  for (uint64_t p : oracle::odd_primes_upto(200)) {
    const OddPrime P(p);
    for (CurveId id : kAll) {
      const auto model = HyperellipticModel::named(id);
      if (!model.has_good_reduction(P)) continue;
      REQUIRE(count_points(model, P, 1) == oracle::count_points_pairs(model.coefficients(), p));
    }
  }
}

TEST_CASE("count/sum consistency, p <= 1000") {
  for (uint64_t p : oracle::odd_primes_upto(1000)) {
    const OddPrime P(p);
    const QrTable t(P);
    for (CurveId id : kAll) {
      const auto model = HyperellipticModel::named(id);
      if (!model.has_good_reduction(P)) continue;
      const int64_t s = jacobsthal_sum(model.reduce(P), t).raw_sum;
      const int64_t n = static_cast<int64_t>(count_points(model, t, 1));
      // All named even-degree models are monic.
      const int64_t extra = model.degree() % 2 == 1 ? 1 : 2;
      REQUIRE(n == static_cast<int64_t>(p) + extra + s);
    }
  }
}

TEST_CASE("F_p^2 counts match two independent routes, p <= 31") {
  for (uint64_t p : oracle::odd_primes_upto(31)) {
    const OddPrime P(p);
    for (CurveId id : kAll) {
      const auto model = HyperellipticModel::named(id);
      if (!model.has_good_reduction(P)) continue;
      const uint64_t n2 = count_points(model, P, 2);
      REQUIRE(n2 == oracle::count_points_fp2(model.coefficients(), p));
      REQUIRE(n2 == count_fp2_by_euler(model.coefficients(), p));
    }
  }
}

TEST_CASE("local_factor_genus1 examples") {
  const LocalFactor f3 = local_factor_genus1(OddPrime(3), 6);
  CHECK(f3.genus == 1);
  CHECK(f3.coefficients == std::vector<int64_t>{2, 3});
  const LocalFactor f13 = local_factor_genus1(OddPrime(13), 14);
  CHECK(f13.coefficients == std::vector<int64_t>{0, 13});
  CHECK(count_points(HyperellipticModel::named(CurveId::E1), OddPrime(13), 1) == 14);
  CHECK(code_of([] { local_factor_genus1(OddPrime(3), 100); }) == Errc::HasseViolation);
}

TEST_CASE("local_factor_genus2 examples") {
  const LocalFactor f3 = local_factor_genus2(OddPrime(3), 8, 10);
  CHECK(f3.coefficients == std::vector<int64_t>{4, 8, 12, 9});
  CHECK(local_factor(HyperellipticModel::named(CurveId::X2), OddPrime(3)).coefficients ==
        std::vector<int64_t>{4, 8, 12, 9});

  const LocalFactor x1 = local_factor(HyperellipticModel::named(CurveId::X1), OddPrime(5));
  CHECK(x1.c(1) == 0);

  const LocalFactor x2 = local_factor(HyperellipticModel::named(CurveId::X2), OddPrime(11));
  CHECK(std::abs(x2.c(1)) == 4);
  CHECK(x2.c(2) == 8);
  CHECK(x2.c(3) == 11 * x2.c(1));
  CHECK(x2.c(4) == 121);

  CHECK(code_of([] { local_factor_genus2(OddPrime(3), 8, 11); }) == Errc::InconsistentCounts);
  CHECK(code_of([] { local_factor_genus2(OddPrime(3), 100, 10); }) == Errc::InconsistentCounts);
}

TEST_CASE("factors predict the counts they came from, p <= 300") {
  for (uint64_t p : oracle::odd_primes_upto(300)) {
    const OddPrime P(p);
    for (CurveId id : kAll) {
      const auto model = HyperellipticModel::named(id);
      if (!model.has_good_reduction(P)) continue;
      const LocalFactor f = local_factor(model, P);
      REQUIRE(point_count_from_factor(f, 1) == static_cast<int64_t>(count_points(model, P, 1)));
      // For genus 1 the F_p^2 count is a prediction, not an input.
      REQUIRE(point_count_from_factor(f, 2) == static_cast<int64_t>(count_points(model, P, 2)));
    }
  }
}

TEST_CASE("X2 factor shape at p = 3 mod 8, p <= 600") {
  for (uint64_t p : oracle::odd_primes_upto(600)) {
    if (p % 8 != 3) continue;
    const auto b = static_cast<int64_t>(oracle::representations(p, 2)[0].second);
    const LocalFactor f = local_factor(HyperellipticModel::named(CurveId::X2), OddPrime(p));
    const int64_t P = static_cast<int64_t>(p);
    REQUIRE(std::abs(f.c(1)) == 4 * b);
    REQUIRE(f.c(2) == 8 * b * b);
    REQUIRE(f.c(3) == P * f.c(1));
    REQUIRE(f.c(4) == P * P);
  }
}

TEST_CASE("supersingular vanishing at p = 5, 7 mod 8") {
  for (uint64_t p : oracle::odd_primes_upto(1000)) {
    if (p % 8 != 5 && p % 8 != 7) continue;
    const OddPrime P(p);
    const QrTable t(P);
    REQUIRE(jacobsthal_sum(HyperellipticModel::named(CurveId::E1).reduce(P), t).raw_sum == 0);
    REQUIRE(1 + jacobsthal_sum(HyperellipticModel::named(CurveId::X2).reduce(P), t).raw_sum == 0);
    if (p < 400) REQUIRE(local_factor(HyperellipticModel::named(CurveId::X2), P).c(1) == 0);
  }
}

TEST_CASE("trace identity and twist examples") {
  const TraceCheck t3 = trace_check(OddPrime(3));
  CHECK(t3.sum_x1 == 0);
  CHECK(t3.sum_e1 == 2);
  CHECK(t3.sum_e2 == -2);
  CHECK(t3.minus_one_symbol == -1);
  CHECK(trace_identity_check(OddPrime(3)));
  CHECK(trace_identity_check(OddPrime(5)));
  CHECK(trace_identity_check(OddPrime(17)));
  CHECK(quadratic_twist_check(OddPrime(3)));
  const TraceCheck t13 = trace_check(OddPrime(13));
  CHECK(t13.sum_e1 == 0);
  CHECK(t13.sum_e2 == 0);
  CHECK(quadratic_twist_check(OddPrime(13)));
  const TraceCheck t17 = trace_check(OddPrime(17));
  CHECK(t17.sum_e1 == t17.sum_e2);
  CHECK(quadratic_twist_check(OddPrime(17)));
}

TEST_CASE("trace identity against the oracle, p <= 2000") {
  for (uint64_t p : oracle::odd_primes_upto(2000)) {
    const TraceCheck t = trace_check(QrTable(OddPrime(p)));
    REQUIRE(t.identity_holds);
    REQUIRE(t.twist_holds);
    if (p < 500) {
      REQUIRE(t.sum_x1 == oracle::jacobsthal_sum({0, 1, 0, 0, 0, 1}, p));
      REQUIRE(t.sum_e1 == oracle::jacobsthal_sum({0, 2, 4, 1}, p));
      REQUIRE(t.sum_e2 == oracle::jacobsthal_sum({0, 2, -4, 1}, p));
    }
  }
}

TEST_CASE("kummer_character examples") {
  const KummerValue v11 = kummer_character(OddPrime(11), 1);
  CHECK((v11.exponent == 1 || v11.exponent == 3));
  CHECK(kummer_character(OddPrime(5), 3).exponent == 0);
  CHECK(kummer_character(OddPrime(7), 2).exponent == 0);
  for (uint64_t p : {3, 5, 7, 11, 13}) CHECK(kummer_character(OddPrime(p), 0).exponent == 0);
  CHECK(code_of([] { kummer_character(OddPrime(17), 1); }) == Errc::WrongResidueClass);
  CHECK(code_of([] { kummer_character(OddPrime(11), 4); }) == Errc::InvalidArgument);
  CHECK(code_of([] { kummer_character(OddPrime(11), -1); }) == Errc::InvalidArgument);
}

TEST_CASE("kummer character laws, p < 2000") {
  for (uint64_t p : oracle::odd_primes_upto(1999)) {
    if (p % 8 == 1) continue;
    const OddPrime P(p);
    const Fp2Context ctx(P);
    const KummerValue v1 = kummer_character(P, 1);
    const Fp2Element i = fp2_sqrt(ctx.from_integer(-1));
    const Fp2Element eta4 = kummer_radicand(ctx);
    // eta^(p^2 - 1) = (eta^4)^((p^2 - 1)/4) = i^j.
    REQUIRE(fp2_pow(eta4, ctx.group_order() / 4) == fp2_pow(i, static_cast<u128>(v1.artin_exponent)));
    if (p % 8 == 3) {
      REQUIRE((v1.exponent == 1 || v1.exponent == 3));
      REQUIRE(fp2_pow(sqrt2_minus_one(ctx), ctx.group_order() / 2) == -ctx.one());
    } else {
      for (int k = 0; k < 4; ++k) REQUIRE(kummer_character(P, k).exponent == 0);
    }
    for (int k = 0; k < 4; ++k) {
      const int inv = (4 - k) % 4;
      REQUIRE((kummer_character(P, k).exponent + kummer_character(P, inv).exponent) % 4 == 0);
    }
  }
}

}  // TEST_SUITE
