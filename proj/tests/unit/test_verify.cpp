#include <random>

#include "doctest.h"
#include "jacobsthal/errors.hpp"
#include "jacobsthal/primes.hpp"
#include "jacobsthal/quadforms.hpp"
#include "jacobsthal/verify.hpp"
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

int64_t abs_value(const VerifyReport& r, std::string_view name) { return std::abs(r.value(name)); }

uint64_t count_applicable(Theorem t, uint64_t lo, uint64_t hi) {
  uint64_t n = 0;
  for (uint64_t p : oracle::odd_primes_upto(hi, lo)) n += applies(t, p) ? 1 : 0;
  return n;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("prime segments agree with trial division") {
  CHECK(odd_primes_between(1, 20) == std::vector<uint64_t>{3, 5, 7, 11, 13, 17, 19});
  CHECK(odd_primes_between(20, 10).empty());
  CHECK(odd_primes_between(2, 2).empty());
  for (uint64_t seg : {7, 64, 1000, 1 << 16}) {
    PrimeSegments s(1000, 30000, seg);
    std::vector<uint64_t> window, all;
    while (s.next(window)) all.insert(all.end(), window.begin(), window.end());
    REQUIRE(all == oracle::odd_primes_upto(30000, 1000));
  }
  std::mt19937_64 rng(9);
  for (int i = 0; i < 5; ++i) {
    const uint64_t lo = (rng() % (uint64_t{1} << 40)) + 1'000'000'000'000ull;
    std::vector<uint64_t> expected;
    for (uint64_t n = lo; n <= lo + 5000; ++n) {
      if (oracle::is_prime_trial(n)) expected.push_back(n);
    }
    REQUIRE(odd_primes_between(lo, lo + 5000) == expected);
  }
}

TEST_CASE("theorem names") {
  for (Theorem t : {Theorem::Main, Theorem::Classical, Theorem::Cubic, Theorem::Signs, Theorem::Trace}) {
    CHECK(theorem_from_string(to_string(t)) == t);
  }
  CHECK_FALSE(theorem_from_string("nope").has_value());
}

TEST_CASE("verify_main examples") {
  const VerifyReport r3 = verify_main(OddPrime(3));
  CHECK(r3.holds);
  CHECK(r3.value("A") == 1);
  CHECK(r3.value("B") == 1);
  const VerifyReport r17 = verify_main(OddPrime(17));
  CHECK(r17.holds);
  CHECK(abs_value(r17, "A") == 3);
  CHECK(abs_value(r17, "B") == 2);
  const VerifyReport r41 = verify_main(OddPrime(41));
  CHECK(r41.holds);
  CHECK(abs_value(r41, "A") == 3);
  CHECK(abs_value(r41, "B") == 4);
  CHECK(code_of([] { verify_main(OddPrime(5)); }) == Errc::WrongResidueClass);
  CHECK_THROWS_AS(r3.value("missing"), std::out_of_range);
}

TEST_CASE("verify_classical examples") {
  for (auto [p, a, b] : {std::tuple{5, 1, 2}, {13, 3, 2}, {29, 5, 2}}) {
    const VerifyReport r = verify_classical(OddPrime(p));
    CHECK(r.holds);
    CHECK(abs_value(r, "A") == a);
    CHECK(abs_value(r, "B") == b);
  }
  CHECK(code_of([] { verify_classical(OddPrime(7)); }) == Errc::WrongResidueClass);
}

TEST_CASE("verify_cubic examples") {
  const VerifyReport r7 = verify_cubic(OddPrime(7));
  CHECK(r7.holds);
  CHECK(r7.value("A") == 4);
  CHECK(r7.value("B") == 1);
  CHECK(verify_cubic(OddPrime(13)).holds);
  CHECK(verify_cubic(OddPrime(31)).holds);
  CHECK(code_of([] { verify_cubic(OddPrime(11)); }) == Errc::WrongResidueClass);
}

TEST_CASE("verify_signs examples") {
  const VerifyReport r5 = verify_signs(OddPrime(5));
  CHECK(r5.holds);
  CHECK(r5.value("classical_predicted") == -2);
  CHECK_THROWS_AS(r5.value("sqrtm2_predicted"), std::out_of_range);
  const VerifyReport r3 = verify_signs(OddPrime(3));
  CHECK(r3.holds);
  CHECK(r3.value("sqrtm2_observed") == -2);
  CHECK_THROWS_AS(r3.value("classical_predicted"), std::out_of_range);
  const VerifyReport r17 = verify_signs(OddPrime(17));
  CHECK(r17.holds);
  CHECK(r17.value("classical_predicted") == r17.value("classical_observed"));
  CHECK(r17.value("sqrtm2_predicted") == r17.value("sqrtm2_observed"));
  CHECK(code_of([] { verify_signs(OddPrime(7)); }) == Errc::WrongResidueClass);
}

TEST_CASE("classical vanishing") {
  const int64_t ns[] = {1, 2, 3};
  CHECK(verify_classical_vanishing(OddPrime(7), ns).holds);
  CHECK(verify_classical_vanishing(OddPrime(9967), ns).holds);
  CHECK(code_of([&] { verify_classical_vanishing(OddPrime(13), ns); }) == Errc::WrongResidueClass);
}

TEST_CASE("scan_range examples") {
  const Theorem main[] = {Theorem::Main};
  const auto m = scan_range(3, 100, main);
  REQUIRE(m.size() == 1);
  CHECK(m[0].tested == count_applicable(Theorem::Main, 3, 100));
  CHECK(m[0].tested == 12);
  CHECK(m[0].passed == m[0].tested);

  const Theorem classical[] = {Theorem::Classical};
  const auto c = scan_range(3, 100, classical);
  CHECK(c[0].tested == 11);
  CHECK(c[0].passed == 11);

  const Theorem all[] = {Theorem::Main, Theorem::Classical, Theorem::Cubic, Theorem::Signs};
  for (const auto& s : scan_range(5, 4, all)) CHECK(s.tested == 0);

  const Theorem dup[] = {Theorem::Cubic, Theorem::Cubic};
  const auto d = scan_range(3, 200, dup);
  REQUIRE(d.size() == 1);
  CHECK(d[0].tested == count_applicable(Theorem::Cubic, 3, 200));
}

TEST_CASE("zero failures on a dense range") {
  const Theorem all[] = {Theorem::Main, Theorem::Classical, Theorem::Cubic, Theorem::Signs, Theorem::Trace};
  ScanOptions opts;
  opts.jobs = 0;
  const auto summaries = scan_range(3, 20000, all, opts);
  for (const auto& s : summaries) {
    CAPTURE(to_string(s.theorem));
    CHECK(s.tested == count_applicable(s.theorem, 3, 20000));
    CHECK(s.passed == s.tested);
    CHECK(s.failures.empty());
  }
}

TEST_CASE("reports arrive in prime order, identical for any worker count") {
  const Theorem all[] = {Theorem::Signs, Theorem::Main, Theorem::Cubic};
  auto run = [&](unsigned jobs, uint64_t segment) {
    ScanOptions opts;
    opts.jobs = jobs;
    opts.segment_size = segment;
    std::vector<std::tuple<uint64_t, Theorem, std::vector<NamedValue>, bool>> seen;
    auto summaries = scan_range(3, 6000, all, opts, [&](const VerifyReport& r) {
      seen.emplace_back(r.p.value(), r.theorem, r.values, r.holds);
    });
    return std::pair{seen, summaries};
  };
  const auto [base, base_summary] = run(1, 1 << 16);
  for (std::size_t i = 1; i < base.size(); ++i) REQUIRE(std::get<0>(base[i - 1]) <= std::get<0>(base[i]));
  for (auto [jobs, seg] : {std::pair{2u, 97ull}, {4u, 1000ull}, {8u, 1ull << 16}}) {
    const auto [other, other_summary] = run(jobs, seg);
    REQUIRE(other == base);
    REQUIRE(other_summary.size() == base_summary.size());
    for (std::size_t i = 0; i < other_summary.size(); ++i) {
      REQUIRE(other_summary[i].tested == base_summary[i].tested);
      REQUIRE(other_summary[i].passed == base_summary[i].passed);
    }
  }
}

TEST_CASE("|B1| does not depend on the nonresidue") {
  std::mt19937_64 rng(20);
  std::vector<uint64_t> candidates;
  for (uint64_t p : oracle::odd_primes_upto(200000, 1000)) {
    if (p % 8 == 1) candidates.push_back(p);
  }
  for (int i = 0; i < 20; ++i) {
    const OddPrime p(candidates[rng() % candidates.size()]);
    const QrTable t(p);
    const FpElement n1 = next_nonresidue(p, 1);
    const FpElement n2 = next_nonresidue(p, n1.value());
    const FpElement n3 = next_nonresidue(p, n2.value() + rng() % 1000);
    REQUIRE(n1.value() != n2.value());
    REQUIRE(n2.value() != n3.value());
    const uint64_t b = sum_B1(t, n1).magnitude();
    REQUIRE(sum_B1(t, n2).magnitude() == b);
    REQUIRE(sum_B1(t, n3).magnitude() == b);
    REQUIRE(b == cornacchia(p, 2).b);
  }
}

TEST_CASE("p = 1 mod 8 satisfies both quadratic forms independently") {
  for (uint64_t p : oracle::odd_primes_upto(20000)) {
    if (p % 8 != 1) continue;
    const QrTable t{OddPrime(p)};
    const VerifyReport c = verify_classical(t);
    const VerifyReport m = verify_main(t);
    REQUIRE(c.holds);
    REQUIRE(m.holds);
    REQUIRE(static_cast<uint64_t>(abs_value(c, "A")) == cornacchia(OddPrime(p), 1).a);
    REQUIRE(static_cast<uint64_t>(abs_value(m, "A")) == cornacchia(OddPrime(p), 2).a);
  }
}

}  // TEST_SUITE
