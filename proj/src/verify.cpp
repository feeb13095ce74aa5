#include "jacobsthal/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "jacobsthal/curves.hpp"
#include "jacobsthal/errors.hpp"
#include "jacobsthal/quadforms.hpp"

namespace jacobsthal {

std::string_view to_string(Theorem theorem) {
  switch (theorem) {
    case Theorem::Main: return "main";
    case Theorem::Classical: return "classical";
    case Theorem::Cubic: return "cubic";
    case Theorem::Signs: return "signs";
    case Theorem::Trace: return "trace";
  }
  return "unknown";
}

std::optional<Theorem> theorem_from_string(std::string_view name) {
  for (Theorem t : {Theorem::Main, Theorem::Classical, Theorem::Cubic, Theorem::Signs, Theorem::Trace}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

bool applies(Theorem theorem, uint64_t p) {
  switch (theorem) {
    case Theorem::Main: return p % 8 == 1 || p % 8 == 3;
    case Theorem::Classical: return p % 4 == 1;
    case Theorem::Cubic: return p % 6 == 1;
    case Theorem::Signs: return p % 4 == 1 || p % 8 == 3;
    case Theorem::Trace: return p % 2 == 1;
  }
  return false;
}

int64_t VerifyReport::value(std::string_view name) const {
  for (const auto& v : values) {
    if (v.name == name) return v.value;
  }
  throw std::out_of_range("no value named " + std::string(name));
}

namespace {

void require(Theorem theorem, const OddPrime& p) {
  if (!applies(theorem, p.value())) {
    throw Error(Errc::WrongResidueClass, std::string(to_string(theorem)) + " does not apply to p = " +
                                             std::to_string(p.value()));
  }
}

// Runs body; a jacobsthal::Error other than WrongResidueClass becomes a
// failed report carrying the message.
template <class Body>
VerifyReport guarded(Theorem theorem, const OddPrime& p, Body&& body) {
  require(theorem, p);
  VerifyReport report{p, theorem, {}, false, {}};
  try {
    body(report);
  } catch (const Error& e) {
    if (e.code() == Errc::WrongResidueClass) throw;
    report.holds = false;
    report.detail = e.what();
  }
  return report;
}

int64_t iabs(int64_t v) { return v < 0 ? -v : v; }

std::multiset<int64_t> cubic_orbit(int64_t a, int64_t b) {
  return {iabs(a), iabs(b), iabs(a + b)};
}

}  // namespace

VerifyReport verify_main(const OddPrime& p) {
  require(Theorem::Main, p);
  return verify_main(QrTable(p));
}

VerifyReport verify_main(const QrTable& table) {
  const OddPrime& p = table.prime();
  return guarded(Theorem::Main, p, [&](VerifyReport& r) {
    const ScaledSum a_sum = sum_A(table);
    r.values.push_back({"raw_A", a_sum.raw_sum});
    r.values.push_back({"A", a_sum.value});
    ScaledSum b_sum{};
    if (p.residue(8) == 1) {
      const FpElement n = least_nonresidue(p);
      r.values.push_back({"n", static_cast<int64_t>(n.value())});
      b_sum = sum_B1(table, n);
    } else {
      b_sum = sum_B2(table);
    }
    r.values.push_back({"raw_B", b_sum.raw_sum});
    r.values.push_back({"B", b_sum.value});
    const QuadRep rep = cornacchia(p, 2);
    r.values.push_back({"a", static_cast<int64_t>(rep.a)});
    r.values.push_back({"b", static_cast<int64_t>(rep.b)});

    const i128 form = static_cast<i128>(a_sum.value) * a_sum.value +
                      2 * static_cast<i128>(b_sum.value) * b_sum.value;
    if (form != p.value()) {
      r.detail = "A^2 + 2B^2 != p";
    } else if (a_sum.magnitude() != rep.a || b_sum.magnitude() != rep.b) {
      r.detail = "(|A|, |B|) differs from the Cornacchia representation";
    } else {
      r.holds = true;
    }
  });
}

VerifyReport verify_classical(const OddPrime& p) {
  require(Theorem::Classical, p);
  return verify_classical(QrTable(p));
}

VerifyReport verify_classical(const QrTable& table) {
  const OddPrime& p = table.prime();
  return guarded(Theorem::Classical, p, [&](VerifyReport& r) {
    const ScaledSum a_sum = classical_half(table, 1);
    const FpElement n = least_nonresidue(p);
    const ScaledSum b_sum = classical_half(table, static_cast<int64_t>(n.value()));
    const QuadRep rep = cornacchia(p, 1);
    r.values = {{"A", a_sum.value},
                {"n", static_cast<int64_t>(n.value())},
                {"B", b_sum.value},
                {"a", static_cast<int64_t>(rep.a)},
                {"b", static_cast<int64_t>(rep.b)}};
    const i128 form = static_cast<i128>(a_sum.value) * a_sum.value +
                      static_cast<i128>(b_sum.value) * b_sum.value;
    if (form != p.value()) {
      r.detail = "A^2 + B^2 != p";
    } else if (a_sum.magnitude() % 2 != 1 || b_sum.magnitude() % 2 != 0) {
      r.detail = "A must be odd and B even";
    } else if (a_sum.magnitude() != rep.a || b_sum.magnitude() != rep.b) {
      r.detail = "(|A|, |B|) differs from the Cornacchia representation";
    } else {
      r.holds = true;
    }
  });
}

VerifyReport verify_classical_vanishing(const OddPrime& p, std::span<const int64_t> ns) {
  if (p.residue(4) != 3) {
    throw Error(Errc::WrongResidueClass, "vanishing check needs p = 3 mod 4");
  }
  const QrTable table(p);
  VerifyReport r{p, Theorem::Classical, {}, true, {}};
  for (int64_t n : ns) {
    const int64_t raw = sum_classical(table, n);
    r.values.push_back({"sum_n" + std::to_string(n), raw});
    if (raw != 0) {
      r.holds = false;
      r.detail = "sum for x^3 - " + std::to_string(n) + "x does not vanish";
    }
  }
  return r;
}

VerifyReport verify_cubic(const OddPrime& p) {
  require(Theorem::Cubic, p);
  return verify_cubic(QrTable(p));
}

VerifyReport verify_cubic(const QrTable& table) {
  const OddPrime& p = table.prime();
  return guarded(Theorem::Cubic, p, [&](VerifyReport& r) {
    const FpElement n1 = next_noncube(p, 1);
    const CubicSums first = sum_cubic(table, static_cast<int64_t>(n1.value()));
    const FpElement n2 = next_noncube(p, n1.value());
    const CubicSums second = sum_cubic(table, static_cast<int64_t>(n2.value()));
    const CubicRep rep = cubic_rep(p);
    r.values = {{"n", static_cast<int64_t>(n1.value())}, {"A", first.A},  {"B", first.B},
                {"n2", static_cast<int64_t>(n2.value())}, {"A2", second.A}, {"B2", second.B},
                {"form_A", rep.A},                         {"form_B", rep.B}};
    const int64_t target = static_cast<int64_t>(3 * p.value());
    auto form = [](const CubicSums& s) { return s.A * s.A + s.A * s.B + s.B * s.B; };
    if (form(first) != target) {
      r.detail = "A^2 + AB + B^2 != 3p";
    } else if (form(second) != target) {
      r.detail = "A^2 + AB + B^2 != 3p for the second non-cube";
    } else if (cubic_orbit(first.A, first.B) != cubic_orbit(rep.A, rep.B)) {
      r.detail = "{|A|, |B|, |A+B|} differs from the form representation";
    } else {
      r.holds = true;
    }
  });
}

VerifyReport verify_signs(const OddPrime& p) {
  require(Theorem::Signs, p);
  return verify_signs(QrTable(p));
}

VerifyReport verify_signs(const QrTable& table) {
  const OddPrime& p = table.prime();
  return guarded(Theorem::Signs, p, [&](VerifyReport& r) {
    bool ok = true;
    std::string notes;
    if (p.residue(4) == 1) {
      const SignReport s = epsilon_classical(table);
      r.values.push_back({"classical_predicted", s.predicted_trace});
      r.values.push_back({"classical_observed", s.observed_trace});
      if (!s.consistent) {
        ok = false;
        notes += "classical sign law fails; ";
      }
    } else {
      notes += "classical branch skipped; ";
    }
    if (p.residue(8) == 1 || p.residue(8) == 3) {
      const SignReport s = epsilon_sqrtm2(table);
      r.values.push_back({"sqrtm2_predicted", s.predicted_trace});
      r.values.push_back({"sqrtm2_observed", s.observed_trace});
      if (!s.consistent) {
        ok = false;
        notes += "sqrt(-2) sign law fails; ";
      }
    } else {
      notes += "sqrt(-2) branch skipped; ";
    }
    if (!notes.empty()) notes.resize(notes.size() - 2);
    r.holds = ok;
    r.detail = notes;
  });
}

VerifyReport verify_trace(const OddPrime& p) { return verify_trace(QrTable(p)); }

VerifyReport verify_trace(const QrTable& table) {
  const OddPrime& p = table.prime();
  return guarded(Theorem::Trace, p, [&](VerifyReport& r) {
    const TraceCheck t = trace_check(table);
    r.values = {{"sum_x1", t.sum_x1}, {"sum_e1", t.sum_e1}, {"sum_e2", t.sum_e2}};
    if (!t.identity_holds) {
      r.detail = "sum_x1 != sum_e1 + sum_e2";
    } else if (!t.twist_holds) {
      r.detail = "sum_e2 != (-1/p) sum_e1";
    } else {
      r.holds = true;
    }
  });
}

VerifyReport run_theorem(Theorem theorem, const QrTable& table) {
  switch (theorem) {
    case Theorem::Main: return verify_main(table);
    case Theorem::Classical: return verify_classical(table);
    case Theorem::Cubic: return verify_cubic(table);
    case Theorem::Signs: return verify_signs(table);
    case Theorem::Trace: return verify_trace(table);
  }
  throw Error(Errc::InvalidArgument, "unknown theorem");
}

std::vector<RangeSummary> scan_range(uint64_t lo, uint64_t hi, std::span<const Theorem> theorems_in,
                                     const ScanOptions& options, const ReportSink& sink) {
  std::vector<Theorem> selected;
  for (Theorem t : theorems_in) {
    if (std::find(selected.begin(), selected.end(), t) == selected.end()) selected.push_back(t);
  }
  const std::span<const Theorem> theorems(selected);
  std::vector<RangeSummary> summaries;
  for (Theorem t : theorems) summaries.push_back(RangeSummary{lo, hi, t, 0, 0, {}});
  if (lo > hi || theorems.empty()) return summaries;

  unsigned jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.jobs;

  PrimeSegments segments(lo, hi, options.segment_size);
  std::vector<uint64_t> primes;
  std::vector<std::vector<VerifyReport>> results;
  while (segments.next(primes)) {
    std::erase_if(primes, [&](uint64_t p) {
      return std::none_of(theorems.begin(), theorems.end(), [&](Theorem t) { return applies(t, p); });
    });
    results.assign(primes.size(), {});

    auto work = [&](std::size_t idx) {
      const OddPrime p(primes[idx]);
      const QrTable table(p);
      for (Theorem t : theorems) {
        if (applies(t, p.value())) results[idx].push_back(run_theorem(t, table));
      }
    };

    if (jobs == 1 || primes.size() < 2) {
      for (std::size_t i = 0; i < primes.size(); ++i) work(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr failure;
      std::mutex failure_mutex;
      {
        std::vector<std::jthread> workers;
        const unsigned count = std::min<std::size_t>(jobs, primes.size());
        for (unsigned w = 0; w < count; ++w) {
          workers.emplace_back([&] {
            for (std::size_t i = next++; i < primes.size(); i = next++) {
              try {
                work(i);
              } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
              }
            }
          });
        }
      }
      if (failure) std::rethrow_exception(failure);
    }

    for (auto& per_prime : results) {
      for (auto& report : per_prime) {
        const auto slot = static_cast<std::size_t>(
            std::find(theorems.begin(), theorems.end(), report.theorem) - theorems.begin());
        RangeSummary& s = summaries[slot];
        ++s.tested;
        if (report.holds) {
          ++s.passed;
        } else {
          s.failures.push_back(report);
        }
        if (sink) sink(report);
      }
    }
  }
  return summaries;
}

}  // namespace jacobsthal
