#pragma once

// Theorem-level checks for a single prime and for ranges of primes.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jacobsthal/charsums.hpp"
#include "jacobsthal/modarith.hpp"
#include "jacobsthal/primes.hpp"

namespace jacobsthal {

enum class Theorem {
  Main,       // p = A^2 + 2B^2 from the cubic, quintic and sextic sums
  Classical,  // p = A^2 + B^2 from x^3 - x and x^3 - nx
  Cubic,      // 3p = A^2 + AB + B^2
  Signs,      // Frobenius-trace sign laws
  Trace,      // x^5 + x splits into the two sqrt(-2) curves; twist relation
};

std::string_view to_string(Theorem theorem);
std::optional<Theorem> theorem_from_string(std::string_view name);

/// The congruence hypothesis of the theorem.
bool applies(Theorem theorem, uint64_t p);

struct NamedValue {
  std::string name;
  int64_t value;

  friend bool operator==(const NamedValue&, const NamedValue&) = default;
};

struct VerifyReport {
  OddPrime p;
  Theorem theorem;
  std::vector<NamedValue> values;  // fixed order per theorem
  bool holds;
  std::string detail;  // set when holds is false, or when a branch was skipped

  /// Throws std::out_of_range for unknown names.
  int64_t value(std::string_view name) const;
};

// Each throws Error(WrongResidueClass) outside the theorem's hypothesis. A
// failed identity (including a parity or divisibility error raised by the
// sums) is reported with holds = false rather than thrown.
VerifyReport verify_main(const OddPrime& p);
VerifyReport verify_main(const QrTable& table);
VerifyReport verify_classical(const OddPrime& p);
VerifyReport verify_classical(const QrTable& table);
VerifyReport verify_cubic(const OddPrime& p);
VerifyReport verify_cubic(const QrTable& table);
VerifyReport verify_signs(const OddPrime& p);
VerifyReport verify_signs(const QrTable& table);
VerifyReport verify_trace(const OddPrime& p);
VerifyReport verify_trace(const QrTable& table);

/// sum (x^3 - nx / p) = 0 for each n, p = 3 mod 4.
VerifyReport verify_classical_vanishing(const OddPrime& p, std::span<const int64_t> ns);

VerifyReport run_theorem(Theorem theorem, const QrTable& table);

struct RangeSummary {
  uint64_t lo;
  uint64_t hi;
  Theorem theorem;
  uint64_t tested = 0;
  uint64_t passed = 0;
  std::vector<VerifyReport> failures;
};

struct ScanOptions {
  unsigned jobs = 1;  // 0 = hardware concurrency
  uint64_t segment_size = PrimeSegments::kDefaultSegment;
};

using ReportSink = std::function<void(const VerifyReport&)>;

/// Runs every selected theorem on every applicable prime in [lo, hi].
/// Reports reach `sink` in ascending prime order (theorems in selection order
/// for each prime) whatever the worker count. One summary per distinct
/// theorem.
std::vector<RangeSummary> scan_range(uint64_t lo, uint64_t hi, std::span<const Theorem> theorems,
                                     const ScanOptions& options = {}, const ReportSink& sink = {});

}  // namespace jacobsthal
