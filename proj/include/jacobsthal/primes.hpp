#pragma once

#include <cstdint>
#include <vector>

namespace jacobsthal {

/// Odd primes in [lo, hi] (inclusive), produced one sieve window at a time
/// in ascending order.
class PrimeSegments {
 public:
  static constexpr uint64_t kDefaultSegment = uint64_t{1} << 16;

  PrimeSegments(uint64_t lo, uint64_t hi, uint64_t segment_size = kDefaultSegment);

  /// Replaces `out` with the next window's primes; false once exhausted.
  bool next(std::vector<uint64_t>& out);

 private:
  uint64_t next_lo_;
  uint64_t hi_;
  uint64_t segment_;
  bool done_;
  std::vector<uint32_t> base_primes_;
  std::vector<uint8_t> window_;
};

/// All odd primes in [lo, hi].
std::vector<uint64_t> odd_primes_between(uint64_t lo, uint64_t hi);

}  // namespace jacobsthal
