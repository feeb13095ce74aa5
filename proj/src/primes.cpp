#include "jacobsthal/primes.hpp"

#include <algorithm>

#include "jacobsthal/errors.hpp"
#include "jacobsthal/modarith.hpp"

namespace jacobsthal {

PrimeSegments::PrimeSegments(uint64_t lo, uint64_t hi, uint64_t segment_size)
    : next_lo_(std::max<uint64_t>(lo, 3)), hi_(hi), segment_(segment_size), done_(false) {
  if (segment_ == 0) throw Error(Errc::InvalidArgument, "segment size must be positive");
  if (next_lo_ > hi_) {
    done_ = true;
    return;
  }
  if (hi_ > (uint64_t{1} << 63)) throw Error(Errc::InvalidArgument, "range bound above 2^63");
  const uint64_t root = isqrt(hi_);
  std::vector<uint8_t> small(root + 1, 1);
  for (uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base_primes_.push_back(static_cast<uint32_t>(i));
    for (uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  }
}

bool PrimeSegments::next(std::vector<uint64_t>& out) {
  out.clear();
  if (done_) return false;
  const uint64_t lo = next_lo_;
  const uint64_t hi = hi_ - lo < segment_ - 1 ? hi_ : lo + segment_ - 1;
  window_.assign(hi - lo + 1, 1);
  for (uint32_t q : base_primes_) {
    const uint64_t sq = uint64_t{q} * q;
    if (sq > hi) break;
    uint64_t start = std::max(sq, (lo + q - 1) / q * q);
    for (uint64_t m = start; m <= hi; m += q) window_[m - lo] = 0;
  }
  for (uint64_t n = lo; n <= hi; ++n) {
    if (window_[n - lo] && n % 2 == 1) out.push_back(n);
    if (n == hi) break;
  }
  if (hi == hi_) {
    done_ = true;
  } else {
    next_lo_ = hi + 1;
  }
  return true;
}

std::vector<uint64_t> odd_primes_between(uint64_t lo, uint64_t hi) {
  std::vector<uint64_t> all, chunk;
  PrimeSegments segments(lo, hi);
  while (segments.next(chunk)) all.insert(all.end(), chunk.begin(), chunk.end());
  return all;
}

}  // namespace jacobsthal
