#pragma once

#include <cstdint>
#include <string_view>

namespace qgan {

uint64_t splitmix64(uint64_t x);
uint64_t fnv1a(std::string_view s);

/// Counter-based random stream: every draw is a pure function of
/// (seed, stream, counter), so adding a consumer never perturbs another
/// stream and parallel evaluation order cannot change results.
struct RngStream {
  uint64_t seed = 0;
  uint64_t stream = 0;

  RngStream(uint64_t seed, std::string_view purpose)
      : seed(seed), stream(fnv1a(purpose)) {}
  RngStream(uint64_t seed, uint64_t stream) : seed(seed), stream(stream) {}

  uint64_t bits(uint64_t counter) const;
  double uniform(uint64_t counter) const;  // [0, 1)
  double uniform(uint64_t counter, double lo, double hi) const;

  /// Samples Binomial(shots, p) deterministically from this stream; counters
  /// [base, base+shots) are consumed.
  long binomial(uint64_t base_counter, long shots, double p) const;
};

}  // namespace qgan
