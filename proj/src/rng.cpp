#include "qgan/rng.hpp"

namespace qgan {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t fnv1a(std::string_view s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

uint64_t RngStream::bits(uint64_t counter) const {
  return splitmix64(splitmix64(seed ^ splitmix64(stream)) ^ counter);
}

double RngStream::uniform(uint64_t counter) const {
  return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
}

double RngStream::uniform(uint64_t counter, double lo, double hi) const {
  return lo + (hi - lo) * uniform(counter);
}

long RngStream::binomial(uint64_t base_counter, long shots, double p) const {
  long k = 0;
  for (long s = 0; s < shots; ++s)
    if (uniform(base_counter + static_cast<uint64_t>(s)) < p) ++k;
  return k;
}

}  // namespace qgan
