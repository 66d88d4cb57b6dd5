// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace qsense {

// Counter-seeded splitmix64 stream.  A stream is derived from a root seed
// plus up to two keys (grid index, repetition), so independent tasks draw
// from disjoint, order-independent sequences.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t key1 = 0,
                     std::uint64_t key2 = 0)
      : state_(mix(mix(mix(seed) ^ key1) ^ key2)) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return finalize(state_);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  static std::uint64_t mix(std::uint64_t z) {
    return finalize(z + 0x9e3779b97f4a7c15ull);
  }

  std::uint64_t state_;
};

}  // namespace qsense
