//
// molparse - Copyright (c) 2026 the molparse authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>

namespace molparse {

/// SplitMix64: the documented portable generator for every seeded
/// operation in this project. The algorithm is fixed so that any
/// implementation, in any language, reproduces the streams bit-exactly:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   output = z ^ (z >> 31)
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, n) via rejection sampling (unbiased,
  /// platform-independent). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold)
        return r % n;
    }
  }

  bool coin() { return next() & 1; }

private:
  std::uint64_t state_;
};

/// Mixes one word through the SplitMix64 output permutation; used to
/// derive independent per-record streams.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Stream seed for (master seed, molecule index, task id). Parallel
/// generation stays order-independent because each record owns its
/// stream.
inline SplitMix64 derive_stream(std::uint64_t master, std::uint64_t molecule,
                                std::uint64_t task) {
  return SplitMix64(mix64(master) ^ mix64(molecule * 0x9E3779B97F4A7C15ULL + 1) ^
                    mix64(task * 0xBF58476D1CE4E5B9ULL + 2));
}

} // namespace molparse
