#pragma once

#include <cstdint>

namespace eszlab {

/**
 * Deterministic 64-bit generator (splitmix-style), reproducible across
 * platforms and implementations:
 *   state += 0x9E3779B97F4A7C15
 *   t = state
 *   t = (t ^ (t >> 30)) * 0xBF58476D1CE4E5B9
 *   t = (t ^ (t >> 27)) * 0x94D049BB133111EB
 *   output = t ^ (t >> 31)
 * Bounded draws use plain modulo reduction; set sampling draws without
 * replacement by rejection.
 */
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t t = state;
    t = (t ^ (t >> 30)) * 0xBF58476D1CE4E5B9ULL;
    t = (t ^ (t >> 27)) * 0x94D049BB133111EBULL;
    return t ^ (t >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  long in_range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

}  // namespace eszlab
