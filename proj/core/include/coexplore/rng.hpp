#pragma once

#include <cstdint>
#include <random>

namespace coexplore {

// All randomness in the library flows through one engine type so that a run
// is fully determined by its seed.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Decorrelates sub-streams (start placement, overflow draws, ...) derived
// from one base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base ^ splitmix64(stream));
}

// Unbiased draw in [0, n). Rejection sampling keeps the result identical
// across standard library implementations.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % n;
}

inline int uniform_int(Rng& rng, int lo, int hi) {  // inclusive range
  return lo + static_cast<int>(uniform_below(
                  rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace coexplore
