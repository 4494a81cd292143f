// Small shared utilities: deterministic RNG streams and thread-count policy.
//
// Determinism contract: every randomized routine in this library draws from
// mt19937_64 seeded through splitmix64, and maps raw 64-bit draws to doubles
// manually ((u >> 11) * 2^-53).  std::uniform_real_distribution is avoided
// because its output is implementation-defined; results here must be
// bit-identical across standard libraries.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

namespace qaoadla {

/// One step of the splitmix64 generator; also used as a seed mixer.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Independent generator for stream `index` of master seed `seed`.
/// Distinct (seed, index) pairs give decorrelated streams.
inline std::mt19937_64 rng_stream(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1))));
}

/// Uniform double in [0, 1) from raw engine output (portable, unlike
/// std::uniform_real_distribution).
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Effective worker count: explicit request > QAOADLA_THREADS env > 1.
/// All algorithms are bit-deterministic regardless of this value.
inline int thread_count(int requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QAOADLA_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

}  // namespace qaoadla
