#pragma once

#include <cstdint>
#include <random>

namespace qmod {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; mixes (seed, stream, attempt) into an engine seed so
/// that independent checks and retries draw from unrelated streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t attempt = 0) {
  std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + stream * 0xbf58476d1ce4e5b9ULL +
                    attempt * 0x94d049bb133111ebULL + 0x2545f4914f6cdd1dULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t attempt = 0) {
  return Rng(derive_seed(seed, stream, attempt));
}

}  // namespace qmod
