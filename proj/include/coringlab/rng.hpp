#pragma once

#include <cstdint>
#include <random>

namespace coringlab {

/// splitmix64 step. Used to derive independent per-trial seeds from a master
/// seed; the constants are the reference ones, so streams are reproducible
/// across platforms.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// All randomized routines draw from mt19937_64 seeded directly with the
/// caller's seed. The engine's output sequence is fixed by the standard, and
/// every reduction to a scalar is written out by hand, so identical seeds give
/// bit-identical runs everywhere. std::uniform_int_distribution is avoided on
/// purpose: its mapping is implementation-defined.
inline std::mt19937_64 makeEngine(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Uniform draw from [0, n) by raw modulo reduction. The tiny bias is
/// irrelevant for search purposes and buys exact reproducibility.
inline std::uint64_t drawBelow(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace coringlab
