/// @file modular.hpp
/// @brief Prime-field arithmetic and deterministic random streams.

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "wci/integers.hpp"

namespace wci {

/// Vetted primes just below 2^31: products of two residues fit in 64 bits
/// with room for one addition before reduction.
inline constexpr std::array<uint32_t, 3> kPrimes = {2147483647u, 2147483629u, 2147483587u};

inline uint32_t prime_by_index(int index) {
  if (index < 0 || index >= static_cast<int>(kPrimes.size()))
    throw ValidationError("prime index out of range (0..2)");
  return kPrimes[static_cast<size_t>(index)];
}

inline uint32_t mul_mod(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

inline uint32_t pow_mod(uint32_t a, uint64_t e, uint32_t p) {
  uint64_t base = a % p, result = 1;
  while (e) {
    if (e & 1) result = (result * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(result);
}

inline uint32_t inv_mod(uint32_t a, uint32_t p) { return pow_mod(a, p - 2, p); }

/// splitmix64: tiny, fast, and reproducible across platforms.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  /// Uniform nonzero residue mod p (bias ~2^-33, irrelevant here).
  uint32_t nonzero_mod(uint32_t p) { return 1u + static_cast<uint32_t>(next() % (p - 1)); }
};

inline uint64_t fnv1a(const std::string& text, uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

/// Each (family, q, trial) owns an independent stream derived from the seed,
/// so concurrent pieces never share state and runs are reproducible.
inline SplitMix64 piece_stream(uint64_t seed, const std::string& family_key, int q, int trial) {
  uint64_t h = fnv1a(family_key);
  h ^= 0x9e3779b97f4a7c15ull * static_cast<uint64_t>(q + 1);
  h ^= 0xc2b2ae3d27d4eb4full * static_cast<uint64_t>(trial + 1);
  return SplitMix64(seed ^ h);
}

}  // namespace wci
