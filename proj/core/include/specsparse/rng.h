#pragma once

#include <cstdint>

namespace specsparse {

// SplitMix64 finalizer; used as a counter-based generator so that random
// decisions depend only on (seed, key) and never on iteration order.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t tag) {
  return mix64(parent ^ mix64(tag + 0x632be59bd9b4e019ULL));
}

// Uniform double in [0, 1) from a 64-bit hash (53 significant bits).
constexpr double unit_from_bits(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

constexpr double keyed_uniform(std::uint64_t seed, std::uint64_t key) {
  return unit_from_bits(mix64(derive_seed(seed, key)));
}

}  // namespace specsparse
