#pragma once

#include <cstdint>

namespace sphere {

/// splitmix64 finalizer (Steele, Lea, Flood). Constants are fixed so seeds
/// and trial streams stay reproducible across releases.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of trial `index` in a search keyed by `master`.
constexpr std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ (index * 0xD1B54A32D192ED03ULL + 0x632BE59BD9B4E019ULL));
}

/// Counter-based generator: draw k is a pure function of (seed, k), so any
/// subset of draws can be regenerated independently.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t seed) : key_(splitmix64(seed ^ 0x5851F42D4C957F2DULL)) {}

  constexpr std::uint64_t bits(std::uint64_t counter) const {
    return splitmix64(key_ + counter * 0x9E3779B97F4A7C15ULL);
  }

  /// Uniform on the open interval (0, 1).
  double uniform(std::uint64_t counter) const {
    return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal deviate number `index` (Box-Muller on draws 2k, 2k+1).
  double normal(std::uint64_t index) const;

 private:
  std::uint64_t key_;
};

}  // namespace sphere
