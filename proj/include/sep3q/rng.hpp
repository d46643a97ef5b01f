#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "sep3q/types.hpp"

namespace sep3q {

/// SplitMix64 stream. Small, fast, and fully specified, so identical seeds
/// give identical draws on every platform and thread layout.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// One standard complex normal: independent N(0,1) real and imaginary
  /// parts via a Box-Muller pair.
  Complex next_complex_normal() {
    double u1 = 1.0 - next_uniform();  // (0, 1]; keeps log() finite
    double u2 = next_uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(t), r * std::sin(t)};
  }

  double next_normal() { return next_complex_normal().real(); }

 private:
  std::uint64_t state_;
};

/// Seed for an independent substream. Depends only on (seed, index), which
/// is what makes sample-level parallelism partition-invariant.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0xA0761D6478BD642FULL + index * 0xE7037ED1A0B428DBULL));
  return g.next_u64();
}

}  // namespace sep3q
