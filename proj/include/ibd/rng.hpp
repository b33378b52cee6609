#pragma once

#include <cstdint>

namespace ibd {

/**
 * SplitMix64 generator (Steele, Lea, Flood 2014).
 *
 * Used for weight initialization and for seeded sampling instead of
 * std::mt19937_64 + std::discrete_distribution: the distribution adaptors in
 * the standard library are implementation-defined, and both the model builder
 * and the sampling path must be reproducible bit-for-bit across toolchains
 * (and mirrorable from the reference scripts that regenerate the golden
 * fixtures).
 *
 * uniform() maps the top 53 bits to [0, 1):  (next() >> 11) * 2^-53.
 */
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [-scale, scale):  scale * (2u - 1).
  double uniform_symmetric(double scale) { return scale * (2.0 * uniform() - 1.0); }

private:
  std::uint64_t state_;
};

}  // namespace ibd
