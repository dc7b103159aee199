#pragma once

#include <cstdint>
#include <random>

namespace jamsynth {

/// Seedable generator for uniform, Gaussian, and bounded-integer draws.
/// Identical seed gives an identical draw sequence; the Gaussian path is
/// hand-rolled (Box-Muller) so sequences do not depend on the standard
/// library's distribution internals.
class RngHandle {
 public:
  explicit RngHandle(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// N(0, sigma^2) draw; sigma = 0 returns 0 exactly.
  double gaussian(double sigma);

  /// Uniform integer in [0, n), unbiased (rejection sampling).
  std::uint64_t bounded(std::uint64_t n);

 private:
  std::mt19937_64 gen_;
};

}  // namespace jamsynth
