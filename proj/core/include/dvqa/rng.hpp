#pragma once

#include <cmath>
#include <cstdint>

namespace dvqa {

/// Counter-based splittable generator (splitmix64). Unlike the standard
/// library distributions, every draw is bit-identical across platforms,
/// which the run records rely on.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  /// Independent substream for (seed, index), used for per-trajectory and
  /// per-restart streams.
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    return SplitMix64(mixer.next_u64());
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (two uniforms per call, one value kept).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

private:
  std::uint64_t state_;
};

}  // namespace dvqa
