#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "radonsvm/numerics.hpp"

namespace radonsvm {

/// SplitMix64 (Steele/Lea/Vigna): one 64-bit word of state, advanced by the
/// golden-ratio increment and passed through a murmur-style finalizer. Chosen
/// because per-index streams are cheap to derive, bit-stable across platforms
/// and thread counts, and easy to document.
///
/// stream(seed, index) mixes the index before xoring it into the seed, so
/// consecutive trial streams never overlap as shifted copies of each other.
/// Gaussians come from Box-Muller on this stream (the sine mate is cached).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed ^ mix(index + 0x9E3779B97F4A7C15ull)));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  /// Uniform in [0, 1), 53 significant bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // (0,1] for the log argument
    double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    double u2 = next_unit();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  /// Uniform draw from the closed ball of the given radius: Gaussian
  /// direction, radius scaled by U^(1/dim).
  Vec next_in_ball(std::size_t dim, double radius) {
    Vec v(dim, 0.0);
    if (radius <= 0.0 || dim == 0) return v;
    double n2 = 0.0;
    for (double& x : v) {
      x = next_gaussian();
      n2 += x * x;
    }
    double n = std::sqrt(n2);
    if (n == 0.0) return Vec(dim, 0.0);
    double r = radius * std::pow(next_unit(), 1.0 / static_cast<double>(dim));
    for (double& x : v) x *= r / n;
    return v;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace radonsvm
