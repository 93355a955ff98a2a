#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "hardycomp/types.hpp"

namespace hardycomp {

/// Seeded generator with explicit double/complex draws, so streams do not
/// depend on standard-library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Independent stream for a numbered sub-task (trial, worker).
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
  }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on the closed unit disk.
  Complex unit_disk() {
    const double r = std::sqrt(uniform());
    const double t = kTwoPi * uniform();
    return {r * std::cos(t), r * std::sin(t)};
  }

  /// Standard complex Gaussian (E|z|^2 = 1, rotation invariant).
  Complex gaussian() {
    const double u = uniform();
    const double amp = std::sqrt(-std::log1p(-u));
    const double t = kTwoPi * uniform();
    return {amp * std::cos(t), amp * std::sin(t)};
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace hardycomp
