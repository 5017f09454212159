#pragma once

#include <cstdint>
#include <random>

#include "srk/quaternion.hpp"

namespace srk {

/// Deterministic uniform sampler. Doubles are built from the top 53 bits
/// of a mersenne twister stream, so sequences are identical across
/// platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform on the unit sphere of quaternions.
  Quaternion unit_quaternion();

  /// Random point with |q| <= radius, denser toward the boundary.
  Quaternion ball(double radius);

  /// Same, but resamples until the imaginary part has norm at least
  /// min_imag, so slice decompositions stay well conditioned.
  Quaternion ball(double radius, double min_imag);

 private:
  std::mt19937_64 engine_;
};

/// Splits a stream seed into independent per-case seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Radical-inverse of n in the given base, in [0, 1).
double van_der_corput(std::uint64_t n, std::uint64_t base);

/// Low-discrepancy sweep of the unit sphere and ball built from
/// van der Corput sequences in bases 2, 3, 5, 7.
class HaltonSweep {
 public:
  explicit HaltonSweep(std::uint64_t start_index = 1) : index_(start_index) {}
  Quaternion next_unit();
  Quaternion next_ball(double radius);

 private:
  std::uint64_t index_;
};

}  // namespace srk
