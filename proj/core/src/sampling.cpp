#include "srk/sampling.hpp"

#include <cmath>
#include <numbers>

namespace srk {

namespace {

// Uniform direction on the 3-sphere from three uniforms in [0, 1).
Quaternion sphere_direction(double u1, double u2, double u3) {
  const double r1 = std::sqrt(1.0 - u1);
  const double r2 = std::sqrt(u1);
  const double t1 = 2.0 * std::numbers::pi * u2;
  const double t2 = 2.0 * std::numbers::pi * u3;
  return {r1 * std::sin(t1), r1 * std::cos(t1), r2 * std::sin(t2),
          r2 * std::cos(t2)};
}

}  // namespace

Quaternion Rng::unit_quaternion() {
  const double u1 = uniform();
  const double u2 = uniform();
  const double u3 = uniform();
  return sphere_direction(u1, u2, u3);
}

Quaternion Rng::ball(double radius) {
  const Quaternion direction = unit_quaternion();
  return direction * (radius * std::cbrt(uniform()));
}

Quaternion Rng::ball(double radius, double min_imag) {
  for (;;) {
    const Quaternion q = ball(radius);
    if (imag_norm(q) >= min_imag) return q;
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined state
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

double van_der_corput(std::uint64_t n, std::uint64_t base) {
  double result = 0.0;
  double digit = 1.0 / static_cast<double>(base);
  while (n > 0) {
    result += digit * static_cast<double>(n % base);
    n /= base;
    digit /= static_cast<double>(base);
  }
  return result;
}

Quaternion HaltonSweep::next_unit() {
  const std::uint64_t n = index_++;
  return sphere_direction(van_der_corput(n, 2), van_der_corput(n, 3),
                          van_der_corput(n, 5));
}

Quaternion HaltonSweep::next_ball(double radius) {
  const std::uint64_t n = index_;
  const Quaternion direction = next_unit();
  return direction * (radius * std::cbrt(van_der_corput(n, 7)));
}

}  // namespace srk
