#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srk/mobius.hpp"
#include "srk/sampling.hpp"

namespace srk {

enum class SelfMapKind { mobius, blaschke_product, bounded_series };

std::string to_string(SelfMapKind kind);

/// A slice regular self-map of the open unit ball together with the
/// certificate that makes it one.
struct SelfMap {
  SelfMapKind kind = SelfMapKind::bounded_series;
  /// Canonical left quotient with real central denominator.
  RegularQuotient map = RegularQuotient::from_series(StarSeries());
  /// Moebius factors for the mobius and blaschke_product kinds.
  std::vector<RegularMobius> factors;
  /// Trailing unit constant multiplying the factors on the right.
  Quaternion unit = Quaternion::one();
  /// Defining series for the bounded_series kind.
  StarSeries series;
  /// Certified upper bound for |f| on the ball: 1 for Moebius and
  /// Blaschke maps, the coefficient norm sum for bounded series.
  double sup_bound = 0.0;
};

SelfMap self_map_from_mobius(const RegularMobius& M);
SelfMap self_map_from_blaschke(const std::vector<RegularMobius>& factors,
                               const Quaternion& unit);
/// Requires a coefficient norm sum at most 1; throws PreconditionFailed
/// otherwise, since the sum certifies |f| < 1 on the open ball.
SelfMap self_map_from_series(const StarSeries& f);

Quaternion eval_self_map(const SelfMap& f, const Quaternion& q);

enum class BoundClass { equality, strict, indeterminate, violation };

std::string to_string(BoundClass c);

struct SPTolerances {
  double equality = tol::kEquality;
  double strict_margin = tol::kStrictMargin;
  double violation = tol::kViolation;
  /// Global multiplier applied to the three thresholds.
  double scale = 1.0;
};

BoundClass classify(double residual, const SPTolerances& t);

/// One verified instance of an inequality: lhs <= rhs with
/// residual = rhs - lhs.
struct SPRecord {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  Quaternion q;
  Quaternion q0;
  BoundClass classification = BoundClass::indeterminate;
};

/// The Moebius shift of f by its value c = f(q0):
/// (f - c) * (1 - conj(c) * f)^{-*}, again a self-map, vanishing at q0.
RegularQuotient pick_shift(const SelfMap& f, const Quaternion& q0);

/// |pick_shift(q)| <= |Moebius with center q0 at q|.
SPRecord sp_main(const SelfMap& f, const Quaternion& q0, const Quaternion& q,
                 const SPTolerances& t = {});

/// |difference quotient of f at q0, shifted| <= |(1 - q conj(q0))^{-*}|
/// pointwise.
SPRecord sp_R(const SelfMap& f, const Quaternion& q0, const Quaternion& q,
              const SPTolerances& t = {});

/// |slice derivative of f, shifted| at q0 <= 1 / (1 - |q0|^2).
SPRecord sp_cullen(const SelfMap& f, const Quaternion& q0,
                   const SPTolerances& t = {});

/// |spherical derivative of f at q0| / |1 - f^s(q0)| <= 1 / |1 - conj(q0)^2|.
/// Throws DegenerateSymmetrization when f^s(q0) is numerically 1 and
/// RealPoint for real q0.
SPRecord sp_spherical(const SelfMap& f, const Quaternion& q0,
                      const SPTolerances& t = {});

/// Bounds under vanishing slice derivatives of order 1..n-1 at q0:
/// the shifted map against the n-th *-power of the Moebius map at q, and
/// the n-th derivative bound n! / (1 - |q0|^2)^n at q0. Returns the two
/// records; throws PreconditionFailed when the derivatives do not vanish.
std::vector<SPRecord> sp_higher_cullen(const SelfMap& f, const Quaternion& q0,
                                       int n, const Quaternion& q,
                                       const SPTolerances& t = {});

/// Bounds under vanishing spherical expansion coefficients A_1..A_(2n-1)
/// at q0 (and also A_2n when with_odd is set): the shifted map against
/// the n-th power of the symmetrized Moebius map, and the iterated
/// difference quotient against |(1 - 2 x0 q + |q0|^2 q^2)|^{-n}. The odd
/// variant multiplies both bounds by the corresponding Moebius factor.
std::vector<SPRecord> sp_higher_spherical(const SelfMap& f,
                                          const Quaternion& q0, int n,
                                          const Quaternion& q, bool with_odd,
                                          const SPTolerances& t = {});

/// Per-condition outcome of the fixed-point rigidity probe.
struct RigidityReport {
  bool fixed_point = false;
  bool differential_identity = false;
  bool cullen_one = false;
  bool spherical_applicable = false;
  bool spherical_one = false;
  bool quotient_identity = false;
  bool identity = false;  ///< the consensus verdict
};

/// Checks the equivalent characterizations of the identity among
/// self-maps fixing q0. Throws PreconditionFailed when q0 is not fixed
/// and InconsistentConditions when the applicable conditions disagree.
RigidityReport check_rigidity(const SelfMap& f, const Quaternion& q0);

struct SampleParams {
  double mobius_center_radius = 0.8;
  int blaschke_factors = 2;
  double blaschke_center_radius = 0.7;
  int series_degree = 8;
  double series_norm_cap = 0.9;
};

/// Deterministic generator of certified self-maps.
SelfMap sample_self_map(SelfMapKind kind, std::uint64_t seed,
                        const SampleParams& p = {});

struct MaxModulusProbe {
  std::vector<double> radii;
  std::vector<double> maxima;
  bool nondecreasing = false;
};

/// Sampled maximum of |f| on spheres of increasing radius; for a regular
/// map the sequence must not decrease.
MaxModulusProbe max_modulus_probe(const RegularQuotient& f,
                                  const std::vector<double>& radii,
                                  int samples_per_radius, std::uint64_t seed);

struct HarnessConfig {
  std::string family = "mobius";  ///< mobius | blaschke | bounded | mixed
  int count = 100;                ///< sampled maps
  std::uint64_t seed = 1;
  double radius = 0.95;    ///< sampling radius for q and q0
  double min_imag = 0.05;  ///< imaginary floor for q0
  SampleParams params;
  SPTolerances tolerances;
  int threads = 0;  ///< 0 picks the hardware count
};

struct HarnessSummary {
  double min_residual = 0.0;
  std::int64_t equality_count = 0;
  std::int64_t strict_count = 0;
  std::int64_t indeterminate_count = 0;
  std::int64_t violation_count = 0;
  std::int64_t record_count = 0;
};

struct HarnessResult {
  HarnessConfig config;
  std::vector<SPRecord> records;
  HarnessSummary summary;
};

/// Runs the four pointwise bounds on `count` sampled maps with one
/// (q0, q) pair each. Workers split the index range; the record order
/// and content depend only on the configuration, not the thread count.
HarnessResult run_harness(const HarnessConfig& config);

}  // namespace srk
