#include "srk/schwarz_pick.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

namespace srk {

std::string to_string(SelfMapKind kind) {
  switch (kind) {
    case SelfMapKind::mobius:
      return "mobius";
    case SelfMapKind::blaschke_product:
      return "blaschke-product";
    case SelfMapKind::bounded_series:
      return "bounded-series";
  }
  return "unknown";
}

std::string to_string(BoundClass c) {
  switch (c) {
    case BoundClass::equality:
      return "equality";
    case BoundClass::strict:
      return "strict";
    case BoundClass::indeterminate:
      return "indeterminate";
    case BoundClass::violation:
      return "violation";
  }
  return "unknown";
}

SelfMap self_map_from_mobius(const RegularMobius& M) {
  SelfMap f;
  f.kind = SelfMapKind::mobius;
  f.map = canonical(mobius_quotient(M));
  f.factors = {M};
  f.unit = Quaternion::one();
  f.sup_bound = 1.0;
  return f;
}

SelfMap self_map_from_blaschke(const std::vector<RegularMobius>& factors,
                               const Quaternion& unit) {
  SelfMap f;
  f.kind = SelfMapKind::blaschke_product;
  RegularQuotient acc =
      RegularQuotient::from_series(StarSeries::constant(Quaternion::one()));
  for (const RegularMobius& M : factors) {
    acc = star_mul(acc, mobius_quotient(M));
  }
  f.map = const_mul_right(acc, srk::unit(unit));
  f.factors = factors;
  f.unit = srk::unit(unit);
  f.sup_bound = 1.0;
  return f;
}

SelfMap self_map_from_series(const StarSeries& series) {
  const double bound = series.coeff_norm_sum();
  if (bound > 1.0) {
    throw PreconditionFailed(
        "coefficient norm sum " + format_real(bound) +
        " exceeds 1, so the series is not certified to map the ball into "
        "itself");
  }
  SelfMap f;
  f.kind = SelfMapKind::bounded_series;
  f.map = RegularQuotient::from_series(series);
  f.series = series;
  f.sup_bound = bound;
  return f;
}

Quaternion eval_self_map(const SelfMap& f, const Quaternion& q) {
  return eval_quotient(f.map, q);
}

BoundClass classify(double residual, const SPTolerances& t) {
  if (residual < -t.violation * t.scale) return BoundClass::violation;
  if (std::abs(residual) <= t.equality * t.scale) return BoundClass::equality;
  if (residual > t.strict_margin * t.scale) return BoundClass::strict;
  return BoundClass::indeterminate;
}

namespace {

// Canonical ingredients of the Moebius shift at q0. With the map in the
// form denom_symm^{-1} numer =: S^{-1} P and c = f(q0), the shifted map
// is (P - S c) * (S - conj(c) P)^{-*}; the central S cancels.
struct ShiftParts {
  RegularQuotient canon;
  Quaternion c;
  StarSeries D;  ///< S - conj(c) * P
  StarSeries N;  ///< P - S * c
};

ShiftParts shift_parts(const SelfMap& f, const Quaternion& q0) {
  RegularQuotient canon = canonical(f.map);
  const Quaternion c = eval_quotient(canon, q0);
  const StarSeries& S = canon.denom();
  const StarSeries& P = canon.numer();
  StarSeries D = S - scale_left(conj(c), P);
  StarSeries N = P - scale_right(S, c);
  return {std::move(canon), c, std::move(D), std::move(N)};
}

SPRecord make_record(std::string name, double lhs, double rhs,
                     const Quaternion& q, const Quaternion& q0,
                     const SPTolerances& t) {
  SPRecord r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = rhs - lhs;
  r.q = q;
  r.q0 = q0;
  r.classification = classify(r.residual, t);
  return r;
}

// (1 - q conj(q0)), the denominator of the Moebius map at q0.
StarSeries mobius_denominator(const Quaternion& q0) {
  return StarSeries({Quaternion::one(), -conj(q0)});
}

}  // namespace

RegularQuotient pick_shift(const SelfMap& f, const Quaternion& q0) {
  ShiftParts parts = shift_parts(f, q0);
  return canonical(
      RegularQuotient(QuotientSide::right, parts.D, parts.N));
}

SPRecord sp_main(const SelfMap& f, const Quaternion& q0, const Quaternion& q,
                 const SPTolerances& t) {
  ShiftParts parts = shift_parts(f, q0);
  const RegularQuotient shifted(QuotientSide::right, parts.D, parts.N);
  const double lhs = norm(eval_quotient(shifted, q));
  const double rhs =
      norm(eval_regular_mobius({q0, Quaternion::one()}, q));
  return make_record("main", lhs, rhs, q, q0, t);
}

SPRecord sp_R(const SelfMap& f, const Quaternion& q0, const Quaternion& q,
              const SPTolerances& t) {
  ShiftParts parts = shift_parts(f, q0);
  const StarSeries quotient_numer = divide_linear(parts.N, q0);
  const RegularQuotient shifted(QuotientSide::right, parts.D, quotient_numer);
  const double lhs = norm(eval_quotient(shifted, q));
  const double rhs =
      norm(eval_quotient(reciprocal(mobius_denominator(q0)), q));
  return make_record("R", lhs, rhs, q, q0, t);
}

SPRecord sp_cullen(const SelfMap& f, const Quaternion& q0,
                   const SPTolerances& t) {
  ShiftParts parts = shift_parts(f, q0);
  const RegularQuotient derivative = cullen_derivative(parts.canon);
  const RegularQuotient reciprocal_factor(QuotientSide::left, parts.D,
                                          parts.canon.denom());
  // Product evaluation identity: the left factor value moves the point
  // seen by the right factor, and a vanishing left factor kills the
  // product. This keeps the evaluation on the two shallow quotients
  // instead of their high-degree combined form.
  const Quaternion v = eval_quotient(derivative, q0);
  Quaternion value = Quaternion::zero();
  if (norm(v) > tol::kZeroInversion) {
    const Quaternion moved = qinv(v) * q0 * v;
    value = v * eval_quotient(reciprocal_factor, moved);
  }
  const double lhs = norm(value);
  const double rhs = 1.0 / (1.0 - norm_sq(q0));
  return make_record("cullen", lhs, rhs, q0, q0, t);
}

SPRecord sp_spherical(const SelfMap& f, const Quaternion& q0,
                      const SPTolerances& t) {
  const SphericalPair sp = spherical_pair(f.map, q0);
  const Quaternion gap = Quaternion::one() - eval_symmetrization(f.map, q0);
  if (norm(gap) <= 1e-12) {
    throw DegenerateSymmetrization(
        "symmetrized value at the base point is numerically 1");
  }
  const double lhs = norm(sp.derivative) / norm(gap);
  const double rhs = 1.0 / norm(Quaternion::one() - conj(q0) * conj(q0));
  return make_record("spherical", lhs, rhs, q0, q0, t);
}

namespace {

// Values (R^m f)(q0) for m = 1..order and the final iterate, staying on
// the shared central denominator.
struct DiffIteration {
  std::vector<Quaternion> values;
  RegularQuotient last;
};

DiffIteration iterate_diff_quotient(const RegularQuotient& start,
                                    const Quaternion& q0, int order) {
  DiffIteration out{{}, start};
  for (int m = 1; m <= order; ++m) {
    out.last = diff_quotient(out.last, q0);
    out.values.push_back(eval_quotient(out.last, q0));
  }
  return out;
}

}  // namespace

std::vector<SPRecord> sp_higher_cullen(const SelfMap& f, const Quaternion& q0,
                                       int n, const Quaternion& q,
                                       const SPTolerances& t) {
  if (n < 1) {
    throw OutOfDomain("derivative order must be at least 1");
  }
  ShiftParts parts = shift_parts(f, q0);
  const DiffIteration iter = iterate_diff_quotient(parts.canon, q0, n);
  double factorial = 1.0;
  for (int m = 1; m < n; ++m) {
    factorial *= m;
    const double size = factorial * norm(iter.values[static_cast<size_t>(m) - 1]);
    if (size > 1e-9 * t.scale) {
      throw PreconditionFailed("slice derivative of order " +
                               std::to_string(m) + " has norm " +
                               format_real(size) + " at the base point");
    }
  }
  factorial *= n;

  const RegularMobius M{q0, Quaternion::one()};
  RegularQuotient mobius_power =
      RegularQuotient::from_series(StarSeries::constant(Quaternion::one()));
  for (int m = 0; m < n; ++m) {
    mobius_power = star_mul(mobius_power, mobius_quotient(M));
  }

  std::vector<SPRecord> records;
  {
    const RegularQuotient shifted(QuotientSide::right, parts.D, parts.N);
    const double lhs = norm(eval_quotient(shifted, q));
    const double rhs = norm(eval_quotient(mobius_power, q));
    records.push_back(make_record("higher-cullen-" + std::to_string(n), lhs,
                                  rhs, q, q0, t));
  }
  {
    const RegularQuotient product(QuotientSide::right, parts.D,
                                  iter.last.numer());
    const double lhs = factorial * norm(eval_quotient(product, q0));
    const double rhs =
        factorial / std::pow(1.0 - norm_sq(q0), static_cast<double>(n));
    records.push_back(make_record("higher-cullen-deriv-" + std::to_string(n),
                                  lhs, rhs, q0, q0, t));
  }
  return records;
}

std::vector<SPRecord> sp_higher_spherical(const SelfMap& f,
                                          const Quaternion& q0, int n,
                                          const Quaternion& q, bool with_odd,
                                          const SPTolerances& t) {
  if (n < 1) {
    throw OutOfDomain("expansion order must be at least 1");
  }
  const SliceCoordinates coords = slice_decompose(q0);
  ShiftParts parts = shift_parts(f, q0);

  std::vector<Quaternion> A;
  RegularQuotient g = parts.canon;
  for (int m = 0; m < n; ++m) {
    A.push_back(eval_quotient(g, q0));
    const RegularQuotient h = diff_quotient(g, q0);
    A.push_back(eval_quotient(h, conj(q0)));
    g = diff_quotient(h, conj(q0));
  }
  A.push_back(eval_quotient(g, q0));

  const size_t checked = with_odd ? A.size() - 1 : A.size() - 2;
  for (size_t m = 1; m <= checked; ++m) {
    if (norm(A[m]) > 1e-9 * t.scale) {
      throw PreconditionFailed("spherical expansion coefficient " +
                               std::to_string(m) + " has norm " +
                               format_real(norm(A[m])) + " at the base sphere");
    }
  }

  const RegularMobius M{q0, Quaternion::one()};
  const std::string suffix =
      (with_odd ? std::string("-odd-") : std::string("-")) + std::to_string(n);

  std::vector<SPRecord> records;
  {
    const RegularQuotient shifted(QuotientSide::right, parts.D, parts.N);
    const double lhs = norm(eval_quotient(shifted, q));
    const Quaternion symmetrized =
        eval_quotient(quotient_symmetrize(mobius_quotient(M)), q);
    double rhs = std::pow(norm(symmetrized), static_cast<double>(n));
    if (with_odd) {
      rhs *= norm(eval_regular_mobius(M, q));
    }
    records.push_back(
        make_record("higher-spherical" + suffix, lhs, rhs, q, q0, t));
  }
  {
    const RegularQuotient product(QuotientSide::right, parts.D, g.numer());
    const double lhs = norm(eval_quotient(product, q));
    const StarSeries E({Quaternion::one(), Quaternion(-2.0 * coords.x0),
                        Quaternion(norm_sq(q0))});
    double rhs = 1.0 / std::pow(norm(eval(E, q)), static_cast<double>(n));
    if (with_odd) {
      rhs *= norm(eval_quotient(reciprocal(mobius_denominator(q0)), q));
    }
    records.push_back(
        make_record("higher-spherical-deriv" + suffix, lhs, rhs, q, q0, t));
  }
  return records;
}

RigidityReport check_rigidity(const SelfMap& f, const Quaternion& q0) {
  const Quaternion value = eval_self_map(f, q0);
  RigidityReport report;
  report.fixed_point = norm(value - q0) <= tol::kFixedPoint;
  if (!report.fixed_point) {
    throw PreconditionFailed("q0 is not a fixed point: |f(q0) - q0| = " +
                             format_real(norm(value - q0)));
  }

  constexpr double kTrue = 1e-6;
  constexpr double kFalse = 1e-5;
  std::vector<double> metrics;

  const auto evaluate = [&f](const Quaternion& p) {
    return eval_self_map(f, p);
  };
  const std::array<Quaternion, 4> axes = {
      Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()};
  const std::array<Quaternion, 4> diffs = numeric_differential(evaluate, q0);
  double diff_metric = 0.0;
  for (size_t k = 0; k < axes.size(); ++k) {
    diff_metric = std::max(diff_metric, norm(diffs[k] - axes[k]));
  }
  report.differential_identity = diff_metric <= kTrue;
  metrics.push_back(diff_metric);

  const RegularQuotient canon = canonical(f.map);
  const Quaternion dc = eval_quotient(diff_quotient(canon, q0), q0);
  const double cullen_metric = norm(dc - Quaternion::one());
  report.cullen_one = cullen_metric <= kTrue;
  metrics.push_back(cullen_metric);

  report.spherical_applicable = imag_norm(q0) > tol::kRealPoint;
  if (report.spherical_applicable) {
    const SphericalPair sp = spherical_pair(f.map, q0);
    const double spherical_metric = norm(sp.derivative - Quaternion::one());
    report.spherical_one = spherical_metric <= kTrue;
    metrics.push_back(spherical_metric);
  }

  // Difference quotient against (1 - q conj(q0))^{-*} * (1 - conj(q0) f),
  // and the map against the identity, at a deterministic probe set.
  const RegularQuotient lhs_quotient = diff_quotient(canon, q0);
  const RegularQuotient rhs_quotient = star_mul(
      reciprocal(mobius_denominator(q0)),
      add_const(const_mul_left(-conj(q0), canon), Quaternion::one()));
  HaltonSweep sweep(7);
  double quotient_metric = 0.0;
  double probe_metric = 0.0;
  for (int k = 0; k < 6; ++k) {
    const Quaternion p = sweep.next_ball(0.7);
    quotient_metric =
        std::max(quotient_metric, norm(eval_quotient(lhs_quotient, p) -
                                       eval_quotient(rhs_quotient, p)));
    probe_metric = std::max(probe_metric, norm(eval_self_map(f, p) - p));
  }
  report.quotient_identity = quotient_metric <= kTrue;
  metrics.push_back(quotient_metric);
  metrics.push_back(probe_metric);

  bool any_true = false;
  bool any_false = false;
  for (double m : metrics) {
    if (m <= kTrue) any_true = true;
    if (m >= kFalse) any_false = true;
  }
  if (any_true && any_false) {
    throw InconsistentConditions(
        "identity characterizations disagree at the fixed point");
  }
  report.identity = any_true;
  return report;
}

SelfMap sample_self_map(SelfMapKind kind, std::uint64_t seed,
                        const SampleParams& p) {
  Rng rng(seed);
  switch (kind) {
    case SelfMapKind::mobius: {
      const Quaternion q0 = rng.ball(p.mobius_center_radius);
      const Quaternion u = rng.unit_quaternion();
      return self_map_from_mobius(make_regular_mobius(q0, u));
    }
    case SelfMapKind::blaschke_product: {
      std::vector<RegularMobius> factors;
      for (int k = 0; k < p.blaschke_factors; ++k) {
        factors.push_back(make_regular_mobius(
            rng.ball(p.blaschke_center_radius), Quaternion::one()));
      }
      return self_map_from_blaschke(factors, rng.unit_quaternion());
    }
    case SelfMapKind::bounded_series: {
      const int degree =
          2 + static_cast<int>(rng.next_u64() %
                               static_cast<std::uint64_t>(
                                   std::max(1, p.series_degree - 1)));
      std::vector<Quaternion> coeffs(static_cast<size_t>(degree) + 1);
      double total = 0.0;
      for (size_t k = 0; k < coeffs.size(); ++k) {
        const double weight =
            k + 1 == coeffs.size() ? rng.uniform(0.2, 1.0) : rng.uniform();
        coeffs[k] = rng.unit_quaternion() * weight;
        total += weight;
      }
      const double target = rng.uniform(0.3, p.series_norm_cap);
      for (Quaternion& c : coeffs) c *= target / total;
      return self_map_from_series(StarSeries(std::move(coeffs)));
    }
  }
  throw OutOfDomain("unknown self-map kind");
}

MaxModulusProbe max_modulus_probe(const RegularQuotient& f,
                                  const std::vector<double>& radii,
                                  int samples_per_radius, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Quaternion> directions;
  directions.reserve(static_cast<size_t>(samples_per_radius));
  for (int k = 0; k < samples_per_radius; ++k) {
    directions.push_back(rng.unit_quaternion());
  }
  MaxModulusProbe probe;
  probe.radii = radii;
  for (double r : radii) {
    double maximum = 0.0;
    for (const Quaternion& d : directions) {
      maximum = std::max(maximum, norm(eval_quotient(f, d * r)));
    }
    probe.maxima.push_back(maximum);
  }
  probe.nondecreasing = true;
  for (size_t k = 1; k < probe.maxima.size(); ++k) {
    if (probe.maxima[k] + 1e-9 * (1.0 + probe.maxima[k - 1]) <
        probe.maxima[k - 1]) {
      probe.nondecreasing = false;
    }
  }
  return probe;
}

namespace {

SelfMapKind kind_for_case(const std::string& family, int index) {
  if (family == "mobius") return SelfMapKind::mobius;
  if (family == "blaschke") return SelfMapKind::blaschke_product;
  if (family == "bounded") return SelfMapKind::bounded_series;
  if (family == "mixed") {
    switch (index % 3) {
      case 0:
        return SelfMapKind::mobius;
      case 1:
        return SelfMapKind::blaschke_product;
      default:
        return SelfMapKind::bounded_series;
    }
  }
  throw ParseError("unknown self-map family \"" + family + "\"");
}

}  // namespace

HarnessResult run_harness(const HarnessConfig& config) {
  constexpr int kRecordsPerCase = 4;
  HarnessResult result;
  result.config = config;
  result.records.resize(static_cast<size_t>(config.count) * kRecordsPerCase);

  unsigned thread_count =
      config.threads > 0 ? static_cast<unsigned>(config.threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  thread_count = std::min<unsigned>(
      thread_count, static_cast<unsigned>(std::max(1, config.count)));

  const auto worker = [&](unsigned offset, std::exception_ptr& failure) {
    try {
      for (int i = static_cast<int>(offset); i < config.count;
           i += static_cast<int>(thread_count)) {
        const SelfMapKind kind = kind_for_case(config.family, i);
        const SelfMap f =
            sample_self_map(kind, mix_seed(config.seed, 2 * i), config.params);
        Rng points(mix_seed(config.seed, 2 * i + 1));
        const Quaternion q0 = points.ball(config.radius, config.min_imag);
        const Quaternion q = points.ball(config.radius);
        const size_t base = static_cast<size_t>(i) * kRecordsPerCase;
        result.records[base + 0] = sp_main(f, q0, q, config.tolerances);
        result.records[base + 1] = sp_R(f, q0, q, config.tolerances);
        result.records[base + 2] = sp_cullen(f, q0, config.tolerances);
        result.records[base + 3] = sp_spherical(f, q0, config.tolerances);
      }
    } catch (...) {
      failure = std::current_exception();
    }
  };

  kind_for_case(config.family, 0);  // validate before spawning workers

  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> failures(thread_count);
  for (unsigned t = 1; t < thread_count; ++t) {
    threads.emplace_back(worker, t, std::ref(failures[t]));
  }
  worker(0, failures[0]);
  for (std::thread& t : threads) t.join();
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  HarnessSummary& summary = result.summary;
  summary.record_count = static_cast<std::int64_t>(result.records.size());
  summary.min_residual = std::numeric_limits<double>::infinity();
  for (const SPRecord& r : result.records) {
    summary.min_residual = std::min(summary.min_residual, r.residual);
    switch (r.classification) {
      case BoundClass::equality:
        ++summary.equality_count;
        break;
      case BoundClass::strict:
        ++summary.strict_count;
        break;
      case BoundClass::indeterminate:
        ++summary.indeterminate_count;
        break;
      case BoundClass::violation:
        ++summary.violation_count;
        break;
    }
  }
  if (result.records.empty()) summary.min_residual = 0.0;
  return result;
}

}  // namespace srk
