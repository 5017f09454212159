#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <srk/regular_quotient.hpp>
#include <srk/sampling.hpp>

#include "generators.hpp"

using namespace srk;

namespace {

// Denominator with all zero spheres outside the closed unit ball, so the
// quotient can be evaluated anywhere in the ball.
StarSeries safe_denominator(Rng& rng, int factors) {
  StarSeries denom = StarSeries::constant(Quaternion::one());
  for (int n = 0; n < factors; ++n) {
    const Quaternion center = rng.ball(0.7);
    // 1 - q * conj(center) vanishes at center / |center|^2, outside the ball.
    denom = star_mul(denom,
                     StarSeries({Quaternion::one(), -conj(center)}));
  }
  return denom;
}

}  // namespace

TEST_CASE("both evaluation routes agree on both sides") {
  Rng rng(401);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const StarSeries denom = safe_denominator(rng, 1 + (trial % 3));
    const StarSeries numer = testing::random_series(rng, 5);
    const Quaternion q = rng.ball(0.9);
    for (QuotientSide side : {QuotientSide::left, QuotientSide::right}) {
      const RegularQuotient Q(side, denom, numer);
      const Quaternion direct = eval_quotient(Q, q);
      const Quaternion via_transform = eval_via_transform(Q, q);
      CHECK(norm(direct - via_transform) <= 1e-10 * (1.0 + norm(direct)));
      ++checked;
    }
  }
  CHECK(checked >= 200);
}

TEST_CASE("the quotient really inverts the star product") {
  Rng rng(402);
  for (int trial = 0; trial < 60; ++trial) {
    const StarSeries f = safe_denominator(rng, 2);
    const StarSeries g = testing::random_series(rng, 4);
    const Quaternion q = rng.ball(0.85);

    // f * (f^{-*} * g) = g.
    const RegularQuotient left(QuotientSide::left, f, g);
    const RegularQuotient product =
        star_mul(RegularQuotient::from_series(f), left);
    const Quaternion expected = eval(g, q);
    CHECK(norm(eval_quotient(product, q) - expected) <=
          1e-9 * (1.0 + norm(expected)));

    // (g * f^{-*}) * f = g.
    const RegularQuotient right(QuotientSide::right, f, g);
    const RegularQuotient product2 =
        star_mul(right, RegularQuotient::from_series(f));
    CHECK(norm(eval_quotient(product2, q) - expected) <=
          1e-9 * (1.0 + norm(expected)));

    // f * f^{-*} = 1.
    const RegularQuotient unit = star_mul(RegularQuotient::from_series(f),
                                          reciprocal(f));
    CHECK(norm(eval_quotient(unit, q) - Quaternion::one()) <= 1e-10);
  }
}

TEST_CASE("the denominator transform preserves spheres and inverts") {
  Rng rng(403);
  for (int trial = 0; trial < 100; ++trial) {
    const StarSeries f = safe_denominator(rng, 2);
    const Quaternion q = rng.ball(0.95);
    const Quaternion t = T_transform(f, q);
    CHECK(std::abs(norm(t) - norm(q)) <= 1e-12 * (1.0 + norm(q)));
    CHECK(std::abs(real(t) - real(q)) <= 1e-12 * (1.0 + norm(q)));
    const Quaternion back = T_transform(conjugate(f), t);
    CHECK(norm(back - q) <= 1e-10 * (1.0 + norm(q)));
  }
}

TEST_CASE("near a pole the evaluation refuses and names the sphere") {
  const Quaternion p(0.3, 0.4, 0.1, -0.2);
  const RegularQuotient Q(QuotientSide::left, StarSeries::linear(p),
                          StarSeries::constant(Quaternion::one()));
  REQUIRE(Q.excluded_spheres().size() == 1);
  const SliceCoordinates c = slice_decompose(p);
  CHECK(Q.excluded_spheres()[0].x0 == doctest::Approx(c.x0));
  CHECK(Q.excluded_spheres()[0].y0 == doctest::Approx(c.y0));
  try {
    eval_quotient(Q, p);
    FAIL("expected NearPole");
  } catch (const NearPole& e) {
    CHECK(e.sphere_x0 == doctest::Approx(c.x0));
    CHECK(e.sphere_y0 == doctest::Approx(c.y0));
    CHECK(e.distance <= 1e-9);
  }
  // Points on the same sphere but away from p are also poles: the
  // symmetrized denominator vanishes on the whole sphere.
  const Quaternion other = Quaternion(c.x0) + Quaternion::k() * c.y0;
  CHECK_THROWS_AS(eval_quotient(Q, other), NearPole);
  // Away from the sphere the quotient is finite.
  CHECK_NOTHROW(eval_quotient(Q, Quaternion(2.0, 1.0, 0.0, 0.0)));
}

TEST_CASE("conjugate and symmetrization identities hold pointwise") {
  Rng rng(404);
  for (int trial = 0; trial < 60; ++trial) {
    const StarSeries denom = safe_denominator(rng, 2);
    const StarSeries numer = testing::random_series(rng, 4);
    const RegularQuotient Q(trial % 2 == 0 ? QuotientSide::left
                                           : QuotientSide::right,
                            denom, numer);
    const Quaternion q = rng.ball(0.9);

    // Q * Q^c evaluates to the symmetrization.
    const RegularQuotient qc = quotient_conjugate(Q);
    const Quaternion via_product = eval_quotient(star_mul(Q, qc), q);
    const Quaternion symm = eval_quotient(quotient_symmetrize(Q), q);
    CHECK(norm(via_product - symm) <= 1e-9 * (1.0 + norm(symm)));
    CHECK(norm(eval_symmetrization(Q, q) - symm) <= 1e-9 * (1.0 + norm(symm)));
    // The symmetrization commutes, so the reversed product matches too.
    const Quaternion reversed = eval_quotient(star_mul(qc, Q), q);
    CHECK(norm(reversed - symm) <= 1e-9 * (1.0 + norm(symm)));

    // Canonical form preserves values.
    const RegularQuotient canon = canonical(Q);
    CHECK(canon.side() == QuotientSide::left);
    CHECK(canon.denom_is_real());
    const Quaternion direct = eval_quotient(Q, q);
    CHECK(norm(eval_quotient(canon, q) - direct) <= 1e-10 * (1.0 + norm(direct)));
  }
}

TEST_CASE("arithmetic combinators match pointwise arithmetic") {
  Rng rng(405);
  for (int trial = 0; trial < 60; ++trial) {
    const RegularQuotient A(QuotientSide::left, safe_denominator(rng, 2),
                            testing::random_series(rng, 4));
    const RegularQuotient B(QuotientSide::right, safe_denominator(rng, 1),
                            testing::random_series(rng, 3));
    const Quaternion q = rng.ball(0.85);
    const Quaternion c = testing::random_quaternion(rng);
    const Quaternion a = eval_quotient(A, q);
    const Quaternion b = eval_quotient(B, q);

    CHECK(norm(eval_quotient(add(A, B), q) - (a + b)) <=
          1e-9 * (1.0 + norm(a) + norm(b)));
    CHECK(norm(eval_quotient(sub(A, B), q) - (a - b)) <=
          1e-9 * (1.0 + norm(a) + norm(b)));
    CHECK(norm(eval_quotient(add_const(A, c), q) - (a + c)) <=
          1e-9 * (1.0 + norm(a)));
    CHECK(norm(eval_quotient(sub_const(A, c), q) - (a - c)) <=
          1e-9 * (1.0 + norm(a)));
    CHECK(norm(eval_quotient(const_mul_right(A, c), q) - a * c) <=
          1e-9 * (1.0 + norm(a) * norm(c)));

    // Left constants move the evaluation point by conjugation.
    const Quaternion moved = qinv(c) * q * c;
    const Quaternion expected_left = c * eval_quotient(A, moved);
    CHECK(norm(eval_quotient(const_mul_left(c, A), q) - expected_left) <=
          1e-9 * (1.0 + norm(expected_left)));

    // The star product obeys the product evaluation identity.
    if (norm(a) > 1e-3) {
      const Quaternion shifted = qinv(a) * q * a;
      const Quaternion expected = a * eval_quotient(B, shifted);
      CHECK(norm(eval_quotient(star_mul(A, B), q) - expected) <=
            1e-8 * (1.0 + norm(expected)));
    }
  }
}

TEST_CASE("difference quotient and derivative of quotients") {
  Rng rng(406);
  for (int trial = 0; trial < 40; ++trial) {
    const RegularQuotient Q(QuotientSide::left, safe_denominator(rng, 2),
                            testing::random_series(rng, 4));
    const Quaternion q0 = rng.ball(0.8, 0.05);
    const Quaternion q = rng.ball(0.8);

    // R(q0) evaluated at q0 is the slice derivative.
    const RegularQuotient R = diff_quotient(Q, q0);
    const Quaternion deriv = eval_quotient(cullen_derivative(Q), q0);
    CHECK(norm(eval_quotient(R, q0) - deriv) <= 1e-8 * (1.0 + norm(deriv)));

    // Q(q) = Q(q0) + ((q - q0) * R)(q), using the product evaluation
    // identity for the linear factor.
    if (norm(q - q0) > 1e-3) {
      const Quaternion shift = q - q0;
      const Quaternion moved = qinv(shift) * q * shift;
      const Quaternion rebuilt = eval_quotient(Q, q0) + shift * eval_quotient(R, moved);
      const Quaternion direct = eval_quotient(Q, q);
      CHECK(norm(rebuilt - direct) <= 1e-8 * (1.0 + norm(direct)));
    }

    // The spherical pair of the quotient matches evaluations.
    const SphericalPair sp = spherical_pair(Q, q0);
    const Quaternion at_q0 = eval_quotient(Q, q0);
    const Quaternion at_conj = eval_quotient(Q, conj(q0));
    CHECK(norm(sp.value - (at_q0 + at_conj) * 0.5) <= 1e-10);
    const SliceCoordinates c = slice_decompose(q0);
    const Quaternion expected_deriv =
        qinv(q0 - conj(q0)) * (at_q0 - at_conj);
    CHECK(norm(sp.derivative - expected_deriv) <=
          1e-10 * (1.0 + norm(expected_deriv)));
    (void)c;
  }
}

TEST_CASE("reciprocal of a quotient swaps the roles") {
  Rng rng(407);
  const StarSeries denom = safe_denominator(rng, 1);
  const StarSeries numer = safe_denominator(rng, 2);
  const RegularQuotient Q(QuotientSide::left, denom, numer);
  const RegularQuotient inverse = reciprocal(Q);
  const Quaternion q = rng.ball(0.8);
  const Quaternion product = eval_quotient(star_mul(Q, inverse), q);
  CHECK(norm(product - Quaternion::one()) <= 1e-9);
  CHECK_THROWS_AS(reciprocal(RegularQuotient(QuotientSide::left, denom,
                                             StarSeries())),
                  ZeroFunction);
}
