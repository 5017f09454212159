#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <srk/sampling.hpp>
#include <srk/star_series.hpp>

#include "generators.hpp"

using namespace srk;

namespace {

double coeff_distance(const StarSeries& f, const StarSeries& g) {
  double d = 0.0;
  const int top = std::max(f.degree(), g.degree());
  for (int n = 0; n <= top; ++n) {
    d = std::max(d, norm(f.coeff(n) - g.coeff(n)));
  }
  return d;
}

}  // namespace

TEST_CASE("construction trims exact zeros and reports degree") {
  const StarSeries f({Quaternion(1), Quaternion::zero(), Quaternion::zero()});
  CHECK(f.degree() == 0);
  CHECK(StarSeries().is_zero());
  CHECK(StarSeries().degree() == -1);
  CHECK(StarSeries::identity().degree() == 1);
  CHECK(StarSeries::monomial(5, Quaternion::i()).degree() == 5);
  CHECK(StarSeries::linear(Quaternion(0.5)).coeff(0) == Quaternion(-0.5));
}

TEST_CASE("degree cap rejects oversized series and products") {
  CHECK_THROWS_AS(StarSeries::monomial(StarSeries::degree_cap() + 1,
                                       Quaternion::one()),
                  DegreeCapExceeded);
  const StarSeries big = StarSeries::monomial(40, Quaternion::one());
  CHECK_THROWS_AS(star_mul(big, big), DegreeCapExceeded);
  CHECK_NOTHROW(star_mul(StarSeries::monomial(32, Quaternion::one()),
                         StarSeries::monomial(32, Quaternion::one())));
}

TEST_CASE("Horner evaluation matches the power-sum oracle") {
  Rng rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const StarSeries f = testing::random_series(rng, 8, 2.0);
    const Quaternion q = testing::random_quaternion(rng, 1.5);
    const Quaternion expected = testing::naive_eval(f.coeffs(), q);
    CHECK(norm(eval(f, q) - expected) <= 1e-12 * (1.0 + norm(expected)));
  }
}

TEST_CASE("star product matches the convolution oracle") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const StarSeries f = testing::random_series(rng, 6);
    const StarSeries g = testing::random_series(rng, 7);
    const StarSeries product = star_mul(f, g);
    const auto expected = testing::naive_convolution(f.coeffs(), g.coeffs());
    REQUIRE(product.coeffs().size() == expected.size());
    for (size_t n = 0; n < expected.size(); ++n) {
      CHECK(norm(product.coeffs()[n] - expected[n]) <= 1e-13);
    }
  }
}

TEST_CASE("star product is associative and unital but not commutative") {
  Rng rng(7);
  const StarSeries one = StarSeries::constant(Quaternion::one());
  bool saw_noncommutative = false;
  for (int trial = 0; trial < 100; ++trial) {
    const StarSeries f = testing::random_series(rng, 5);
    const StarSeries g = testing::random_series(rng, 5);
    const StarSeries h = testing::random_series(rng, 5);
    CHECK(coeff_distance(star_mul(star_mul(f, g), h),
                         star_mul(f, star_mul(g, h))) <= 1e-12);
    CHECK(coeff_distance(star_mul(f, one), f) == 0.0);
    CHECK(coeff_distance(star_mul(one, f), f) == 0.0);
    if (coeff_distance(star_mul(f, g), star_mul(g, f)) > 1e-6) {
      saw_noncommutative = true;
    }
  }
  CHECK(saw_noncommutative);
}

TEST_CASE("real central series commute with everything") {
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const StarSeries f = testing::random_series(rng, 6);
    std::vector<Quaternion> real_coeffs(5);
    for (Quaternion& c : real_coeffs) c = Quaternion(rng.uniform(-2.0, 2.0));
    const StarSeries s(std::move(real_coeffs));
    CHECK(coeff_distance(star_mul(s, f), star_mul(f, s)) <= 1e-13);
    const Quaternion q = testing::random_quaternion(rng, 1.2);
    CHECK(norm(eval(star_mul(s, f), q) - eval(s, q) * eval(f, q)) <=
          1e-12 * (1.0 + norm(eval(s, q)) * norm(eval(f, q))));
  }
}

TEST_CASE("conjugation reverses star products and symmetrization is real") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const StarSeries f = testing::random_series(rng, 6);
    const StarSeries g = testing::random_series(rng, 6);
    CHECK(coeff_distance(conjugate(star_mul(f, g)),
                         star_mul(conjugate(g), conjugate(f))) <= 1e-13);
    const StarSeries symm = symmetrize(f);
    CHECK(symm.has_real_coeffs(0.0));
    CHECK(coeff_distance(symm, star_mul(f, conjugate(f))) <= 1e-12);
    CHECK(coeff_distance(star_mul(f, conjugate(f)),
                         star_mul(conjugate(f), f)) <= 1e-12);
  }
}

TEST_CASE("product evaluation follows the conjugated-point identity") {
  Rng rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    const StarSeries f = testing::random_series(rng, 5);
    const StarSeries g = testing::random_series(rng, 5);
    const Quaternion q = testing::random_quaternion(rng, 1.2);
    const Quaternion fq = eval(f, q);
    if (norm(fq) < 1e-3) continue;
    const Quaternion moved = qinv(fq) * q * fq;
    const Quaternion expected = fq * eval(g, moved);
    const Quaternion actual = eval(star_mul(f, g), q);
    CHECK(norm(actual - expected) <= 1e-11 * (1.0 + norm(expected)));
  }
  // A zero of the left factor forces a zero of the product.
  const Quaternion p(0.3, 0.5, -0.1, 0.2);
  const StarSeries f = StarSeries::linear(p);
  Rng rng2(4);
  const StarSeries g = testing::random_series(rng2, 4);
  CHECK(norm(eval(star_mul(f, g), p)) <= 1e-13);
}

TEST_CASE("termwise slice derivative satisfies the Leibniz rule") {
  Rng rng(55);
  const StarSeries f = testing::random_series(rng, 6);
  CHECK(cullen_derivative(StarSeries::constant(Quaternion(3))).is_zero());
  const StarSeries df = cullen_derivative(f);
  for (int n = 0; n <= df.degree(); ++n) {
    CHECK(norm(df.coeff(n) - static_cast<double>(n + 1) * f.coeff(n + 1)) ==
          0.0);
  }
  for (int trial = 0; trial < 50; ++trial) {
    const StarSeries a = testing::random_series(rng, 5);
    const StarSeries b = testing::random_series(rng, 5);
    const StarSeries lhs = cullen_derivative(star_mul(a, b));
    const StarSeries rhs = star_mul(cullen_derivative(a), b) +
                           star_mul(a, cullen_derivative(b));
    CHECK(coeff_distance(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("linear division inverts multiplication by q - q0") {
  Rng rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    const Quaternion q0 = testing::random_quaternion(rng, 1.5);
    const StarSeries g = testing::random_series(rng, 6);
    const StarSeries f = star_mul(StarSeries::linear(q0), g);
    CHECK(coeff_distance(divide_linear(f, q0), g) <= 1e-12);
  }
  const StarSeries not_divisible({Quaternion(1), Quaternion(1)});
  CHECK_THROWS_AS(divide_linear(not_divisible, Quaternion(0.5, 1.0)),
                  ResidualTooLarge);
}

TEST_CASE("sphere division recovers quotient and linear remainder") {
  Rng rng(606);
  for (int trial = 0; trial < 100; ++trial) {
    const double x0 = rng.uniform(-1.0, 1.0);
    const double y0 = rng.uniform(0.1, 1.0);
    const StarSeries g = testing::random_series(rng, 5);
    const Quaternion r0 = testing::random_quaternion(rng);
    const Quaternion r1 = testing::random_quaternion(rng);
    const StarSeries f = star_mul(sphere_polynomial(x0, y0), g) +
                         StarSeries({r0, r1});
    const SphereDivision division = divide_sphere(f, x0, y0);
    CHECK(coeff_distance(division.quotient, g) <= 1e-11);
    CHECK(norm(division.remainder0 - r0) <= 1e-11);
    CHECK(norm(division.remainder1 - r1) <= 1e-11);
  }
}

TEST_CASE("the sphere polynomial vanishes on its whole sphere") {
  const double x0 = 0.4;
  const double y0 = 0.9;
  const StarSeries s = sphere_polynomial(x0, y0);
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Quaternion axis = imag(rng.unit_quaternion());
    if (norm(axis) < 1e-3) continue;
    axis = unit(axis);
    CHECK(norm(eval(s, Quaternion(x0) + axis * y0)) <= 1e-14);
  }
  CHECK(s.has_real_coeffs(0.0));
}

TEST_CASE("nominal radius guards evaluation and shrinks under products") {
  const StarSeries f({Quaternion(1), Quaternion(1)}, 2.0);
  const StarSeries g({Quaternion(1)}, 0.5);
  CHECK_NOTHROW(eval(f, Quaternion(1.9)));
  CHECK_THROWS_AS(eval(f, Quaternion(2.0)), OutOfDomain);
  CHECK_THROWS_AS(eval(f, Quaternion(2.5)), OutOfDomain);
  CHECK(star_mul(f, g).nominal_radius() == 0.5);
  CHECK((f + g).nominal_radius() == 0.5);
  CHECK_THROWS_AS(eval(star_mul(f, g), Quaternion(0.7)), OutOfDomain);
}
