#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "weyl/rational.hpp"
#include "weyl/rng.hpp"

using namespace weyl;

TEST_CASE("rationals are canonical") {
  Rational r(2, -4);
  CHECK(r.numerator() == -1);
  CHECK(r.denominator() == 2);
  CHECK(Rational(6, 3) == Rational(2));
  CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
  CHECK(Rational::from_string("7") == Rational(7));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("gaussian rational arithmetic") {
  GaussianRational i{Rational(0), Rational(1)};
  CHECK(i * i == GaussianRational(Rational(-1)));
  GaussianRational z{Rational(3, 5), Rational(4, 5)};
  CHECK(z.norm() == Rational(1));
  CHECK(z * z.inverse() == GaussianRational(Rational(1)));
  CHECK(z.conj().im == Rational(-4, 5));
}

TEST_CASE("circle from tangent") {
  CHECK(circle_from_tangent(Rational(0)).value() == GaussianRational(Rational(1)));
  CHECK(circle_from_tangent(Rational(1)).value() ==
        GaussianRational(Rational(0), Rational(1)));
  CHECK(circle_from_tangent(Rational(1, 2)).value() ==
        GaussianRational(Rational(3, 5), Rational(4, 5)));
}

TEST_CASE("circle powers") {
  CirclePoint i = circle_from_tangent(Rational(1));
  CHECK(circle_pow(i, 2).value() == GaussianRational(Rational(-1)));
  CirclePoint z = circle_from_tangent(Rational(1, 2));  // 3/5 + 4/5 i
  CHECK(circle_pow(z, -1) == z.conj());
  // oracle: direct Gaussian-rational multiplication
  GaussianRational sq = z.value() * z.value();
  CHECK(sq == GaussianRational(Rational(-7, 25), Rational(24, 25)));
  CHECK(circle_pow(z, 2).value() == sq);
}

TEST_CASE("unit modulus holds for every rational tangent") {
  CounterRng rng(11);
  for (int t = 0; t < 50; ++t) {
    Rational tan(rng.uniform_int(2 * t, -40, 40), rng.uniform_int(2 * t + 1, 1, 17));
    CirclePoint x = circle_from_tangent(tan);
    CHECK(x.value().norm() == Rational(1));
    CHECK(x.inverse() == x.conj());
  }
}

TEST_CASE("power additivity") {
  CounterRng rng(12);
  CirclePoint x = circle_from_tangent(Rational(5, 7));
  for (int t = 0; t < 30; ++t) {
    long a = rng.uniform_int(2 * t, -20, 20);
    long b = rng.uniform_int(2 * t + 1, -20, 20);
    CHECK(circle_pow(x, a + b) == circle_pow(x, a) * circle_pow(x, b));
  }
}

TEST_CASE("float conversion stays on the circle") {
  CounterRng rng(13);
  for (int t = 0; t < 40; ++t) {
    Rational tan(rng.uniform_int(2 * t, -99, 99), rng.uniform_int(2 * t + 1, 1, 23));
    ComplexFloat z = circle_from_tangent(tan).to_complex();
    CHECK(std::abs(std::abs(z) - 1.0) <= 1e-15);
  }
}

TEST_CASE("counter rng is stateless and splits") {
  CounterRng a(99), b(99);
  CHECK(a.bits(7) == b.bits(7));
  CHECK(a.uniform(3) >= 0.0);
  CHECK(a.uniform(3) < 1.0);
  CHECK(a.split(1).seed() != a.split(2).seed());
  for (int i = 0; i < 100; ++i) {
    long v = a.uniform_int(i, -3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}

TEST_CASE("tangent parametrization never reaches -1") {
  CounterRng rng(14);
  GaussianRational minus_one{Rational(-1)};
  for (int t = 0; t < 60; ++t) {
    Rational tan(rng.uniform_int(2 * t, -500, 500), rng.uniform_int(2 * t + 1, 1, 40));
    CHECK(circle_from_tangent(tan).value() != minus_one);
  }
}
