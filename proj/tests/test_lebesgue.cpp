#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "varbesov/lebesgue.hpp"
#include "varbesov/sampling.hpp"

using namespace varbesov;
using testing::kInf;
using testing::rel_err;

namespace {

// Positive root of 1/x + 1/x^2 = 1 by plain bisection.
double golden_by_bisection() {
  double lo = 1.0, hi = 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (1.0 / mid + 1.0 / (mid * mid) > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// p = 1 on [-1, 0), p = 2 on [0, 1), f = 1 on [-1, 1): rho(f / x) = 1/x + 1/x^2.
struct Golden {
  Grid grid{1, 4.0, 1024};
  Field f = testing::indicator(grid, -1.0, 1.0);
  ExponentField p = testing::family(grid, "step", {{"left", 1.0}, {"right", 2.0}});
};

}  // namespace

TEST_SUITE("lebesgue") {
  TEST_CASE("omega") {
    CHECK(omega(0.0, 2.0) == ExtendedReal(0.0));
    CHECK(omega(2.0, 3.0) == ExtendedReal(8.0));
    CHECK(omega(1.0, ExtendedReal::infinity()) == ExtendedReal(0.0));
    CHECK(omega(0.5, ExtendedReal::infinity()) == ExtendedReal(0.0));
    CHECK(omega(1.0000001, ExtendedReal::infinity()).is_plus_infinity());
    CHECK_THROWS_AS(omega(-1.0, 2.0), std::invalid_argument);
  }

  TEST_CASE("modular examples") {
    const Grid g(1, 4.0, 256);
    const Field chi = testing::indicator(g, 0.0, 1.0);
    CHECK(modular(chi, testing::constant_exponent(g, 2.0)).value() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(modular(chi * 2.0, testing::constant_exponent(g, 3.0)).value() == doctest::Approx(8.0).epsilon(1e-14));
    const ExponentField pinf = ExponentField::constant(g, ExtendedReal::infinity());
    CHECK(modular(chi, pinf) == ExtendedReal(0.0));
    CHECK(modular(chi * 1.01, pinf).is_plus_infinity());
    CHECK(modular(Field(g), testing::constant_exponent(g, 1.5)) == ExtendedReal(0.0));
  }

  TEST_CASE("golden ratio") {
    const Golden c;
    const double want = golden_by_bisection();
    CHECK(std::abs(want - 1.6180339887498949) <= 1e-15);
    CHECK(std::abs(luxemburg_norm(c.f, c.p) - want) <= 1e-8);
  }

  TEST_CASE("indicator and constant exponents") {
    const Grid g(1, 8.0, 512);
    const Field chi = testing::indicator(g, -1.0, 2.0, 3.0);  // |E| = 3, c = 3
    for (double p0 : {1.0, 1.5, 2.0, 3.0, 7.0}) {
      CAPTURE(p0);
      const double want = 3.0 * std::pow(3.0, 1.0 / p0);
      CHECK(rel_err(luxemburg_norm(chi, testing::constant_exponent(g, p0)), want) <= 1e-12);
    }
    CHECK(luxemburg_norm(chi, ExponentField::constant(g, ExtendedReal::infinity())) == 3.0);
    CHECK(luxemburg_norm(Field(g), testing::constant_exponent(g, 2.0)) == 0.0);
  }

  TEST_CASE("constant reduction on random fields") {
    const Grid g = testing::small_grid();
    Rng rng(5);
    for (int t = 0; t < 6; ++t) {
      const Field f = random_band_limited(g, 8.0, rng);
      for (double p0 : {1.0, 1.5, 2.0, 3.0, kInf}) {
        CAPTURE(p0);
        const ExtendedReal pe = ExtendedReal::from_double(p0);
        const double got = luxemburg_norm(f, ExponentField::constant(g, pe));
        CHECK(rel_err(got, constant_exponent_norm(f, pe)) <= 1e-6);
      }
    }
  }

  TEST_CASE("unit ball, homogeneity and monotonicity") {
    const Grid g = testing::small_grid();
    const ExponentField p = testing::family(g, "oscillation", {{"a", 1.2}, {"b", 2.5}});
    Rng rng(6);
    for (int t = 0; t < 5; ++t) {
      const Field f = random_band_limited(g, 8.0, rng);
      const double n = luxemburg_norm(f, p);
      CHECK(n > 0.0);
      CHECK(modular(f * (1.0 / n), p).value() <= 1.0 + 1e-12);
      CHECK(modular(f * (1.0 / (n * (1.0 - 1e-7))), p).value() > 1.0);
      for (double c : {-2.0, 0.25, 1e3}) CHECK(rel_err(luxemburg_norm(f * c, p), std::abs(c) * n) <= 1e-10);
      // |f| <= |f| + |h| pointwise
      const Field h = random_band_limited(g, 8.0, rng);
      CHECK(luxemburg_norm(abs(f) + abs(h), p) >= n * (1.0 - 1e-12));
    }
  }

  TEST_CASE("infinite exponent on part of the domain") {
    const Grid g(1, 4.0, 256);
    // p = 2 on [-1, 0), inf on [0, 1); f = 1 there. rho(f/x) = 1/x^2 for x >= 1.
    const ExponentField p = testing::family(g, "step", {{"left", 2.0}, {"right", kInf}});
    const Field f = testing::indicator(g, -1.0, 1.0);
    CHECK(std::abs(luxemburg_norm(f, p) - 1.0) <= 1e-12);
    // with f = 2 on the infinite part the norm is at least 2
    const Field f2 = testing::indicator(g, -1.0, 0.0) + testing::indicator(g, 0.0, 1.0, 2.0);
    CHECK(std::abs(luxemburg_norm(f2, p) - 2.0) <= 1e-12);
  }

  TEST_CASE("modular of truncations grows to the full modular") {
    const Grid g = testing::small_grid();
    Rng rng(8);
    const Field f = random_band_limited(g, 8.0, rng);
    const ExponentField p = testing::family(g, "log_decay", {{"a", 1.5}, {"b", 1.0}});
    double prev = 0.0;
    for (double r : {1.0, 2.0, 4.0, 8.0, 16.0}) {
      const Field fr = testing::indicator(g, -r, r);
      const double m = modular(multiply(f, fr), p).value();
      CHECK(m >= prev);
      prev = m;
    }
    CHECK(rel_err(prev, modular(f, p).value()) <= 1e-12);
  }
}
