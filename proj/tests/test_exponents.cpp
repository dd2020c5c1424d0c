#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "varbesov/exponents.hpp"

using namespace varbesov;
using testing::kInf;

namespace {

// O(N^2) pair scan, the definition taken literally.
double brute_local(const ExponentField& g) {
  const Grid& grid = g.grid();
  double best = 0.0;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      const Grid::Point x = grid.point(a), y = grid.point(b);
      const double d = std::hypot(x[0] - y[0], x[1] - y[1]);
      best = std::max(best, std::abs(g.raw()[a] - g.raw()[b]) * std::log(std::numbers::e + 1.0 / d));
    }
  return best;
}

}  // namespace

TEST_SUITE("exponents") {
  TEST_CASE("extended reals") {
    CHECK(ExtendedReal::from_double(kInf).is_plus_infinity());
    CHECK(ExtendedReal(2.5).value() == 2.5);
    CHECK_THROWS_AS(ExtendedReal::infinity().value(), std::domain_error);
    CHECK_THROWS_AS(ExtendedReal{kInf}, std::invalid_argument);
    CHECK(ExtendedReal(1.0) < ExtendedReal::infinity());
    CHECK((ExtendedReal(1.0) + ExtendedReal::infinity()).is_plus_infinity());
  }

  TEST_CASE("field validation") {
    const Grid g(1, 1.0, 8);
    CHECK_THROWS_AS(ExponentField(g, std::vector<double>(8, 0.5), ExponentKind::integrability),
                    std::invalid_argument);
    CHECK_THROWS_AS(ExponentField(g, std::vector<double>(8, kInf), ExponentKind::smoothness),
                    std::invalid_argument);
    CHECK_THROWS_AS(ExponentField(g, std::vector<double>(8, std::nan("")), ExponentKind::smoothness),
                    std::invalid_argument);
    CHECK_THROWS_AS(ExponentField(g, std::vector<double>(7, 2.0), ExponentKind::integrability),
                    std::invalid_argument);
    const ExponentField e(g, {1, 2, 3, kInf, 2, 2, 2, 2}, ExponentKind::integrability);
    CHECK(e.minus() == ExtendedReal(1.0));
    CHECK(e.plus().is_plus_infinity());
    CHECK_FALSE(e.is_finite_valued());
    CHECK(e.is_infinite_at(3));
  }

  TEST_CASE("conjugate") {
    const Grid g(1, 1.0, 8);
    const ExponentField p(g, {1, 1.5, 2, 3, 4, kInf, 1.25, 10}, ExponentKind::integrability);
    const ExponentField pc = conjugate(p);
    CHECK(pc.raw()[0] == kInf);
    CHECK(pc.raw()[1] == doctest::Approx(3.0));
    CHECK(pc.raw()[2] == 2.0);
    CHECK(pc.raw()[3] == doctest::Approx(1.5));
    CHECK(pc.raw()[5] == 1.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double a = p.raw()[i], b = pc.raw()[i];
      const double s = (std::isinf(a) ? 0.0 : 1.0 / a) + (std::isinf(b) ? 0.0 : 1.0 / b);
      CHECK(s == doctest::Approx(1.0).epsilon(1e-15));
    }
    // Round trip is exact on the endpoints and at 2, and within an ulp elsewhere.
    const ExponentField back = conjugate(pc);
    for (std::size_t i = 0; i < p.size(); ++i)
      if (std::isfinite(p.raw()[i])) CHECK(back.raw()[i] == doctest::Approx(p.raw()[i]).epsilon(1e-15));
    CHECK(back.raw()[0] == 1.0);
    CHECK(back.raw()[5] == kInf);
    CHECK_THROWS_AS(conjugate(testing::smooth_exponent(g, 0.5)), std::invalid_argument);
  }

  TEST_CASE("reciprocal, harmonic sum and arithmetic") {
    const Grid g(1, 1.0, 8);
    const ExponentField a = testing::constant_exponent(g, 4.0);
    const ExponentField b = ExponentField::constant(g, ExtendedReal::infinity());
    CHECK(reciprocal(a).raw()[0] == 0.25);
    CHECK(reciprocal(b).raw()[0] == 0.0);
    CHECK(harmonic_sum(a, a).raw()[0] == 2.0);
    CHECK(harmonic_sum(a, b).raw()[0] == 4.0);
    CHECK(harmonic_sum(b, b).raw()[0] == kInf);
    const ExponentField one_half = testing::constant_exponent(g, 1.5);
    CHECK_THROWS_AS(harmonic_sum(one_half, one_half), std::invalid_argument);
    CHECK(add(testing::smooth_exponent(g, 0.5), testing::smooth_exponent(g, -1.0)).raw()[3] == -0.5);
    CHECK(shift(testing::smooth_exponent(g, 0.5), 2.0).raw()[3] == 2.5);
    std::vector<bool> mask(8, false);
    mask[2] = true;
    const ExponentField bl = blend(a, mask, kInf);
    CHECK(bl.raw()[2] == 4.0);
    CHECK(bl.raw()[0] == kInf);
  }

  TEST_CASE("local log-Hoelder constant") {
    const Grid g(1, 4.0, 256);
    CHECK(local_log_holder(testing::constant_exponent(g, 3.0)) == 0.0);
    const ExponentField kink = ExponentField(
        g, [&] {
          std::vector<double> v(g.size());
          for (std::size_t i = 0; i < v.size(); ++i) v[i] = 2.0 + std::min(1.0, std::abs(g.point(i)[0]));
          return v;
        }(),
        ExponentKind::integrability);
    const double c = local_log_holder(kink);
    CHECK(c > 0.0);
    CHECK(c == doctest::Approx(brute_local(kink)).epsilon(1e-15));
    for (const char* fam : {"log_decay", "oscillation"}) {
      const ExponentField e = testing::family(g, fam, {{"a", 1.5}, {"b", 1.0}});
      CHECK(local_log_holder(e) == doctest::Approx(brute_local(e)).epsilon(1e-15));
    }
    // A jump is not log-Hoelder: the constant grows with resolution.
    auto jump = [](std::size_t n) {
      return local_log_holder(testing::family(Grid(1, 4.0, n), "step", {{"left", 2.0}, {"right", 3.0}}));
    };
    CHECK(jump(1024) > jump(256) + 1.0);
  }

  TEST_CASE("local constant is translation invariant and exact on small 2D grids") {
    const Grid g(1, 4.0, 256);
    std::vector<double> v(g.size()), w(g.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = 2.0 + std::exp(-std::pow(g.point(i)[0] - 0.5, 2));
      w[i] = 2.0 + std::exp(-std::pow(g.point(i)[0] - 0.5 - 0.25, 2));  // shifted by 8 nodes
    }
    const double cv = local_log_holder(ExponentField(g, v, ExponentKind::integrability));
    const double cw = local_log_holder(ExponentField(g, w, ExponentKind::integrability));
    CHECK(cv == doctest::Approx(cw).epsilon(1e-6));

    const Grid g2(2, 2.0, 16);
    const ExponentField e2 = testing::family(g2, "oscillation", {{"a", 1.5}, {"b", 1.0}});
    CHECK(local_log_holder(e2) == doctest::Approx(brute_local(e2)).epsilon(1e-15));
  }

  TEST_CASE("decay log-Hoelder constant") {
    const Grid g(1, 16.0, 1024);
    const ExponentField e = testing::family(g, "log_decay", {{"a", 3.0}, {"b", 1.0}});
    CHECK(decay_log_holder(e.with_value_at_infinity(3.0)) <= 1.0 + 1e-12);
    CHECK(decay_log_holder(testing::constant_exponent(g, 2.0)) == 0.0);
    const ExponentField bare(g, std::vector<double>(g.size(), 2.0), ExponentKind::integrability);
    CHECK_THROWS_AS(decay_log_holder(bare), std::invalid_argument);
    CHECK_THROWS_AS(local_log_holder(ExponentField::constant(g, ExtendedReal::infinity())), std::invalid_argument);
  }

  TEST_CASE("families") {
    const Grid g(1, 4.0, 64);
    CHECK(testing::family(g, "constant", {{"value", 2.0}}).is_constant());
    const ExponentField st = testing::family(g, "step", {{"left", 2.0}, {"right", kInf}});
    CHECK(st.raw()[0] == 2.0);
    CHECK(st.raw()[63] == kInf);
    const ExponentField ld = testing::family(g, "log_decay", {{"a", 1.0}, {"b", 1.0}});
    CHECK(ld.raw()[g.origin_node()] == doctest::Approx(2.0));
    CHECK(ld.value_at_infinity().value() == ld.raw()[0]);
    const ExponentField os = testing::family(g, "oscillation", {{"a", 0.5}, {"b", 1.0}});
    CHECK(os.minus() == ExtendedReal(1.0));  // clamped
    CHECK_THROWS_AS(testing::family(g, "spiral", {}), std::invalid_argument);
    CHECK_THROWS_AS(testing::family(g, "log_decay", {{"a", 1.0}}), std::invalid_argument);
    CHECK(is_known_family("oscillation"));
    CHECK_FALSE(is_known_family("spiral"));
  }
}
