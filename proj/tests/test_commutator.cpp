#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "varbesov/commutator.hpp"
#include "varbesov/sampling.hpp"

using namespace varbesov;
using testing::rel_err;

namespace {

struct Setup {
  Grid grid = testing::small_grid();
  ResolutionOfUnity rou{grid, 6};
  Field f, v;
  explicit Setup(std::uint64_t seed) : f(grid), v(grid) {
    Rng rng(seed);
    f = random_band_limited(grid, 16.0, rng);
    v = random_band_limited(grid, 16.0, rng);
  }
  VectorField V() const { return VectorField({v}); }
};

}  // namespace

TEST_SUITE("commutator") {
  TEST_CASE("constant velocity commutes") {
    const Setup s(80);
    const VectorField c = VectorField::constant(s.grid, {2.5});
    for (int j = 0; j <= 6; ++j) CHECK(commutator(c, s.f, s.rou, j).max_abs() <= 1e-10 * s.f.max_abs());
    const ExponentField half = testing::smooth_exponent(s.grid, 0.5);
    const ExponentField two = testing::constant_exponent(s.grid, 2.0);
    CHECK(commutator_lhs_norm(c, s.f, half, two, two, s.rou) <= 1e-8);
  }

  TEST_CASE("constant f gives zero") {
    const Setup s(81);
    const Field one = Field::constant(s.grid, 3.0);
    for (int j = 0; j <= 6; ++j) CHECK(commutator(s.V(), one, s.rou, j).max_abs() <= 1e-13);
  }

  TEST_CASE("bilinear") {
    const Setup s(82);
    const Setup t(83);
    for (int j : {0, 3, 6}) {
      const Field base = commutator(s.V(), s.f, s.rou, j);
      const double scale = std::max(1.0, base.max_abs());
      const Field sum_f = commutator(s.V(), s.f * 2.0 + t.f * -0.5, s.rou, j);
      const Field lin_f = base * 2.0 + commutator(s.V(), t.f, s.rou, j) * -0.5;
      CHECK((sum_f - lin_f).max_abs() <= 1e-12 * scale);
      const Field sum_v = commutator(VectorField({s.v * 3.0 + t.v}), s.f, s.rou, j);
      const Field lin_v = base * 3.0 + commutator(t.V(), s.f, s.rou, j);
      CHECK((sum_v - lin_v).max_abs() <= 1e-12 * scale);
    }
  }

  TEST_CASE("sequence agrees with the per-level operator") {
    const Setup s(84);
    const FieldSequence seq = commutator_sequence(s.V(), s.f, s.rou);
    CHECK(seq.levels() == 7);
    for (int j = 0; j <= 6; ++j) CHECK((seq[j] - commutator(s.V(), s.f, s.rou, j)).max_abs() <= 1e-12);
  }

  TEST_CASE("physical-space form") {
    // [V d, Delta_j] f = V (phi_j * f') - phi_j * (V f') with phi_j the kernel of Delta_j
    const Setup s(85);
    for (int j : {0, 2, 5}) {
      Field delta(s.grid);
      delta[s.grid.origin_node()] = 1.0 / s.grid.cell_volume();
      const Field phi = lp_block(delta, s.rou, j);
      const Field df = spectral_derivative(s.f, 0);
      const Field want = multiply(s.v, convolve(phi, df)) - convolve(phi, multiply(s.v, df));
      const Field got = commutator(s.V(), s.f, s.rou, j);
      CHECK((got - want).max_abs() <= 1e-9 * std::max(1.0, want.max_abs()));
    }
  }

  TEST_CASE("2D stream-function velocity is divergence free") {
    const Grid g(2, 8.0, 64);
    Rng rng(86);
    const VectorField V = VectorField::from_stream_function(random_band_limited(g, 4.0, rng));
    CHECK(divergence(V).max_abs() <= 1e-12);
    CHECK_THROWS_AS(VectorField::from_stream_function(Field(testing::small_grid())), std::invalid_argument);
    CHECK_THROWS_AS(VectorField({Field(g)}), std::invalid_argument);
  }

  TEST_CASE("theorem one reports") {
    const Setup s(87);
    const ExponentField sv = testing::family(s.grid, "log_decay", {{"a", 0.25}, {"b", 0.5}}, ExponentKind::smoothness);
    const ExponentField p1 = testing::family(s.grid, "oscillation", {{"a", 3.0}, {"b", 2.0}});
    const ExponentField p2 = testing::constant_exponent(s.grid, 4.0);
    const ExponentField q = testing::family(s.grid, "log_decay", {{"a", 1.5}, {"b", 1.0}});
    const auto reps = theorem1_report(s.V(), s.f, sv, p1, p2, q, s.rou);
    REQUIRE(reps.size() == 3);
    CHECK(reps[0].variant == "grad_V");
    CHECK(reps[1].variant == "grad_f");
    CHECK(reps[2].variant == "div_form");
    for (const auto& r : reps) {
      CHECK(r.estimate == "theorem1");
      CHECK(std::isfinite(r.ratio));
      CHECK(r.ratio > 0.0);
      CHECK(r.ratio == doctest::Approx(r.lhs / r.rhs()));
    }
    // s = 1, f = V
    const auto self = theorem1_report(s.V(), s.v, testing::smooth_exponent(s.grid, 1.0), p2, p2,
                                      testing::constant_exponent(s.grid, 2.0), s.rou);
    for (const auto& r : self) CHECK(std::isfinite(r.ratio));

    const auto cv = theorem1_report(VectorField::constant(s.grid, {1.0}), s.f, sv, p1, p2, q, s.rou);
    for (const auto& r : cv) CHECK(r.ratio <= 1e-8);

    CHECK_THROWS_AS(theorem1_report(s.V(), s.f, testing::smooth_exponent(s.grid, -0.5), p1, p2, q, s.rou),
                    std::domain_error);
    const Field ramp = Field::sample(s.grid, [](const Grid::Point& x) { return x[0]; });
    CHECK_THROWS_AS(theorem1_report(VectorField({ramp}), s.f, sv, p1, p2, q, s.rou), std::domain_error);
  }

  TEST_CASE("theorem two reports") {
    const Setup s(88);
    const ExponentField p1 = testing::constant_exponent(s.grid, 4.0);
    const ExponentField q = testing::constant_exponent(s.grid, 2.0);
    const EstimateReport pos = theorem2_report(s.V(), s.f, testing::smooth_exponent(s.grid, 0.5), p1, p1, q, s.rou);
    CHECK(pos.variant == "positive_s");
    CHECK(std::isfinite(pos.ratio));
    const EstimateReport neg = theorem2_report(s.V(), s.f, testing::smooth_exponent(s.grid, -0.5), p1, p1, q, s.rou);
    CHECK(neg.variant == "negative_s");
    CHECK(std::isfinite(neg.ratio));
    CHECK(theorem2_report(VectorField::constant(s.grid, {2.0}), s.f, testing::smooth_exponent(s.grid, 0.5), p1, p1,
                          q, s.rou)
              .ratio <= 1e-8);
    CHECK_THROWS_AS(theorem2_report(s.V(), s.f, testing::smooth_exponent(s.grid, 1.0), p1, p1, q, s.rou),
                    std::domain_error);
    CHECK_THROWS_AS(theorem2_report(s.V(), s.f, testing::smooth_exponent(s.grid, 0.0), p1, p1, q, s.rou),
                    std::domain_error);
  }

  TEST_CASE("theorem three reports") {
    const Setup s(89);
    const ExponentField four = testing::constant_exponent(s.grid, 4.0);
    const ExponentField s1 = testing::smooth_exponent(s.grid, 0.3);
    const ExponentField s2 = testing::family(s.grid, "oscillation", {{"a", 0.1}, {"b", 0.3}}, ExponentKind::smoothness);
    const EstimateReport r = theorem3_report(s.V(), s.f, s1, s2, four, four, four, four, s.rou);
    CHECK(r.variant == "split");
    CHECK(std::isfinite(r.ratio));
    const ExponentField qinf = ExponentField::constant(s.grid, ExtendedReal::infinity());
    const EstimateReport z = theorem3_report(s.V(), s.f, s1, testing::smooth_exponent(s.grid, 0.0), four, four, four,
                                             qinf, s.rou);
    CHECK(std::isfinite(z.ratio));
    CHECK_THROWS_AS(theorem3_report(s.V(), s.f, s1, testing::smooth_exponent(s.grid, 1.0), four, four, four, four,
                                    s.rou),
                    std::domain_error);
  }

  TEST_CASE("constant sweeps") {
    SweepConfig cfg;
    cfg.points = 1024;
    cfg.J = 6;
    const SweepSummary a = constant_sweep(cfg, Theorem::one, 2, 7);
    const SweepSummary b = constant_sweep(cfg, Theorem::one, 2, 7);
    CHECK(a.ratios == b.ratios);
    CHECK(a.finite);
    CHECK(a.refinement_ok);
    CHECK(a.variants.size() == 3);
    cfg.constant_velocity = true;
    CHECK(constant_sweep(cfg, Theorem::two, 2, 7).max_ratio <= 1e-6);
    CHECK_THROWS_AS(constant_sweep(cfg, Theorem::one, 0, 7), std::invalid_argument);
    CHECK(std::string(theorem_name(Theorem::three)) == "theorem3");
  }
}
