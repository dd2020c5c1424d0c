#include <doctest.h>

#include <cmath>
#include <numeric>

#include "helpers.hpp"
#include "varbesov/duality.hpp"
#include "varbesov/lebesgue.hpp"
#include "varbesov/sampling.hpp"

using namespace varbesov;
using testing::kInf;
using testing::rel_err;

namespace {

FieldSequence sample_sequence(std::uint64_t seed, std::size_t levels = 4) {
  Rng rng(seed);
  return random_sequence(testing::small_grid(), levels, 8.0, rng);
}

struct Exps {
  ExponentField p, q;
};

Exps variable(const Grid& g) {
  return {testing::family(g, "oscillation", {{"a", 1.5}, {"b", 1.5}}),
          testing::family(g, "log_decay", {{"a", 1.5}, {"b", 1.0}})};
}

}  // namespace

TEST_SUITE("duality") {
  TEST_CASE("pairing") {
    const Grid g(1, 4.0, 256);
    const FieldSequence a({testing::indicator(g, 0.0, 1.0), testing::indicator(g, 0.0, 2.0, -2.0)});
    const FieldSequence b({testing::indicator(g, 0.5, 3.0, -1.0), testing::indicator(g, 1.0, 3.0)});
    CHECK(pairing(a, b) == doctest::Approx(0.5 + 2.0));
    CHECK(pairing(a, FieldSequence::zeros(g, 2)) == 0.0);
    CHECK_THROWS_AS(pairing(a, FieldSequence::zeros(g, 3)), std::invalid_argument);
  }

  TEST_CASE("extremal witness: hand examples") {
    const Grid g(1, 4.0, 256);
    const ExponentField p2 = testing::constant_exponent(g, 2.0);
    const FieldSequence one({testing::indicator(g, 0.0, 1.0)});
    const ExtremalWitness w = extremal_witness(one, p2, testing::constant_exponent(g, 1.0));
    CHECK(w.K == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(w.betas[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK((w.h[0] - one[0]).max_abs() <= 1e-10);
    CHECK(pairing(one, w.h) == doctest::Approx(1.0).epsilon(1e-10));

    const FieldSequence twin({testing::indicator(g, 0.0, 1.0), testing::indicator(g, 0.0, 1.0)});
    const ExtremalWitness t = extremal_witness(twin, p2, p2);
    CHECK(t.betas[0] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(t.betas[1] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(pairing(twin, t.h) == doctest::Approx(t.K).epsilon(1e-8));
  }

  TEST_CASE("extremal witness: guarantees on random sequences") {
    for (std::uint64_t seed = 60; seed < 64; ++seed) {
      const FieldSequence fs = sample_sequence(seed);
      const auto [p, q] = variable(fs.grid());
      const ExtremalWitness w = extremal_witness(fs, p, q);
      const double beta_sum = std::accumulate(w.betas.begin(), w.betas.end(), 0.0);
      CHECK(std::abs(beta_sum - 1.0) <= 1e-5);
      CHECK(mixed_norm(w.h, conjugate(p), conjugate(q)) <= 1.0 + 1e-4);
      CHECK(pairing(fs, w.h) >= 0.999 * w.K);
      CHECK(rel_err(w.K, mixed_norm(fs, p, q)) <= 1e-12);
    }
  }

  TEST_CASE("extremal witness: preconditions") {
    const FieldSequence fs = sample_sequence(65, 2);
    const Grid& g = fs.grid();
    const auto [p, q] = variable(g);
    const ExponentField inf = ExponentField::constant(g, ExtendedReal::infinity());
    CHECK_THROWS_AS(extremal_witness(fs, inf, q), std::invalid_argument);
    CHECK_THROWS_AS(extremal_witness(fs, p, inf), std::invalid_argument);
    CHECK_THROWS_AS(extremal_witness(FieldSequence::zeros(g, 2), p, q), std::invalid_argument);
  }

  TEST_CASE("infinity witness") {
    const Grid g(1, 4.0, 256);
    const ExponentField q1 = testing::constant_exponent(g, 1.0);
    const FieldSequence chi({testing::indicator(g, 0.0, 1.0)});
    const InfinityWitness w = infinity_witness_full(chi, q1, 1e-3);
    CHECK(w.support[0] == 32);
    CHECK(w.h[0][g.origin_node()] == doctest::Approx(1.0));
    CHECK(pairing(chi, w.h) == doctest::Approx(1.0).epsilon(1e-12));

    // one tall node: support shrinks to it
    Field spike = Field::sample(g, [](const Grid::Point& x) { return std::exp(-x[0] * x[0]); });
    const InfinityWitness s = infinity_witness_full(FieldSequence({spike}), q1, 1e-6);
    CHECK(s.support[0] == 1);

    const FieldSequence fs = sample_sequence(66, 3);
    const ExponentField q2 = testing::constant_exponent(fs.grid(), 2.0);
    const ExponentField pinf = ExponentField::constant(fs.grid(), ExtendedReal::infinity());
    const double eps = 1e-3;
    const InfinityWitness r = infinity_witness_full(fs, q2, eps);
    CHECK(pairing(fs, r.h) >= r.K - 3 * eps);
    CHECK(mixed_norm(r.h, ExponentField::constant(fs.grid(), 1.0), q2) <= 1.0 + 1e-4);
    CHECK(rel_err(r.K, mixed_norm(fs, pinf, q2)) <= 1e-12);
    CHECK_THROWS_AS(infinity_witness(fs, q2, 0.0), std::invalid_argument);
  }

  TEST_CASE("random dual search") {
    const FieldSequence fs = sample_sequence(67);
    const auto [p, q] = variable(fs.grid());
    const DualSearchResult a = random_dual_search(fs, p, q, 6, 99);
    const DualSearchResult b = random_dual_search(fs, p, q, 6, 99);
    CHECK(a.pairings == b.pairings);
    CHECK(a.witness_included);
    CHECK(a.pairings.size() == 7);
    CHECK(a.pairings.back() == doctest::Approx(a.K).epsilon(1e-4));
    CHECK(a.best <= 8.0 * a.K);
    CHECK(a.max_ratio <= 1.0 + 1e-4);
    const DualSearchResult z = random_dual_search(FieldSequence::zeros(fs.grid(), 2), p, q, 3, 1);
    CHECK(z.best == 0.0);
  }

  TEST_CASE("norm conjugate") {
    const Grid g = testing::small_grid();
    Rng rng(68);
    const Field f = random_band_limited(g, 8.0, rng);
    for (double p0 : {1.0, 2.0, 3.0}) {
      const NormConjugateReport r = verify_norm_conjugate(f, testing::constant_exponent(g, p0), 4, 5);
      CHECK(r.passed);
      CHECK(r.ratio == doctest::Approx(1.0).epsilon(1e-4));
    }
    const ExponentField step = testing::family(g, "step", {{"left", 2.0}, {"right", kInf}});
    const NormConjugateReport s = verify_norm_conjugate(f, step, 4, 5);
    CHECK(s.passed);
    CHECK(verify_norm_conjugate(Field(g), step, 2, 5).ratio == 0.0);
  }

  TEST_CASE("three-piece split") {
    const FieldSequence fs = sample_sequence(69, 3);
    const Grid& g = fs.grid();
    const ExponentField p = testing::family(g, "step", {{"left", 2.0}, {"right", kInf}, {"threshold", 1.0}});
    const ExponentField q = testing::family(g, "step", {{"left", kInf}, {"right", 1.5}, {"threshold", -1.0}});
    const SplitDualityReport r = split_duality(fs, p, q, 1e-3);
    CHECK(r.passed);
    for (double feas : r.piece_feasibility) CHECK(feas <= 1.0 + 1e-4);
    CHECK(r.best >= r.K / 8.0);
    CHECK(r.best <= 8.0 * r.K);
  }
}
