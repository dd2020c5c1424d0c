#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>

#include "varbesov/commutator.hpp"
#include "varbesov/duality.hpp"
#include "varbesov/kernels.hpp"
#include "varbesov/lebesgue.hpp"
#include "varbesov/littlewood_paley.hpp"
#include "varbesov/mixed.hpp"
#include "varbesov/sampling.hpp"
#include "varbesov/suite.hpp"

namespace varbesov::suite {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double rel(double a, double b) { return b == 0.0 ? std::abs(a) : std::abs(a - b) / std::abs(b); }

class Context {
 public:
  Context(const SuiteConfig& c, SuiteReport& r, std::uint64_t stream)
      : config(c), report(r), grid(c.dim, c.half_width, c.points), stream_(stream) {}

  const SuiteConfig& config;
  SuiteReport& report;
  Grid grid;

  ExponentField exponent(const std::string& role) const {
    const ExponentKind kind = role.front() == 's' ? ExponentKind::smoothness : ExponentKind::integrability;
    return make_family(grid, config.exponents.at(role), kind);
  }
  ExponentField constant(double v) const {
    return ExponentField::constant(grid, ExtendedReal::from_double(v));
  }
  const ResolutionOfUnity& rou() {
    if (!rou_) rou_.emplace(grid, config.J);
    return *rou_;
  }
  // Decaying band-limited inputs keep clear of the box edge and of aliasing.
  double band() const { return std::ldexp(1.0, config.J) / 4.0; }
  Rng rng(std::uint64_t trial) const { return Rng::stream(config.seed, stream_ * 1000003ULL + trial); }

  // value <= bound + tolerance
  void upper(const std::string& id, double value, double bound, double tol) {
    const bool ok = std::isfinite(value) && value <= bound + tol;
    report.checks.push_back({id, ok ? Status::pass : Status::fail, value, bound, tol});
  }
  // value >= bound - tolerance
  void lower(const std::string& id, double value, double bound, double tol) {
    const bool ok = std::isfinite(value) && value >= bound - tol;
    report.checks.push_back({id, ok ? Status::pass : Status::fail, value, bound, tol});
  }
  void trivial(const std::string& id, double value = 0.0) {
    report.checks.push_back({id, Status::trivial, value, 0.0, 0.0});
  }
  void failed(const std::string& id) { report.checks.push_back({id, Status::fail, kNaN, kNaN, 0.0}); }

 private:
  std::uint64_t stream_;
  std::optional<ResolutionOfUnity> rou_;
};

std::vector<bool> box_mask(const Grid& g, double lo, double hi) {
  std::vector<bool> m(g.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Grid::Point x = g.point(i);
    m[i] = x[0] >= lo && x[0] < hi;
  }
  return m;
}

std::vector<bool> centered_box(const Grid& g, double r) {
  std::vector<bool> m(g.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Grid::Point x = g.point(i);
    m[i] = std::max(std::abs(x[0]), std::abs(x[1])) <= r;
  }
  return m;
}

// ---------------------------------------------------------------- lebesgue

void lebesgue_suite(Context& ctx) {
  const Grid& g = ctx.grid;
  const auto& tol = ctx.config.tolerances;

  {
    // f = chi_[0,2) on axis 0, p = 1 on [0,1) and 2 on [1,2): |E1|/l + |E2|/l^2 = 1.
    const auto e1 = box_mask(g, 0.0, 1.0);
    const auto e2 = box_mask(g, 1.0, 2.0);
    std::vector<double> pv(g.size(), 2.0);
    Field f(g);
    double m1 = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (e1[i]) pv[i] = 1.0, m1 += g.cell_volume();
      if (e1[i] || e2[i]) f[i] = 1.0;
      if (e2[i]) m2 += g.cell_volume();
    }
    const double expect = (m1 + std::sqrt(m1 * m1 + 4.0 * m2)) / 2.0;
    const double got = luxemburg_norm(f, ExponentField(g, pv, ExponentKind::integrability));
    ctx.upper("lebesgue.two_piece_exponent", std::abs(got - expect), 0.0, tol.luxemburg);
  }

  {
    Rng rng = ctx.rng(0);
    const Field f = random_band_limited(g, ctx.band(), rng);
    for (double p0 : {1.0, 1.5, 2.0, 3.0, kInf}) {
      const auto p0e = ExtendedReal::from_double(p0);
      const double got = luxemburg_norm(f, ExponentField::constant(g, p0e));
      const std::string id = "lebesgue.constant_reduction.p=" + (p0 == kInf ? std::string("inf") : [&] {
        char b[16];
        std::snprintf(b, sizeof b, "%g", p0);
        return std::string(b);
      }());
      ctx.upper(id, rel(got, constant_exponent_norm(f, p0e)), 0.0, tol.reduction);
    }
  }

  const ExponentField p = ctx.exponent("p");
  double violations = 0.0, homog = 0.0, monotone = 0.0;
  for (int t = 0; t < ctx.config.trials; ++t) {
    Rng rng = ctx.rng(100 + t);
    Field f = random_band_limited(g, ctx.band(), rng);
    const double n = luxemburg_norm(f, p);
    f *= rng.uniform(0.5, 1.5) / n;
    const double nf = luxemburg_norm(f, p);
    if (std::abs(nf - 1.0) > tol.unit_ball) {
      const bool in_ball = nf <= 1.0;
      const ExtendedReal rho = modular(f, p);
      if (in_ball != (rho.is_finite() && rho.value() <= 1.0)) violations += 1.0;
    }
    const double c = rng.uniform(-10.0, 10.0);
    homog = std::max(homog, rel(luxemburg_norm(f * c, p), std::abs(c) * nf));
    // rho(chi_{A_n} f) increases to rho(f) along growing boxes.
    double prev = 0.0;
    for (double r : {1.0, 2.0, 4.0, 8.0, 2.0 * g.half_width()}) {
      const ExtendedReal v = modular(restrict_to(f, centered_box(g, r)), p);
      if (v.is_infinite() || v.value() < prev) monotone += 1.0;
      prev = v.is_finite() ? v.value() : prev;
    }
    monotone += rel(prev, modular(f, p).value()) > 1e-15 ? 1.0 : 0.0;
  }
  ctx.upper("lebesgue.unit_ball_equivalence.violations", violations, 0.0, 0.0);
  ctx.upper("lebesgue.homogeneity", homog, 0.0, tol.luxemburg);
  ctx.upper("lebesgue.modular_monotone_convergence.violations", monotone, 0.0, 0.0);
}

// ---------------------------------------------------------------- mixed

double classical_mixed(const FieldSequence& fs, double p0, double q0) {
  double s = 0.0;
  for (const Field& f : fs) s += std::pow(constant_exponent_norm(f, ExtendedReal::from_double(p0)), q0);
  return std::pow(s, 1.0 / q0);
}

void mixed_suite(Context& ctx) {
  const Grid& g = ctx.grid;
  const auto& tol = ctx.config.tolerances;
  const std::size_t levels = static_cast<std::size_t>(ctx.config.J) + 1;
  const ExponentField p = ctx.exponent("p");
  const ExponentField q = ctx.exponent("q");
  const ExponentField q_inf = ExponentField::constant(g, ExtendedReal::infinity());
  const ExponentField p_inf = q_inf;

  double reduction = 0.0, sup_gap = 0.0, violations = 0.0, ess_sup = 0.0, homog = 0.0, order = 0.0;
  for (int t = 0; t < ctx.config.trials; ++t) {
    Rng rng = ctx.rng(t);
    FieldSequence fs = random_sequence(g, levels, ctx.band(), rng);
    const double p0 = rng.uniform(1.0, 4.0);
    const double q0 = rng.uniform(1.0, 4.0);
    reduction = std::max(reduction, rel(mixed_norm(fs, ctx.constant(p0), ctx.constant(q0)), classical_mixed(fs, p0, q0)));

    double sup = 0.0;
    for (const Field& f : fs) sup = std::max(sup, luxemburg_norm(f, p));
    sup_gap = std::max(sup_gap, std::abs(mixed_norm(fs, p, q_inf) - sup));

    const double n = mixed_norm(fs, p, q);
    fs = fs.scaled(rng.uniform(0.5, 1.5) / n);
    const double nf = mixed_norm(fs, p, q);
    if (std::abs(nf - 1.0) > tol.unit_ball) {
      const ExtendedReal rho = mixed_modular(fs, p, q);
      if ((nf <= 1.0) != (rho.is_finite() && rho.value() <= 1.0)) violations += 1.0;
    }

    ExtendedReal via_inner = ExtendedReal::from_double(0.0);
    const FieldSequence small = fs.scaled(0.5 / std::max(1e-300, [&] {
      double m = 0.0;
      for (const Field& f : fs) m = std::max(m, f.max_abs());
      return m;
    }()));
    for (const Field& f : small) via_inner = via_inner + inner_lambda(f, p_inf, q);
    ess_sup = std::max(ess_sup, rel(via_inner.value(), mixed_modular_ess_sup(small, q).value()));

    const double c = rng.uniform(-10.0, 10.0);
    homog = std::max(homog, rel(mixed_norm(fs.scaled(c), p, q), std::abs(c) * nf));
    // |f_j| <= |g_j| with g_j = f_j (1 + |noise|)
    std::vector<Field> bigger;
    for (const Field& f : fs) {
      Field b = f;
      for (std::size_t i = 0; i < b.size(); ++i) b[i] *= 1.0 + rng.uniform();
      bigger.push_back(std::move(b));
    }
    order = std::max(order, nf - mixed_norm(FieldSequence(std::move(bigger)), p, q));
  }
  ctx.upper("mixed.constant_reduction", reduction, 0.0, tol.mixed);
  ctx.upper("mixed.q_infinity_sup", sup_gap, 0.0, 0.0);
  ctx.upper("mixed.unit_ball_equivalence.violations", violations, 0.0, 0.0);
  ctx.upper("mixed.ess_sup_agreement", ess_sup, 0.0, 1e-8);
  ctx.upper("mixed.homogeneity", homog, 0.0, 1e-8);
  ctx.upper("mixed.monotone_in_modulus", order, 0.0, 1e-8);

  {
    Rng rng = ctx.rng(500);
    const FieldSequence fs = random_sequence(g, levels, ctx.band(), rng);
    std::vector<std::vector<bool>> masks;
    for (double r : {1.0, 2.0, 4.0, 8.0, 2.0 * g.half_width()}) masks.push_back(centered_box(g, r));
    const MonotoneLimitReport m = check_monotone_limit(fs, masks, p, q);
    ctx.upper("mixed.monotone_limit.gap", m.relative_gap, 0.0, 1e-6);
    ctx.upper("mixed.monotone_limit.non_decreasing", m.non_decreasing ? 0.0 : 1.0, 0.0, 0.0);
  }

  double holder = 0.0;
  const ExponentField p1 = ctx.exponent("p1"), p2 = ctx.exponent("p2");
  const ExponentField q1 = ctx.exponent("q1"), q2 = ctx.exponent("q2");
  for (int t = 0; t < ctx.config.trials; ++t) {
    Rng rng = ctx.rng(600 + t);
    const FieldSequence fs = random_sequence(g, levels, ctx.band(), rng);
    const FieldSequence gs = random_sequence(g, levels, ctx.band(), rng);
    holder = std::max(holder, check_holder(fs, gs, p1, p2, q1, q2).max_ratio);
  }
  ctx.upper("mixed.holder.max_ratio", holder, kHolderConstant, 0.0);
}

// ---------------------------------------------------------------- duality

void duality_suite(Context& ctx) {
  const Grid& g = ctx.grid;
  const auto& tol = ctx.config.tolerances;
  const std::size_t levels = static_cast<std::size_t>(ctx.config.J) + 1;
  const ExponentField p = ctx.exponent("p");
  const ExponentField q = ctx.exponent("q");

  if (p.plus().is_infinite() || !q.is_finite_valued()) {
    ctx.trivial("duality.extremal_witness");
  } else {
    double beta = 0.0, feas = 0.0, pair = kInf, step1 = 0.0;
    for (int t = 0; t < ctx.config.trials; ++t) {
      Rng rng = ctx.rng(t);
      const FieldSequence fs = random_sequence(g, levels, ctx.band(), rng);
      const ExtremalWitness w = extremal_witness(fs, p, q);
      double sum = 0.0;
      for (double b : w.betas) sum += b;
      beta = std::max(beta, std::abs(sum - 1.0));
      feas = std::max(feas, mixed_norm(w.h, conjugate(p), conjugate(q)));
      pair = std::min(pair, pairing(fs, w.h) / w.K);
      step1 = std::max(step1, random_dual_search(fs, p, q, 6, ctx.config.seed + t).max_ratio);
    }
    ctx.upper("duality.beta_sum", beta, 0.0, 1e-5);
    ctx.upper("duality.witness_feasibility", feas, 1.0, tol.duality);
    ctx.lower("duality.witness_pairing_over_K", pair, 0.999, 0.0);
    ctx.upper("duality.step1_upper_over_K", step1, kHolderConstant, 0.0);
  }

  double worst = 1.0;
  for (int t = 0; t < ctx.config.trials; ++t) {
    Rng rng = ctx.rng(100 + t);
    const Field f = random_band_limited(g, ctx.band(), rng);
    const auto r = verify_norm_conjugate(f, p, 6, ctx.config.seed + t);
    worst = std::max(worst, std::max(r.ratio, 1.0 / r.ratio));
  }
  ctx.upper("duality.norm_conjugate.worst_factor", worst, 2.0, 0.0);

  // Exponents with infinite parts on both sides exercise all three pieces.
  const ExponentField ps = blend(p, box_mask(g, -kInf, 1.0), kInf);
  const ExponentField qs = blend(q, box_mask(g, -1.0, kInf), kInf);
  double split_low = kInf, split_feas = 0.0;
  for (int t = 0; t < ctx.config.trials; ++t) {
    Rng rng = ctx.rng(200 + t);
    const FieldSequence fs = random_sequence(g, levels, ctx.band(), rng);
    const SplitDualityReport r = split_duality(fs, ps, qs, 1e-6);
    split_low = std::min(split_low, r.best / r.K);
    for (double v : r.piece_feasibility) split_feas = std::max(split_feas, v);
  }
  ctx.lower("duality.split.best_over_K", split_low, 1.0 / kHolderConstant, 0.0);
  ctx.upper("duality.split.witness_feasibility", split_feas, 1.0, tol.duality);
}

// ---------------------------------------------------------------- littlewood-paley

void lp_suite(Context& ctx) {
  const Grid& g = ctx.grid;
  const auto& tol = ctx.config.tolerances;
  const ResolutionOfUnity& rou = ctx.rou();
  const int n = g.dim();
  ctx.upper("lp.partition_of_unity", rou.partition_residual(), 0.0, tol.partition);

  const ExponentField p = ctx.exponent("p");
  const ExponentField q = ctx.exponent("q");
  const ExponentField s = ctx.exponent("s");

  {
    // Modes with |xi| < 1/2 only reach the j = 0 block.
    Rng rng = ctx.rng(0);
    std::vector<double> a(6);
    for (double& v : a) v = rng.uniform(-1.0, 1.0);
    const double w = std::numbers::pi / g.half_width();
    Field f = Field::sample(g, [&](const Grid::Point& x) {
      double v = a[0];
      for (int k = 1; k <= 2; ++k)
        for (int ax = 0; ax < n; ++ax) v += a[2 * k - 1 + ax] * std::cos(k * w * x[ax] + a[5]);
      return v;
    });
    f = band_limit(f, 0.5);
    ctx.upper("lp.single_block_identity", rel(besov_norm(f, s, p, q, rou), luxemburg_norm(f, p)), 0.0, 1e-7);
  }

  double oracle = 0.0;
  for (int t = 0; t < ctx.config.trials; ++t) {
    Rng rng = ctx.rng(10 + t);
    const Field f = random_band_limited(g, ctx.band(), rng);
    const double s0 = rng.uniform(-1.0, 2.0), p0 = rng.uniform(1.0, 4.0), q0 = rng.uniform(1.0, 4.0);
    const FieldSequence blocks = lp_blocks(f, rou);
    double sum = 0.0;
    for (std::size_t j = 0; j < blocks.levels(); ++j)
      sum += std::pow(std::exp2(j * s0) * constant_exponent_norm(blocks[j], ExtendedReal::from_double(p0)), q0);
    const ExponentField se = ExponentField::constant(g, ExtendedReal::from_double(s0), ExponentKind::smoothness);
    oracle = std::max(oracle, rel(besov_norm(f, se, ctx.constant(p0), ctx.constant(q0), rou), std::pow(sum, 1.0 / q0)));
  }
  ctx.upper("lp.classical_besov_oracle", oracle, 0.0, tol.besov);

  {
    const ExponentField a0 = ExponentField::constant(g, ExtendedReal::from_double(0.7), ExponentKind::smoothness);
    const auto r0 = check_lemma_eta_shift(a0, 0.0, n + 2.0, ctx.config.J);
    ctx.upper("lp.eta_shift.constant_alpha", std::abs(r0.constant - 1.0), 0.0, 0.0);
    const double R = local_log_holder(s);
    const auto r = check_lemma_eta_shift(s, R, n + 2.0, ctx.config.J);
    ctx.upper("lp.eta_shift.variable_alpha.spread", r.spread, 2.0, 0.0);
    for (std::size_t j = 0; j < r.constants.size(); ++j)
      ctx.report.plot.push_back({"eta_shift_constant", static_cast<int>(j), r.constants[j]});
  }

  {
    Rng rng = ctx.rng(50);
    const Field f = random_band_limited(g, ctx.band(), rng);
    const auto r = verify_eta_convolution(f, p, n + 2.0, ctx.config.J);
    ctx.upper("lp.eta_convolution.spread", r.spread, kEtaSpreadLimit, 0.0);
    ctx.upper("lp.eta_convolution.max_ratio", r.max_ratio, r.bound, 0.0);
    for (std::size_t j = 0; j < r.ratios.size(); ++j)
      ctx.report.plot.push_back({"eta_convolution_ratio", static_cast<int>(j), r.ratios[j]});
  }

  {
    Rng rng = ctx.rng(60);
    const FieldSequence fs = random_sequence(g, static_cast<std::size_t>(ctx.config.J) + 1, ctx.band(), rng);
    const double m = n + local_log_holder(reciprocal(q)) + 1.0;
    const auto r = verify_mixed_eta(fs, p, q, m);
    ctx.upper("lp.mixed_eta.ratio", r.ratio, r.bound, 0.0);
  }
}

// ---------------------------------------------------------------- hardy

void hardy_suite(Context& ctx) {
  const Grid& g = ctx.grid;
  const std::size_t levels = static_cast<std::size_t>(ctx.config.J) + 1;
  const ExponentField p = ctx.exponent("p");
  auto run_case = [&](const std::string& id, double a, const ExponentField& q, std::uint64_t stream) {
    const double bound = hardy_bound(a, q.minus(), default_gamma_grid(q.minus()));
    double worst = 0.0;
    for (int t = 0; t < ctx.config.trials; ++t) {
      Rng rng = ctx.rng(stream + t);
      const FieldSequence gs = random_sequence(g, levels, ctx.band(), rng);
      const HardyReport r = verify_hardy(gs, a, p, q, default_gamma_grid(q.minus()));
      worst = std::max({worst, r.ratio_G, r.ratio_H});
    }
    ctx.upper(id, worst, bound, ctx.config.tolerances.hardy);
  };
  std::uint64_t stream = 0;
  for (double a : {0.25, 0.5, 0.75}) {
    for (double q0 : {1.5, 2.0, 4.0}) {
      char id[64];
      std::snprintf(id, sizeof id, "hardy.a=%g.q=%g", a, q0);
      run_case(id, a, ctx.constant(q0), stream);
      stream += 100;
    }
    char id[64];
    std::snprintf(id, sizeof id, "hardy.a=%g.q=config", a);
    run_case(id, a, ctx.exponent("q"), stream);
    stream += 100;
  }
}

// ---------------------------------------------------------------- commutator

void commutator_suite(Context& ctx) {
  const Grid& g = ctx.grid;
  const auto& tol = ctx.config.tolerances;
  const ResolutionOfUnity& rou = ctx.rou();
  const int n = g.dim();

  double vanish = 0.0, bilinear = 0.0;
  for (int t = 0; t < ctx.config.trials; ++t) {
    Rng rng = ctx.rng(t);
    const Field f = random_band_limited(g, ctx.band(), rng);
    std::vector<double> c(n);
    for (double& v : c) v = rng.uniform(-2.0, 2.0);
    double grad = 0.0;
    for (int a = 0; a < n; ++a) grad = std::max(grad, spectral_derivative(f, a).max_abs());
    double cmax = 0.0;
    for (double v : c) cmax = std::max(cmax, std::abs(v));
    for (const Field& blk : commutator_sequence(VectorField::constant(g, c), f, rou))
      vanish = std::max(vanish, blk.max_abs() / (cmax * grad));

    std::vector<Field> vc, wc;
    for (int k = 0; k < n; ++k) {
      vc.push_back(random_band_limited(g, ctx.band(), rng));
      wc.push_back(random_band_limited(g, ctx.band(), rng));
    }
    const VectorField V(vc), W(wc);
    const double a = rng.uniform(-2.0, 2.0), b = rng.uniform(-2.0, 2.0);
    const FieldSequence lhs = commutator_sequence(a * V + b * W, f, rou);
    const FieldSequence cv = commutator_sequence(V, f, rou);
    const FieldSequence cw = commutator_sequence(W, f, rou);
    double scale = 0.0;
    for (std::size_t j = 0; j < lhs.levels(); ++j)
      scale = std::max({scale, std::abs(a) * cv[j].max_abs(), std::abs(b) * cw[j].max_abs()});
    for (std::size_t j = 0; j < lhs.levels(); ++j) {
      const Field d = lhs[j] - cv[j] * a - cw[j] * b;
      bilinear = std::max(bilinear, scale > 0.0 ? d.max_abs() / scale : 0.0);
    }
  }
  ctx.upper("commutator.constant_velocity_vanishing", vanish, 0.0, tol.commutator);
  ctx.upper("commutator.bilinearity", bilinear, 0.0, 1e-12);

  const auto& ex = ctx.config.exponents;
  SweepConfig base;
  base.dim = n;
  base.points = g.points_per_axis();
  base.half_width = g.half_width();
  base.J = ctx.config.J;
  base.p1 = ex.at("p1");
  base.p2 = ex.at("p2");
  base.q = ex.at("q");
  base.q1 = ex.at("q1");
  base.q2 = ex.at("q2");

  auto sweep = [&](const std::string& id, SweepConfig c, Theorem th, std::uint64_t salt) {
    try {
      const SweepSummary s = constant_sweep(c, th, ctx.config.trials, ctx.config.seed ^ salt);
      for (std::size_t v = 0; v < s.variants.size(); ++v) {
        double mx = 0.0, factor = 1.0;
        for (std::size_t t = 0; t < s.ratios[v].size(); ++t) {
          const double r0 = s.ratios[v][t], r1 = s.refined[v][t];
          mx = std::max(mx, r0);
          if (std::max(r0, r1) > kNegligibleRatio) factor = std::max(factor, std::max(r0, r1) / std::min(r0, r1));
          ctx.report.plot.push_back({id + "." + s.variants[v] + ".trial_ratio", static_cast<int>(t), r0});
        }
        ctx.upper(id + "." + s.variants[v] + ".max_ratio", mx, kInf, 0.0);
        ctx.upper(id + "." + s.variants[v] + ".refinement_factor", factor, 2.0, 0.0);
      }
    } catch (const std::exception& e) {
      ctx.failed(id);
      ctx.report.environment["error." + id] = e.what();
    }
  };
  SweepConfig t1 = base;
  t1.s = ex.at("s");
  sweep("commutator.theorem1", t1, Theorem::one, 0x11);
  SweepConfig t2 = t1;
  sweep("commutator.theorem2", t2, Theorem::two, 0x21);
  // Negative-smoothness branch of theorem 2.
  SweepConfig t2n = t1;
  t2n.s = {"constant", {{"value", -0.5}}};
  sweep("commutator.theorem2_negative", t2n, Theorem::two, 0x22);
  SweepConfig t3 = base;
  t3.s = ex.at("s1");
  t3.s2 = ex.at("s2");
  sweep("commutator.theorem3", t3, Theorem::three, 0x31);
  if (n == 2) {
    SweepConfig td = t1;
    td.divergence_free = true;
    sweep("commutator.theorem1_divergence_free", td, Theorem::one, 0x51);
  }
  SweepConfig tc = t1;
  tc.constant_velocity = true;
  sweep("commutator.theorem1_constant_velocity", tc, Theorem::one, 0x41);
}

}  // namespace

SuiteReport run(const SuiteConfig& config) {
  SuiteReport report;
  report.config = to_json(config);
  report.environment["library"] = "varbesov 0.1.0";
  report.environment["simd"] = std::string(kernels::name(kernels::active_backend()));
  const std::map<std::string, std::function<void(Context&)>> suites = {
      {"lebesgue", lebesgue_suite}, {"mixed", mixed_suite},         {"duality", duality_suite},
      {"littlewood-paley", lp_suite}, {"hardy", hardy_suite}, {"commutator", commutator_suite}};
  const auto& order = known_suites();
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::string& name = order[k];
    if (std::find(config.suites.begin(), config.suites.end(), name) == config.suites.end()) continue;
    Context ctx(config, report, k + 1);
    try {
      suites.at(name)(ctx);
    } catch (const std::exception& e) {
      ctx.failed(name + ".error");
      report.environment["error." + name] = e.what();
    }
  }
  return report;
}

}  // namespace varbesov::suite
