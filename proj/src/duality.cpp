#include "varbesov/duality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "varbesov/lebesgue.hpp"
#include "varbesov/sampling.hpp"

namespace varbesov {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double inv(double q) { return q == kInf ? 0.0 : 1.0 / q; }

std::vector<bool> finite_mask(const ExponentField& e) {
  std::vector<bool> m(e.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = !e.is_infinite_at(i);
  return m;
}

std::vector<bool> mask_and(const std::vector<bool>& a, const std::vector<bool>& b) {
  std::vector<bool> m(a.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = a[i] && b[i];
  return m;
}

std::vector<bool> mask_not(const std::vector<bool>& a) {
  std::vector<bool> m(a.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = !a[i];
  return m;
}

// |f|^{min(p, 8) - 1} modulated by smooth noise, or bare |noise|.
Field shaped_candidate(const Field& f, const ExponentField& p, Rng& rng, bool shaped) {
  const Grid& grid = f.grid();
  const Field noise = random_band_limited(grid, 0.25 * grid.nyquist(), rng);
  const double nmax = noise.max_abs();
  const double fmax = f.max_abs();
  Field g(grid);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double z = nmax > 0.0 ? noise[i] / nmax : 0.0;
    if (shaped) {
      const double t = fmax > 0.0 ? std::abs(f[i]) / fmax : 0.0;
      const double e = std::min(p.raw()[i], 8.0) - 1.0;
      g[i] = (t == 0.0 ? 0.0 : std::pow(t, e)) * (1.0 + 0.5 * z);
    } else {
      g[i] = std::abs(z);
    }
  }
  return g;
}

// A unit-ball element of L^{p'} that nearly norms f: the extremal function of
// chi_{p<inf} f or the normalised indicator of the near-argmax set of
// chi_{p=inf} |f|, whichever pairs better.
Field norming_function(const Field& f, const ExponentField& p) {
  const Grid& grid = f.grid();
  const std::vector<bool> A = finite_mask(p);
  Field best(grid);
  double best_pair = 0.0;

  const Field fa = restrict_to(f, A);
  if (!fa.is_zero()) {
    const ExponentField pa = blend(p, A, 2.0);
    const ExponentField one = ExponentField::constant(grid, ExtendedReal::from_double(1.0));
    ExtremalWitness w = extremal_witness(FieldSequence({fa}), pa, one);
    const double pr = integrate(multiply(abs(f), w.h[0]));
    if (pr > best_pair) {
      best_pair = pr;
      best = w.h[0];
    }
  }
  const Field fb = restrict_to(f, mask_not(A));
  if (!fb.is_zero()) {
    const double top = fb.max_abs();
    std::size_t count = 0;
    for (std::size_t i = 0; i < fb.size(); ++i) count += std::abs(fb[i]) >= top * (1.0 - 1e-12);
    const double level = 1.0 / (static_cast<double>(count) * grid.cell_volume());
    Field g(grid);
    for (std::size_t i = 0; i < fb.size(); ++i) g[i] = std::abs(fb[i]) >= top * (1.0 - 1e-12) ? level : 0.0;
    const double pr = integrate(multiply(abs(f), g));
    if (pr > best_pair) best = std::move(g);
  }
  return best;
}

}  // namespace

double pairing(const FieldSequence& fs, const FieldSequence& gs) {
  if (fs.levels() != gs.levels()) throw std::invalid_argument("pairing: level mismatch");
  require_same_grid(fs.grid(), gs.grid(), "pairing");
  double total = 0.0;
  for (std::size_t j = 0; j < fs.levels(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < fs[j].size(); ++i) s += std::abs(fs[j][i]) * std::abs(gs[j][i]);
    total += s;
  }
  return total * fs.grid().cell_volume();
}

ExtremalWitness extremal_witness(const FieldSequence& fs, const ExponentField& p, const ExponentField& q) {
  if (p.plus().is_infinite()) throw std::invalid_argument("extremal_witness: needs p+ < inf (see infinity_witness)");
  if (!q.is_finite_valued()) throw std::invalid_argument("extremal_witness: q must be finite-valued");
  if (fs.is_zero()) throw std::invalid_argument("extremal_witness: fs is identically zero");
  const Grid& grid = fs.grid();
  ExtremalWitness w{FieldSequence::zeros(grid, fs.levels()), mixed_norm(fs, p, q), {}, {}};
  const double logK = std::log(w.K);
  for (std::size_t j = 0; j < fs.levels(); ++j) {
    const Field& f = fs[j];
    if (f.is_zero()) {
      w.betas.push_back(0.0);
      continue;
    }
    const double beta = inner_lambda(f * (1.0 / w.K), p, q).value();
    w.betas.push_back(beta);
    if (beta < kBetaDropThreshold) {
      w.dropped.push_back(j);
      continue;
    }
    const double lb = std::log(beta);
    Field& h = w.h[j];
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] == 0.0) continue;
      const double r = inv(q.raw()[i]);
      const double pe = p.raw()[i];
      h[i] = std::exp((1.0 - r) * lb + (pe - 1.0) * (std::log(std::abs(f[i])) - logK - r * lb));
    }
  }
  return w;
}

InfinityWitness infinity_witness_full(const FieldSequence& fs, const ExponentField& q, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("infinity_witness: eps must be positive");
  if (!q.is_finite_valued()) throw std::invalid_argument("infinity_witness: q must be finite-valued");
  const Grid& grid = fs.grid();
  const ExponentField p_inf = ExponentField::constant(grid, ExtendedReal::infinity());
  InfinityWitness w{FieldSequence::zeros(grid, fs.levels()), mixed_norm(fs, p_inf, q), {}, {}};
  for (std::size_t j = 0; j < fs.levels(); ++j) {
    const Field& f = fs[j];
    if (w.K == 0.0 || f.is_zero()) {
      w.betas.push_back(0.0);
      w.support.push_back(0);
      continue;
    }
    const double beta = inner_lambda(f * (1.0 / w.K), p_inf, q).value();
    w.betas.push_back(beta);
    std::vector<double> scaled(f.size());
    double top = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      scaled[i] = std::abs(f[i]) / (w.K * std::pow(beta, inv(q.raw()[i])));
      top = std::max(top, scaled[i]);
    }
    const double cut = top - eps / (w.K * std::ldexp(1.0, static_cast<int>(j) - 1));
    std::size_t count = 0;
    for (double v : scaled) count += v > cut;
    w.support.push_back(count);
    const double measure = static_cast<double>(count) * grid.cell_volume();
    Field& h = w.h[j];
    for (std::size_t i = 0; i < f.size(); ++i)
      if (scaled[i] > cut) h[i] = std::pow(beta, 1.0 - inv(q.raw()[i])) / measure;
  }
  return w;
}

FieldSequence infinity_witness(const FieldSequence& fs, const ExponentField& q, double eps) {
  return infinity_witness_full(fs, q, eps).h;
}

DualSearchResult random_dual_search(const FieldSequence& fs, const ExponentField& p, const ExponentField& q,
                                    int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("random_dual_search: trials must be >= 1");
  DualSearchResult r;
  r.K = mixed_norm(fs, p, q);
  if (r.K == 0.0) return r;
  const ExponentField pc = conjugate(p);
  const ExponentField qc = conjugate(q);
  auto consider = [&](double v) {
    r.pairings.push_back(v);
    r.best = std::max(r.best, v);
    r.max_ratio = std::max(r.max_ratio, v / r.K);
  };
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
    const bool shaped = t % 3 != 2;
    std::vector<Field> g;
    for (const Field& f : fs) g.push_back(shaped_candidate(f, p, rng, shaped) * rng.uniform(0.1, 1.0));
    FieldSequence gs(std::move(g));
    const double n = mixed_norm(gs, pc, qc);
    if (n == 0.0) continue;
    consider(pairing(fs, gs.scaled(1.0 / n)));
  }
  if (p.plus().is_finite() && q.is_finite_valued()) {
    r.witness_included = true;
    consider(pairing(fs, extremal_witness(fs, p, q).h));
  }
  return r;
}

NormConjugateReport verify_norm_conjugate(const Field& f, const ExponentField& p, int trials,
                                          std::uint64_t seed) {
  NormConjugateReport r;
  r.norm = luxemburg_norm(f, p);
  if (r.norm == 0.0) {
    r.passed = true;
    return r;
  }
  const ExponentField pc = conjugate(p);
  r.best_pairing = integrate(multiply(abs(f), norming_function(f, p)));
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
    const Field g = shaped_candidate(f, p, rng, t % 3 != 2);
    const double n = luxemburg_norm(g, pc);
    if (n == 0.0) continue;
    r.best_pairing = std::max(r.best_pairing, integrate(multiply(abs(f), g)) / n);
  }
  r.ratio = r.best_pairing / r.norm;
  r.passed = r.ratio >= 0.5 && r.ratio <= 2.0;
  return r;
}

SplitDualityReport split_duality(const FieldSequence& fs, const ExponentField& p, const ExponentField& q,
                                 double eps) {
  const Grid& grid = fs.grid();
  const std::vector<bool> A = finite_mask(p);
  const std::vector<bool> B = finite_mask(q);
  const std::vector<bool> masks[3] = {mask_and(A, B), mask_not(B), mask_and(B, mask_not(A))};
  const ExponentField pc = conjugate(p);
  const ExponentField qc = conjugate(q);

  SplitDualityReport r;
  r.K = mixed_norm(fs, p, q);
  bool feasible = true;
  for (int k = 0; k < 3; ++k) {
    const FieldSequence piece = fs.restricted(masks[k]);
    if (piece.is_zero()) continue;
    r.piece_norms[k] = mixed_norm(piece, p, q);
    FieldSequence h = FieldSequence::zeros(grid, fs.levels());
    if (k == 0) {
      h = extremal_witness(piece, blend(p, masks[k], 2.0), blend(q, masks[k], 2.0)).h;
    } else if (k == 1) {
      // q = inf here: the norm is sup_j ||f_j||_p, attained at one level.
      std::size_t top = 0;
      double best = -1.0;
      for (std::size_t j = 0; j < piece.levels(); ++j) {
        const double v = luxemburg_norm(piece[j], p);
        if (v > best) {
          best = v;
          top = j;
        }
      }
      h[top] = norming_function(piece[top], p);
    } else {
      h = infinity_witness(piece, blend(q, masks[k], 2.0), eps);
    }
    r.piece_pairings[k] = pairing(fs, h);
    r.piece_feasibility[k] = mixed_norm(h, pc, qc);
    feasible = feasible && r.piece_feasibility[k] <= 1.0 + 1e-4;
    r.best = std::max(r.best, r.piece_pairings[k]);
  }
  r.passed = feasible && r.best >= r.K / kHolderConstant && r.best <= kHolderConstant * r.K;
  return r;
}

}  // namespace varbesov
