#include "varbesov/mixed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "varbesov/detail/profile.hpp"
#include "varbesov/lebesgue.hpp"
#include "varbesov/solver.hpp"

namespace varbesov {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ExtendedReal from_log(double u) {
  if (u == kInf) return ExtendedReal::infinity();
  return ExtendedReal::from_double(std::exp(u));
}

double log_sum_exp(const std::vector<double>& u) {
  double hi = -kInf;
  for (double x : u) hi = std::max(hi, x);
  if (!std::isfinite(hi)) return hi;
  double s = 0.0;
  for (double x : u) s += std::exp(x - hi);
  return hi + std::log(s);
}

}  // namespace

FieldSequence::FieldSequence(std::vector<Field> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("FieldSequence: needs at least one level");
  for (const Field& f : entries_) require_same_grid(entries_.front().grid(), f.grid(), "FieldSequence");
}

FieldSequence FieldSequence::zeros(const Grid& grid, std::size_t levels) {
  return FieldSequence(std::vector<Field>(levels, Field(grid)));
}

bool FieldSequence::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Field& f) { return f.is_zero(); });
}

FieldSequence FieldSequence::scaled(double c) const {
  FieldSequence out = *this;
  for (Field& f : out.entries_) f *= c;
  return out;
}

FieldSequence FieldSequence::restricted(const std::vector<bool>& mask) const {
  std::vector<Field> out;
  out.reserve(entries_.size());
  for (const Field& f : entries_) out.push_back(restrict_to(f, mask));
  return FieldSequence(std::move(out));
}

ExtendedReal inner_lambda(const Field& f, const ExponentField& p, const ExponentField& q) {
  detail::ModularProfile prof(f, p, &q);
  if (prof.empty()) return ExtendedReal::from_double(0.0);
  return from_log(solver::threshold([&](double u) { return prof.log_modular(0.0, u); }, 0.0).u);
}

ExtendedReal mixed_modular_ess_sup(const FieldSequence& fs, const ExponentField& q) {
  require_same_grid(fs.grid(), q.grid(), "mixed_modular");
  double sum = 0.0;
  for (const Field& f : fs) {
    double term = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double t = std::abs(f[i]);
      if (t == 0.0) continue;
      if (q.is_infinite_at(i)) {
        if (t > 1.0) return ExtendedReal::infinity();
        continue;
      }
      term = std::max(term, std::pow(t, q.raw()[i]));
    }
    sum += term;
  }
  return ExtendedReal::from_double(sum);
}

ExtendedReal mixed_modular(const FieldSequence& fs, const ExponentField& p, const ExponentField& q) {
  if (p.is_identically_infinite()) return mixed_modular_ess_sup(fs, q);
  ExtendedReal sum = ExtendedReal::from_double(0.0);
  for (const Field& f : fs) sum = sum + inner_lambda(f, p, q);
  return sum;
}

double mixed_norm(const FieldSequence& fs, const ExponentField& p, const ExponentField& q) {
  if (q.is_identically_infinite()) {
    double best = 0.0;
    for (const Field& f : fs) best = std::max(best, luxemburg_norm(f, p));
    return best;
  }
  std::vector<detail::ModularProfile> profiles;
  double max_log = -kInf;
  for (const Field& f : fs) {
    detail::ModularProfile prof(f, p, &q);
    if (prof.empty()) continue;
    max_log = std::max(max_log, prof.max_log());
    profiles.push_back(std::move(prof));
  }
  if (profiles.empty()) return 0.0;

  // Inner solves are warm-started from the previous outer iterate.
  std::vector<double> warm(profiles.size(), 0.0);
  std::vector<double> u(profiles.size());
  auto outer = [&](double m) {
    for (std::size_t j = 0; j < profiles.size(); ++j) {
      const auto& prof = profiles[j];
      u[j] = solver::threshold([&](double x) { return prof.log_modular(m, x); }, warm[j]).u;
      if (u[j] == kInf) return kInf;
      if (std::isfinite(u[j])) warm[j] = u[j];
    }
    return log_sum_exp(u);
  };
  solver::Options opt;
  opt.tolerance = 1e-12;
  const auto t = solver::threshold(outer, max_log, opt);
  if (t.u == kInf) throw std::overflow_error("mixed_norm: norm exceeds the representable range");
  return std::exp(t.u);
}

MonotoneLimitReport check_monotone_limit(const FieldSequence& fs,
                                         const std::vector<std::vector<bool>>& masks,
                                         const ExponentField& p, const ExponentField& q) {
  if (masks.empty()) throw std::invalid_argument("check_monotone_limit: no truncation sets");
  for (std::size_t n = 0; n < masks.size(); ++n) {
    if (masks[n].size() != fs.grid().size())
      throw std::invalid_argument("check_monotone_limit: mask size mismatch");
    if (n > 0)
      for (std::size_t i = 0; i < masks[n].size(); ++i)
        if (masks[n - 1][i] && !masks[n][i])
          throw std::invalid_argument("check_monotone_limit: truncation sets are not nested");
  }
  if (!std::all_of(masks.back().begin(), masks.back().end(), [](bool b) { return b; }))
    throw std::invalid_argument("check_monotone_limit: last truncation set must cover the grid");

  MonotoneLimitReport r;
  r.full_norm = mixed_norm(fs, p, q);
  double top = 0.0;
  for (const auto& mask : masks) {
    const double v = mixed_norm(fs.restricted(mask), p, q);
    // Solver tolerance is ~1e-12 relative; anything smaller is noise.
    if (!r.norms.empty() && v < r.norms.back() * (1.0 - 1e-10)) r.non_decreasing = false;
    r.norms.push_back(v);
    top = std::max(top, v);
  }
  r.relative_gap = r.full_norm == 0.0 ? std::abs(top) : std::abs(top - r.full_norm) / r.full_norm;
  r.passed = r.non_decreasing && r.relative_gap <= 1e-6;
  return r;
}

HolderReport check_holder(const FieldSequence& fs, const FieldSequence& gs, const ExponentField& p1,
                          const ExponentField& p2, const ExponentField& q1, const ExponentField& q2) {
  if (fs.levels() != gs.levels()) throw std::invalid_argument("check_holder: level mismatch");
  const ExponentField p = harmonic_sum(p1, p2);
  const ExponentField q = harmonic_sum(q1, q2);
  auto ratio = [](double num, double den) { return den == 0.0 ? 0.0 : num / den; };

  std::vector<Field> prod;
  HolderReport r;
  double sup_f = 0.0;
  for (std::size_t j = 0; j < fs.levels(); ++j) {
    prod.push_back(multiply(fs[j], gs[j]));
    const double nf = luxemburg_norm(fs[j], p1);
    sup_f = std::max(sup_f, nf);
    r.scalar_ratio =
        std::max(r.scalar_ratio, ratio(luxemburg_norm(prod.back(), p), nf * luxemburg_norm(gs[j], p2)));
  }
  const FieldSequence fg(std::move(prod));
  r.general_ratio = ratio(mixed_norm(fg, p, q), mixed_norm(fs, p1, q1) * mixed_norm(gs, p2, q2));
  const double g_q2 = mixed_norm(gs, p2, q2);
  r.sup_ratio = ratio(mixed_norm(fg, p, q2), sup_f * g_q2);
  r.max_ratio = std::max({r.scalar_ratio, r.general_ratio, r.sup_ratio});
  r.passed = r.max_ratio <= kHolderConstant;
  return r;
}

}  // namespace varbesov
