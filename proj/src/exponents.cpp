#include "varbesov/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "varbesov/kernels.hpp"

namespace varbesov {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> check_values(std::vector<double> v, ExponentKind kind) {
  for (double x : v) {
    if (std::isnan(x)) throw std::invalid_argument("ExponentField: NaN sample");
    if (kind == ExponentKind::integrability) {
      if (x < 1.0) throw std::invalid_argument("ExponentField: integrability exponent below 1");
    } else if (!std::isfinite(x)) {
      throw std::invalid_argument("ExponentField: smoothness exponent must be finite");
    }
  }
  return v;
}

}  // namespace

ExponentField::ExponentField(Grid grid, std::vector<double> values, ExponentKind kind)
    : grid_(grid), values_(check_values(std::move(values), kind)), kind_(kind) {
  if (values_.size() != grid_.size()) throw std::invalid_argument("ExponentField: size mismatch");
  auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
  min_ = *lo;
  max_ = *hi;
}

ExponentField ExponentField::constant(const Grid& grid, ExtendedReal value, ExponentKind kind) {
  ExponentField f(grid, std::vector<double>(grid.size(), value.to_double()), kind);
  if (value.is_finite()) f.at_infinity_ = value.value();
  return f;
}

bool ExponentField::is_infinite_at(std::size_t i) const { return values_[i] == kInf; }

bool ExponentField::is_finite_valued() const { return max_ != kInf; }

bool ExponentField::is_identically_infinite() const { return min_ == kInf; }

ExponentField ExponentField::with_value_at_infinity(double v) const {
  ExponentField out = *this;
  out.at_infinity_ = v;
  return out;
}

ExponentField conjugate(const ExponentField& p) {
  if (p.kind() != ExponentKind::integrability)
    throw std::invalid_argument("conjugate: needs an integrability exponent");
  std::vector<double> v(p.size());
  auto raw = p.raw();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = raw[i];
    if (x == 1.0) v[i] = kInf;
    else if (x == kInf) v[i] = 1.0;
    else v[i] = x / (x - 1.0);
  }
  return ExponentField(p.grid(), std::move(v), ExponentKind::integrability);
}

ExponentField reciprocal(const ExponentField& p) {
  std::vector<double> v(p.size());
  auto raw = p.raw();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = raw[i] == kInf ? 0.0 : 1.0 / raw[i];
  ExponentField out(p.grid(), std::move(v), ExponentKind::smoothness);
  if (auto g = p.value_at_infinity()) out = out.with_value_at_infinity(1.0 / *g);
  return out;
}

ExponentField harmonic_sum(const ExponentField& a, const ExponentField& b) {
  require_same_grid(a.grid(), b.grid(), "harmonic_sum");
  std::vector<double> v(a.size());
  auto ra = a.raw();
  auto rb = b.raw();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double inv = (ra[i] == kInf ? 0.0 : 1.0 / ra[i]) + (rb[i] == kInf ? 0.0 : 1.0 / rb[i]);
    if (inv > 1.0 + 1e-15)
      throw std::invalid_argument("harmonic_sum: 1/a + 1/b exceeds 1, result leaves [1, inf]");
    v[i] = inv == 0.0 ? kInf : std::max(1.0, 1.0 / inv);
  }
  return ExponentField(a.grid(), std::move(v), ExponentKind::integrability);
}

ExponentField add(const ExponentField& a, const ExponentField& b) {
  require_same_grid(a.grid(), b.grid(), "add");
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.raw()[i] + b.raw()[i];
  return ExponentField(a.grid(), std::move(v), ExponentKind::smoothness);
}

ExponentField shift(const ExponentField& a, double c) {
  std::vector<double> v(a.raw().begin(), a.raw().end());
  for (double& x : v) x += c;
  return ExponentField(a.grid(), std::move(v), ExponentKind::smoothness);
}

ExponentField blend(const ExponentField& a, const std::vector<bool>& mask, double fill) {
  if (mask.size() != a.size()) throw std::invalid_argument("blend: mask size mismatch");
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = mask[i] ? a.raw()[i] : fill;
  return ExponentField(a.grid(), std::move(v), a.kind());
}

std::vector<OffsetSpread> scan_offsets(const ExponentField& g) {
  if (!g.is_finite_valued()) throw std::invalid_argument("scan_offsets: g must be finite-valued");
  const Grid& grid = g.grid();
  const auto& k = kernels::active();
  const double h = grid.spacing();
  const std::size_t n = grid.points_per_axis();
  const double* v = g.raw().data();
  std::vector<OffsetSpread> out;

  if (grid.dim() == 1) {
    out.reserve(n - 1);
    for (std::size_t d = 1; d < n; ++d)
      out.push_back({static_cast<double>(d) * h, k.max_abs_diff(v, v + d, n - d)});
    return out;
  }

  auto sampled = [](std::size_t d) { return d <= 16 || d % 8 == 0; };
  for (std::size_t di = 0; di < n; ++di) {
    if (!sampled(di)) continue;
    for (std::ptrdiff_t dk = -static_cast<std::ptrdiff_t>(n) + 1; dk < static_cast<std::ptrdiff_t>(n);
         ++dk) {
      const std::size_t adk = static_cast<std::size_t>(std::abs(dk));
      if (!sampled(adk) || (di == 0 && dk <= 0)) continue;
      double m = 0.0;
      const std::size_t len = n - adk;
      for (std::size_t i = 0; i + di < n; ++i) {
        const double* row_a = v + i * n;
        const double* row_b = v + (i + di) * n;
        m = dk >= 0 ? std::max(m, k.max_abs_diff(row_a, row_b + adk, len))
                    : std::max(m, k.max_abs_diff(row_a + adk, row_b, len));
      }
      out.push_back({h * std::hypot(static_cast<double>(di), static_cast<double>(dk)), m});
    }
  }
  return out;
}

double local_log_holder(const ExponentField& g) {
  double best = 0.0;
  for (const OffsetSpread& o : scan_offsets(g))
    best = std::max(best, o.max_diff * std::log(std::numbers::e + 1.0 / o.distance));
  return best;
}

double decay_log_holder(const ExponentField& g) {
  const auto g_inf = g.value_at_infinity();
  if (!g_inf) throw std::invalid_argument("decay_log_holder: no value at infinity attached");
  if (!g.is_finite_valued()) throw std::invalid_argument("decay_log_holder: g must be finite-valued");
  const Grid& grid = g.grid();
  double best = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    best = std::max(best, std::abs(g.raw()[i] - *g_inf) * std::log(std::numbers::e + grid.radius(i)));
  return best;
}

LogHolderConstants log_holder_constants(const ExponentField& g) {
  return {local_log_holder(g), decay_log_holder(g)};
}

bool is_known_family(const std::string& name) {
  return name == "constant" || name == "step" || name == "log_decay" || name == "oscillation";
}

ExponentField make_family(const Grid& grid, const FamilySpec& spec, ExponentKind kind) {
  auto param = [&](const char* key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
      throw std::invalid_argument("family '" + spec.name + "' is missing parameter '" + key + "'");
    return it->second;
  };
  auto param_or = [&](const char* key, double fallback) {
    auto it = spec.params.find(key);
    return it == spec.params.end() ? fallback : it->second;
  };

  std::vector<double> v(grid.size());
  const double L = grid.half_width();
  if (spec.name == "constant") {
    std::fill(v.begin(), v.end(), param("value"));
  } else if (spec.name == "step") {
    const double left = param("left");
    const double right = param("right");
    const double threshold = param_or("threshold", 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = grid.point(i)[0] < threshold ? left : right;
  } else if (spec.name == "log_decay") {
    const double a = param("a");
    const double b = param("b");
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = a + b / std::log(std::numbers::e + grid.radius(i));
  } else if (spec.name == "oscillation") {
    const double a = param("a");
    const double b = param("b");
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Grid::Point x = grid.point(i);
      double bump = (1.0 + std::cos(std::numbers::pi * x[0] / L)) / 2.0;
      if (grid.dim() == 2) bump *= (1.0 + std::cos(std::numbers::pi * x[1] / L)) / 2.0;
      v[i] = a + b * bump;
      if (kind == ExponentKind::integrability) v[i] = std::max(1.0, v[i]);
    }
  } else {
    throw std::invalid_argument("unknown exponent family '" + spec.name + "'");
  }
  ExponentField out(grid, std::move(v), kind);
  const double boundary = out.raw()[0];
  return std::isfinite(boundary) ? out.with_value_at_infinity(boundary) : out;
}

}  // namespace varbesov
