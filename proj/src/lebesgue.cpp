#include "varbesov/lebesgue.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "varbesov/detail/profile.hpp"
#include "varbesov/kernels.hpp"
#include "varbesov/solver.hpp"

namespace varbesov {

ExtendedReal omega(double t, ExtendedReal p) {
  if (!(t >= 0.0)) throw std::invalid_argument("omega: t must be >= 0");
  if (t == 0.0) return ExtendedReal::from_double(0.0);
  if (p.is_plus_infinity()) return t <= 1.0 ? ExtendedReal::from_double(0.0) : ExtendedReal::infinity();
  return ExtendedReal::from_double(std::pow(t, p.value()));
}

ExtendedReal modular(const Field& f, const ExponentField& p) {
  require_same_grid(f.grid(), p.grid(), "modular");
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const ExtendedReal w = omega(std::abs(f[i]), p.at(i));
    if (w.is_infinite()) return ExtendedReal::infinity();
    sum += w.value();
  }
  return ExtendedReal::from_double(sum * f.grid().cell_volume());
}

double luxemburg_norm(const Field& f, const ExponentField& p) {
  // ess-sup exactly, not through the solver
  if (p.is_identically_infinite()) return f.max_abs();
  detail::ModularProfile prof(f, p, nullptr);
  if (prof.empty()) return 0.0;
  const auto t = solver::threshold([&](double u) { return prof.log_modular(0.0, u); }, prof.max_log());
  if (t.u == std::numeric_limits<double>::infinity())
    throw std::overflow_error("luxemburg_norm: norm exceeds the representable range");
  return std::exp(t.u);
}

double constant_exponent_norm(const Field& f, ExtendedReal p0) {
  if (p0.is_plus_infinity()) return f.max_abs();
  const double p = p0.value();
  if (p < 1.0) throw std::invalid_argument("constant_exponent_norm: p0 < 1");
  double s = 0.0;
  for (double v : f.values()) s += std::pow(std::abs(v), p);
  return std::pow(s * f.grid().cell_volume(), 1.0 / p);
}

}  // namespace varbesov
