#include "varbesov/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "varbesov/fft.hpp"
#include "varbesov/kernels.hpp"
#include "varbesov/lebesgue.hpp"

namespace varbesov {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double bump(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

}  // namespace

double smooth_step(double r) {
  r = std::abs(r);
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  const double a = bump(2.0 - r);
  return a / (a + bump(r - 1.0));
}

ResolutionOfUnity::ResolutionOfUnity(const Grid& grid, int J) : grid_(grid), J_(J) {
  if (J < 0) throw std::invalid_argument("ResolutionOfUnity: J must be >= 0");
  if (std::ldexp(1.0, J) > grid.nyquist())
    throw std::invalid_argument("ResolutionOfUnity: 2^J = " + std::to_string(std::ldexp(1.0, J)) +
                                " exceeds the grid Nyquist frequency " + std::to_string(grid.nyquist()));
  multipliers_.assign(static_cast<std::size_t>(J) + 1, std::vector<double>(grid.size()));
  for (std::size_t s = 0; s < grid.size(); ++s) {
    const double r = grid.frequency_radius(s);
    double prev = smooth_step(r);
    multipliers_[0][s] = prev;
    for (int j = 1; j <= J; ++j) {
      const double cur = smooth_step(std::ldexp(r, -j));
      multipliers_[j][s] = cur - prev;
      prev = cur;
    }
  }
}

const std::vector<double>& ResolutionOfUnity::multiplier(int j) const {
  if (j < 0 || j > J_) throw std::out_of_range("ResolutionOfUnity: level " + std::to_string(j) + " out of range");
  return multipliers_[static_cast<std::size_t>(j)];
}

double ResolutionOfUnity::partition_residual() const {
  const double top = std::ldexp(1.0, J_);
  double worst = 0.0;
  for (std::size_t s = 0; s < grid_.size(); ++s) {
    if (grid_.frequency_radius(s) > top) continue;
    double sum = 0.0;
    for (const auto& m : multipliers_) sum += m[s];
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

ResolutionOfUnity build_resolution(const Grid& grid, int J) { return ResolutionOfUnity(grid, J); }

Field lp_block(const Field& f, const ResolutionOfUnity& rou, int j) {
  require_same_grid(f.grid(), rou.grid(), "lp_block");
  return fft::apply_multiplier(f, rou.multiplier(j));
}

FieldSequence lp_blocks(const Field& f, const ResolutionOfUnity& rou) {
  require_same_grid(f.grid(), rou.grid(), "lp_blocks");
  const fft::Spectrum spec = fft::forward(f);
  const auto& k = kernels::active();
  std::vector<Field> out;
  out.reserve(rou.levels());
  for (int j = 0; j <= rou.max_level(); ++j) {
    fft::Spectrum s = spec;
    k.mul_real_complex(rou.multiplier(j).data(), s.data(), s.size());
    out.push_back(fft::inverse(f.grid(), std::move(s)));
  }
  return FieldSequence(std::move(out));
}

FieldSequence weight_sequence(const FieldSequence& gs, const ExponentField& s) {
  require_same_grid(gs.grid(), s.grid(), "weight_sequence");
  const auto& k = kernels::active();
  std::vector<Field> out;
  out.reserve(gs.levels());
  for (std::size_t j = 0; j < gs.levels(); ++j) {
    Field w(gs.grid());
    k.scale_exp(s.raw().data(), static_cast<double>(j) * std::numbers::ln2, gs[j].values().data(),
                w.values().data(), w.size());
    out.push_back(std::move(w));
  }
  return FieldSequence(std::move(out));
}

FieldSequence weighted_blocks(const Field& f, const ExponentField& s, const ResolutionOfUnity& rou) {
  return weight_sequence(lp_blocks(f, rou), s);
}

double besov_norm(const Field& f, const ExponentField& s, const ExponentField& p, const ExponentField& q,
                  const ResolutionOfUnity& rou) {
  return mixed_norm(weighted_blocks(f, s, rou), p, q);
}

EtaShiftReport check_lemma_eta_shift(const ExponentField& alpha, double R, double m, int J) {
  (void)m;
  if (J < 0) throw std::invalid_argument("check_lemma_eta_shift: J must be >= 0");
  EtaShiftReport r;
  const std::vector<OffsetSpread> offsets = scan_offsets(alpha);
  for (const OffsetSpread& o : offsets)
    r.c_loc = std::max(r.c_loc, o.max_diff * std::log(std::numbers::e + 1.0 / o.distance));
  if (R < r.c_loc - 1e-12)
    throw std::invalid_argument("check_lemma_eta_shift: R = " + std::to_string(R) +
                                " is below c_loc(alpha) = " + std::to_string(r.c_loc));
  // 2^{j a(x)} eta_{j,m+R}(d) / (2^{j a(y)} eta_{j,m}(d)) = 2^{j (a(x) - a(y))} (1 + 2^j d)^{-R},
  // largest at the largest difference for each offset; x = y gives 1.
  for (int j = 0; j <= J; ++j) {
    double c = 1.0;
    const double scale = std::ldexp(1.0, j);
    for (const OffsetSpread& o : offsets)
      c = std::max(c, std::exp(j * std::numbers::ln2 * o.max_diff - R * std::log1p(scale * o.distance)));
    r.constants.push_back(c);
  }
  const auto [lo, hi] = std::minmax_element(r.constants.begin(), r.constants.end());
  r.constant = *hi;
  r.spread = *hi / *lo;
  r.passed = std::isfinite(r.constant) && r.spread <= 2.0;
  return r;
}

namespace {

double kernel_mass(const Field& eta) { return integrate(eta); }

double default_eta_bound(const Grid& grid, double m, int J) {
  double mass = 0.0;
  for (int j = 0; j <= J; ++j) mass = std::max(mass, kernel_mass(eta_kernel_cell_average(j, m, grid)));
  return kHolderConstant * mass;
}

}  // namespace

EtaConvolutionReport verify_eta_convolution(const Field& f, const ExponentField& p, double m, int J,
                                            std::optional<double> bound) {
  const Grid& grid = f.grid();
  if (!(m > grid.dim()))
    throw std::invalid_argument("verify_eta_convolution: m must exceed the dimension");
  if (J < 0) throw std::invalid_argument("verify_eta_convolution: J must be >= 0");
  EtaConvolutionReport r;
  const double base = luxemburg_norm(f, p);
  r.trivial = base == 0.0;
  for (int j = 0; j <= J; ++j) {
    const Field eta = eta_kernel_cell_average(j, m, grid);
    r.kernel_mass.push_back(kernel_mass(eta));
    r.ratios.push_back(r.trivial ? 0.0 : luxemburg_norm(convolve(eta, f), p) / base);
  }
  r.bound = bound ? *bound : kHolderConstant * *std::max_element(r.kernel_mass.begin(), r.kernel_mass.end());
  const auto [lo, hi] = std::minmax_element(r.ratios.begin(), r.ratios.end());
  r.max_ratio = *hi;
  r.spread = r.trivial ? 1.0 : *hi / *lo;
  r.passed = r.max_ratio <= r.bound && r.spread <= kEtaSpreadLimit;
  return r;
}

MixedEtaReport verify_mixed_eta(const FieldSequence& fs, const ExponentField& p, const ExponentField& q,
                                double m, std::optional<double> bound) {
  const Grid& grid = fs.grid();
  MixedEtaReport r;
  r.c_loc = local_log_holder(reciprocal(q));
  if (!(m > grid.dim() + r.c_loc))
    throw std::invalid_argument("verify_mixed_eta: m must exceed n + c_loc(1/q) = " +
                                std::to_string(grid.dim() + r.c_loc));
  const int J = static_cast<int>(fs.levels()) - 1;
  r.bound = bound ? *bound : default_eta_bound(grid, m, J);
  r.rhs = mixed_norm(fs, p, q);
  r.trivial = r.rhs == 0.0;
  if (r.trivial) {
    r.passed = true;
    return r;
  }
  std::vector<Field> conv;
  conv.reserve(fs.levels());
  for (int j = 0; j <= J; ++j) conv.push_back(convolve(eta_kernel_cell_average(j, m, grid), fs[j]));
  r.lhs = mixed_norm(FieldSequence(std::move(conv)), p, q);
  r.ratio = r.lhs / r.rhs;
  r.passed = r.ratio <= r.bound;
  return r;
}

HardyTransform hardy_transform(const FieldSequence& gs, double a) {
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("hardy_transform: a must lie in (0, 1)");
  const std::size_t n = gs.levels();
  auto& k = kernels::active();
  std::vector<Field> G(n, Field(gs.grid())), H(n, Field(gs.grid()));
  // G_j = g_j + a G_{j+1},  H_j = g_j + a H_{j-1}
  for (std::size_t t = n; t-- > 0;) {
    Field cur = t + 1 < n ? G[t + 1] : Field(gs.grid());
    k.xpay(gs[t].values().data(), a, cur.values().data(), cur.size());
    G[t] = std::move(cur);
  }
  for (std::size_t t = 0; t < n; ++t) {
    Field cur = t > 0 ? H[t - 1] : Field(gs.grid());
    k.xpay(gs[t].values().data(), a, cur.values().data(), cur.size());
    H[t] = std::move(cur);
  }
  return {FieldSequence(std::move(G)), FieldSequence(std::move(H))};
}

double hardy_constant(double a, double q_minus, double gamma) {
  if (!(gamma > 0.0 && gamma < q_minus)) throw std::invalid_argument("hardy_constant: gamma outside (0, q-)");
  return 1.0 / (std::pow(1.0 - std::pow(a, gamma), 1.0 / q_minus) * (1.0 - std::pow(a, 1.0 - gamma / q_minus)));
}

double hardy_bound(double a, ExtendedReal q_minus, const std::vector<double>& gammas) {
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("hardy_bound: a must lie in (0, 1)");
  if (q_minus.is_plus_infinity()) return 1.0 / (1.0 - a);
  const double qm = q_minus.value();
  double best = kInf;
  for (double g : gammas)
    if (g > 0.0 && g < qm) best = std::min(best, hardy_constant(a, qm, g));
  if (best == kInf) throw std::invalid_argument("hardy_bound: no gamma inside (0, q-)");
  return best;
}

std::vector<double> default_gamma_grid(ExtendedReal q_minus) {
  if (q_minus.is_plus_infinity()) return {1.0};
  const double qm = q_minus.value();
  std::vector<double> g;
  for (int i = 1; i < 200; ++i) g.push_back(qm * i / 200.0);
  return g;
}

HardyReport verify_hardy(const FieldSequence& gs, double a, const ExponentField& p, const ExponentField& q,
                         const std::vector<double>& gammas) {
  HardyReport r;
  r.bound = hardy_bound(a, q.minus(), gammas);
  const double base = mixed_norm(gs, p, q);
  r.trivial = base == 0.0;
  if (!r.trivial) {
    const HardyTransform t = hardy_transform(gs, a);
    r.ratio_G = mixed_norm(t.G, p, q) / base;
    r.ratio_H = mixed_norm(t.H, p, q) / base;
  }
  r.slack = r.bound - std::max(r.ratio_G, r.ratio_H);
  r.passed = r.slack >= -1e-6;
  return r;
}

}  // namespace varbesov
