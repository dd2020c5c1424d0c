#pragma once

#include <optional>
#include <vector>

#include "varbesov/exponents.hpp"
#include "varbesov/grid.hpp"
#include "varbesov/mixed.hpp"

namespace varbesov {

// Smooth step: 1 on [0, 1], 0 on [2, inf), C-infinity in between, built from
// b(t) = exp(-1/t).
double smooth_step(double r);

// Fourier multipliers F phi_0 = Phi(|xi|), F phi_j = Phi(2^-j |xi|) - Phi(2^{1-j} |xi|)
// for j = 1..J on the spectral nodes of a grid.
class ResolutionOfUnity {
 public:
  // Requires 2^J <= Nyquist; throws std::invalid_argument otherwise.
  ResolutionOfUnity(const Grid& grid, int J);

  const Grid& grid() const { return grid_; }
  int max_level() const { return J_; }
  std::size_t levels() const { return multipliers_.size(); }
  const std::vector<double>& multiplier(int j) const;

  // max over spectral nodes with |xi| <= 2^J of |sum_j F phi_j - 1|
  double partition_residual() const;

 private:
  Grid grid_;
  int J_;
  std::vector<std::vector<double>> multipliers_;
};

ResolutionOfUnity build_resolution(const Grid& grid, int J);

// Delta_j f = F^{-1}(F phi_j F f). Throws std::out_of_range for j outside 0..J.
Field lp_block(const Field& f, const ResolutionOfUnity& rou, int j);
// All blocks j = 0..J from one forward transform.
FieldSequence lp_blocks(const Field& f, const ResolutionOfUnity& rou);
// (2^{j s(x)} Delta_j f(x))_j
FieldSequence weighted_blocks(const Field& f, const ExponentField& s, const ResolutionOfUnity& rou);
// (2^{j s(x)} g_j(x))_j for a given sequence
FieldSequence weight_sequence(const FieldSequence& gs, const ExponentField& s);

// ||(2^{j s} Delta_j f)_j||_{l^q(L^p)}. Meaningful for f band-limited below 2^J.
double besov_norm(const Field& f, const ExponentField& s, const ExponentField& p, const ExponentField& q,
                  const ResolutionOfUnity& rou);

struct EtaShiftReport {
  std::vector<double> constants;  // minimal c per level j = 0..J
  double constant = 0.0;          // max over j
  double spread = 1.0;            // max_j c_j / min_j c_j
  double c_loc = 0.0;             // measured local log-Hoelder constant of alpha
  bool passed = false;            // finite and spread <= 2
};

// Minimal c in 2^{j alpha(x)} eta_{j,m+R}(x - y) <= c 2^{j alpha(y)} eta_{j,m}(x - y)
// over node pairs (offsets as in scan_offsets) and j = 0..J. The ratio does
// not depend on m, which is kept for the call shape. Throws
// std::invalid_argument when R is below c_loc(alpha) (beyond 1e-12).
EtaShiftReport check_lemma_eta_shift(const ExponentField& alpha, double R, double m, int J);

struct EtaConvolutionReport {
  std::vector<double> ratios;       // ||eta_{j,m} * f||_p / ||f||_p
  std::vector<double> kernel_mass;  // ||eta_{j,m}||_1 on the grid
  double max_ratio = 0.0;
  double spread = 1.0;  // max_j / min_j
  double bound = 0.0;
  bool trivial = false;  // f == 0
  bool passed = false;   // max_ratio <= bound and spread <= 4
};

inline constexpr double kEtaSpreadLimit = 4.0;

// Requires m > n. `bound` defaults to max_j ||eta_{j,m}||_1 times the
// Hoelder constant.
EtaConvolutionReport verify_eta_convolution(const Field& f, const ExponentField& p, double m, int J,
                                            std::optional<double> bound = std::nullopt);

struct MixedEtaReport {
  double lhs = 0.0;  // ||(eta_{j,m} * f_j)_j||
  double rhs = 0.0;  // ||(f_j)_j||
  double ratio = 0.0;
  double bound = 0.0;
  double c_loc = 0.0;  // c_loc(1/q)
  bool trivial = false;
  bool passed = false;
};

// Requires m > n + c_loc(1/q).
MixedEtaReport verify_mixed_eta(const FieldSequence& fs, const ExponentField& p, const ExponentField& q,
                                double m, std::optional<double> bound = std::nullopt);

struct HardyTransform {
  FieldSequence G;  // G_j = sum_{m >= j} a^{m-j} g_m
  FieldSequence H;  // H_j = sum_{m <= j} a^{j-m} g_m
};

HardyTransform hardy_transform(const FieldSequence& gs, double a);

// 1 / [(1 - a^gamma)^{1/q-} (1 - a^{1 - gamma/q-})] for 0 < gamma < q-.
double hardy_constant(double a, double q_minus, double gamma);
// Minimum over `gammas` (points outside (0, q-) are skipped); for q- = inf
// the gamma-free value 1/(1 - a).
double hardy_bound(double a, ExtendedReal q_minus, const std::vector<double>& gammas);
// 199 interior points of (0, q-), plus q-/2.
std::vector<double> default_gamma_grid(ExtendedReal q_minus);

struct HardyReport {
  double ratio_G = 0.0;
  double ratio_H = 0.0;
  double bound = 0.0;
  double slack = 0.0;  // bound - max(ratio_G, ratio_H)
  bool trivial = false;
  bool passed = false;
};

HardyReport verify_hardy(const FieldSequence& gs, double a, const ExponentField& p, const ExponentField& q,
                         const std::vector<double>& gammas);

}  // namespace varbesov
