#pragma once

#include <vector>

#include "varbesov/exponents.hpp"
#include "varbesov/grid.hpp"

namespace varbesov::detail {

// Log-domain form of (m, u) -> rho_p(f e^{-m} e^{-u r(.)}), r = 1/q, which
// covers rho_p(f/lambda) (r = 1, m = 0), the inner problem of the mixed
// modular rho_p(f / lambda^{1/q}) and its outer scaling by mu = e^m.
//
// Finite-p nodes with f != 0 contribute exp(a_i - p_i m - b_i u) with
// a_i = p_i log|f_i| + log h^n and b_i = p_i r_i; p = inf nodes contribute
// inf as soon as log|f_i| - m - r_i u > 0. Zero samples drop out.
//
// Keeps a cache of the m-shifted coefficients, so one instance must not be
// shared between threads.
class ModularProfile {
 public:
  // q == nullptr means r == 1 everywhere.
  ModularProfile(const Field& f, const ExponentField& p, const ExponentField* q);

  bool empty() const { return a_.empty() && inf_log_.empty(); }
  // log rho in [-inf, +inf].
  double log_modular(double m, double u) const;
  // Largest log|f| over the retained nodes.
  double max_log() const { return max_log_; }

 private:
  std::vector<double> a_, p_, b_;
  std::vector<double> inf_log_, inf_r_;
  double max_log_;
  mutable std::vector<double> shifted_;
  mutable double shifted_m_;
  mutable bool shifted_valid_ = false;
};

}  // namespace varbesov::detail
