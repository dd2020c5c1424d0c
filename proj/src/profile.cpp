#include "varbesov/detail/profile.hpp"

#include <cmath>
#include <limits>

#include "varbesov/kernels.hpp"

namespace varbesov::detail {
namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ModularProfile::ModularProfile(const Field& f, const ExponentField& p, const ExponentField* q)
    : max_log_(-kInf) {
  require_same_grid(f.grid(), p.grid(), "modular");
  if (q) require_same_grid(f.grid(), q->grid(), "modular");
  const double log_w = std::log(f.grid().cell_volume());
  auto pv = p.raw();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double t = std::abs(f[i]);
    if (t == 0.0) continue;
    const double l = std::log(t);
    max_log_ = std::max(max_log_, l);
    double r = 1.0;
    if (q) {
      const double qi = q->raw()[i];
      r = qi == kInf ? 0.0 : 1.0 / qi;
    }
    if (pv[i] == kInf) {
      inf_log_.push_back(l);
      inf_r_.push_back(r);
    } else {
      a_.push_back(pv[i] * l + log_w);
      p_.push_back(pv[i]);
      b_.push_back(pv[i] * r);
    }
  }
}

double ModularProfile::log_modular(double m, double u) const {
  const auto& k = kernels::active();
  if (!inf_log_.empty() && k.max_affine(inf_log_.data(), inf_r_.data(), u, inf_log_.size()) - m > 0.0)
    return kInf;
  if (a_.empty()) return -kInf;
  if (!shifted_valid_ || shifted_m_ != m) {
    shifted_.resize(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) shifted_[i] = a_[i] - p_[i] * m;
    shifted_m_ = m;
    shifted_valid_ = true;
  }
  const double s = k.sum_exp_affine(shifted_.data(), b_.data(), u, a_.size());
  return s == 0.0 ? -kInf : std::log(s);
}

}  // namespace varbesov::detail
