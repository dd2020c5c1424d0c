#pragma once

#include <span>
#include <vector>

#include "varbesov/exponents.hpp"
#include "varbesov/extended.hpp"
#include "varbesov/grid.hpp"

namespace varbesov {

// (f_j)_{j=0..J} on one grid.
class FieldSequence {
 public:
  explicit FieldSequence(std::vector<Field> entries);
  static FieldSequence zeros(const Grid& grid, std::size_t levels);

  const Grid& grid() const { return entries_.front().grid(); }
  std::size_t levels() const { return entries_.size(); }
  const Field& operator[](std::size_t j) const { return entries_[j]; }
  Field& operator[](std::size_t j) { return entries_[j]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  bool is_zero() const;

  FieldSequence scaled(double c) const;
  // (chi_mask f_j)_j
  FieldSequence restricted(const std::vector<bool>& mask) const;

 private:
  std::vector<Field> entries_;
};

// inf{lambda > 0 : rho_p(f / lambda^{1/q}) <= 1}, with lambda^{1/inf} = 1.
// 0 for f == 0; +inf when no lambda works.
ExtendedReal inner_lambda(const Field& f, const ExponentField& p, const ExponentField& q);

// sum_j inner_lambda(f_j). For p == inf the sum of ess-sup |f_j|^{q} terms is
// used instead (t^inf = inf for t > 1, 0 otherwise).
ExtendedReal mixed_modular(const FieldSequence& fs, const ExponentField& p, const ExponentField& q);
// The ess-sup form on its own (p is taken to be inf).
ExtendedReal mixed_modular_ess_sup(const FieldSequence& fs, const ExponentField& q);

// inf{mu > 0 : mixed_modular(fs / mu) <= 1}; sup_j ||f_j||_p when q == inf.
double mixed_norm(const FieldSequence& fs, const ExponentField& p, const ExponentField& q);

struct MonotoneLimitReport {
  std::vector<double> norms;  // one per truncation set
  double full_norm = 0.0;
  bool non_decreasing = true;
  double relative_gap = 0.0;  // |max(norms) - full| / full
  bool passed = false;
};

// Norms of (chi_{A_n} f_j)_j for nested masks A_n whose last element covers
// the grid. Throws std::invalid_argument when the masks are not nested.
MonotoneLimitReport check_monotone_limit(const FieldSequence& fs,
                                         const std::vector<std::vector<bool>>& masks,
                                         const ExponentField& p, const ExponentField& q);

inline constexpr double kHolderConstant = 8.0;

struct HolderReport {
  // ||f_j g_j||_p / (||f_j||_p1 ||g_j||_p2), worst level.
  double scalar_ratio = 0.0;
  // ||(f_j g_j)||_{l^q(L^p)} / (||(f_j)||_{l^q1(L^p1)} ||(g_j)||_{l^q2(L^p2)})
  double general_ratio = 0.0;
  // ||(f_j g_j)||_{l^q2(L^p)} / (sup_k ||f_k||_p1 ||(g_j)||_{l^q2(L^p2)})
  double sup_ratio = 0.0;
  double max_ratio = 0.0;
  bool passed = false;
};

// 1/p = 1/p1 + 1/p2 and 1/q = 1/q1 + 1/q2 pointwise. A ratio with a zero
// denominator counts as 0 (the numerator vanishes too).
HolderReport check_holder(const FieldSequence& fs, const FieldSequence& gs, const ExponentField& p1,
                          const ExponentField& p2, const ExponentField& q1, const ExponentField& q2);

}  // namespace varbesov
