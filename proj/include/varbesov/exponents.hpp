#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "varbesov/extended.hpp"
#include "varbesov/grid.hpp"

namespace varbesov {

// Integrability exponents (p, q and their conjugates) take values in [1, inf];
// smoothness exponents (s, and reciprocals such as 1/q) are finite reals.
enum class ExponentKind { integrability, smoothness };

// A sampled variable exponent with its essential bounds. Infinite samples are
// stored as IEEE +inf and surfaced through ExtendedReal.
class ExponentField {
 public:
  ExponentField(Grid grid, std::vector<double> values, ExponentKind kind);

  static ExponentField constant(const Grid& grid, ExtendedReal value,
                                ExponentKind kind = ExponentKind::integrability);

  const Grid& grid() const { return grid_; }
  ExponentKind kind() const { return kind_; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> raw() const { return values_; }
  ExtendedReal at(std::size_t i) const { return ExtendedReal::from_double(values_[i]); }
  bool is_infinite_at(std::size_t i) const;

  // Sample extrema, standing in for ess-inf / ess-sup.
  ExtendedReal minus() const { return ExtendedReal::from_double(min_); }
  ExtendedReal plus() const { return ExtendedReal::from_double(max_); }
  bool is_finite_valued() const;
  bool is_identically_infinite() const;
  bool is_constant() const { return min_ == max_; }

  // g_infinity proxy. Families default it to the boundary sample.
  std::optional<double> value_at_infinity() const { return at_infinity_; }
  ExponentField with_value_at_infinity(double v) const;

 private:
  Grid grid_;
  std::vector<double> values_;
  ExponentKind kind_;
  double min_;
  double max_;
  std::optional<double> at_infinity_;
};

// p' with 1/p + 1/p' = 1, 1 <-> inf.
ExponentField conjugate(const ExponentField& p);
// 1/p as a smoothness-kind field (1/inf = 0).
ExponentField reciprocal(const ExponentField& p);
// r with 1/r = 1/a + 1/b; throws std::invalid_argument when 1/a + 1/b > 1
// somewhere (the result would leave [1, inf]).
ExponentField harmonic_sum(const ExponentField& a, const ExponentField& b);
// Smoothness arithmetic: a + b and a + c.
ExponentField add(const ExponentField& a, const ExponentField& b);
ExponentField shift(const ExponentField& a, double c);
// Integrability field equal to a on the mask and `fill` elsewhere.
ExponentField blend(const ExponentField& a, const std::vector<bool>& mask, double fill);

struct LogHolderConstants {
  double local = 0.0;
  double decay = 0.0;
};

// Largest |g(x) - g(y)| over node pairs at one lattice offset, with the
// Euclidean length of that offset (no periodic wrap).
struct OffsetSpread {
  double distance = 0.0;
  double max_diff = 0.0;
};
// Every nonzero offset for n = 1; for n = 2 the offsets whose axis components
// are at most 16 nodes or multiples of 8 (up to sign symmetry).
std::vector<OffsetSpread> scan_offsets(const ExponentField& g);

// max over node pairs x != y of |g(x) - g(y)| log(e + 1/|x - y|), taken over
// the offsets of scan_offsets.
double local_log_holder(const ExponentField& g);
// max over nodes of |g(x) - g_inf| log(e + |x|). Throws std::invalid_argument
// when no value at infinity is attached.
double decay_log_holder(const ExponentField& g);
LogHolderConstants log_holder_constants(const ExponentField& g);

// Named exponent families used by the test suites and the runner config.
//   constant     {value}
//   step         {left, right, threshold = 0}   (axis 0 split; inf allowed)
//   log_decay    {a, b}     a + b / log(e + |x|)
//   oscillation  {a, b}     a + b (1 + cos(pi x / L)) / 2 (product over axes
//                           for n = 2), clamped to [1, inf) for integrability
// Every family attaches its boundary sample as the value at infinity.
struct FamilySpec {
  std::string name;
  std::map<std::string, double> params;
};

bool is_known_family(const std::string& name);
// Throws std::invalid_argument for unknown families, missing parameters or
// values outside the kind's range.
ExponentField make_family(const Grid& grid, const FamilySpec& spec, ExponentKind kind);

}  // namespace varbesov
