#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "varbesov/exponents.hpp"
#include "varbesov/grid.hpp"
#include "varbesov/littlewood_paley.hpp"
#include "varbesov/mixed.hpp"

namespace varbesov {

// (V_1, ..., V_n) on one grid, n = grid dimension.
class VectorField {
 public:
  explicit VectorField(std::vector<Field> components);
  static VectorField constant(const Grid& grid, const std::vector<double>& value);
  // n = 2 only: V = (d_1 psi, -d_0 psi), divergence-free.
  static VectorField from_stream_function(const Field& psi);

  const Grid& grid() const { return components_.front().grid(); }
  std::size_t dim() const { return components_.size(); }
  const Field& operator[](std::size_t k) const { return components_[k]; }
  auto begin() const { return components_.begin(); }
  auto end() const { return components_.end(); }

  VectorField& operator+=(const VectorField& other);
  VectorField& operator*=(double c);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator*(double c, VectorField a) { return a *= c; }

 private:
  std::vector<Field> components_;
};

Field divergence(const VectorField& V);

// sum_k V_k d_k Delta_j f - Delta_j(V_k d_k f)
Field commutator(const VectorField& V, const Field& f, const ResolutionOfUnity& rou, int j);
// The same for j = 0..J, sharing transforms across levels.
FieldSequence commutator_sequence(const VectorField& V, const Field& f, const ResolutionOfUnity& rou);
// ||(2^{j s} [V.grad, Delta_j] f)_j||_{l^q(L^p)}
double commutator_lhs_norm(const VectorField& V, const Field& f, const ExponentField& s,
                           const ExponentField& p, const ExponentField& q, const ResolutionOfUnity& rou);

struct EstimateReport {
  std::string estimate;  // "theorem1", ...
  std::string variant;
  double lhs = 0.0;
  std::vector<std::pair<std::string, double>> rhs_terms;
  double ratio = 0.0;  // lhs / sum of rhs terms (0 when both vanish)
  std::map<std::string, std::string> config;

  double rhs() const;
};

// Variants "grad_V", "grad_f" and "div_form" for s- > 0, 1/p = 1/p1 + 1/p2.
// Throws std::domain_error on a hypothesis violation and when V or f do not
// settle at the box boundary.
std::vector<EstimateReport> theorem1_report(const VectorField& V, const Field& f, const ExponentField& s,
                                            const ExponentField& p1, const ExponentField& p2,
                                            const ExponentField& q, const ResolutionOfUnity& rou);
// "positive_s" for 0 < s- <= s+ < 1, "negative_s" for -1 < s- <= s+ < 0.
EstimateReport theorem2_report(const VectorField& V, const Field& f, const ExponentField& s,
                               const ExponentField& p1, const ExponentField& p2, const ExponentField& q,
                               const ResolutionOfUnity& rou);
// s = s1 + s2 with s- > 0 and s2+ < 1; 1/p = 1/p1 + 1/p2, 1/q = 1/q1 + 1/q2.
EstimateReport theorem3_report(const VectorField& V, const Field& f, const ExponentField& s1,
                               const ExponentField& s2, const ExponentField& p1, const ExponentField& p2,
                               const ExponentField& q1, const ExponentField& q2, const ResolutionOfUnity& rou);

enum class Theorem { one, two, three };
const char* theorem_name(Theorem t);

// Randomised (V, f) families for one theorem. Exponents are built per grid
// from family specs. s2/q1/q2 are used by theorem three only (q1 then plays
// q's role on the f side and q2 on the V side).
struct SweepConfig {
  int dim = 1;
  std::size_t points = 4096;
  double half_width = 16.0;
  int J = 8;
  FamilySpec s{"constant", {{"value", 0.5}}};
  FamilySpec s2{"constant", {{"value", 0.25}}};
  FamilySpec p1{"constant", {{"value", 4.0}}};
  FamilySpec p2{"constant", {{"value", 4.0}}};
  FamilySpec q{"constant", {{"value", 2.0}}};
  FamilySpec q1{"constant", {{"value", 4.0}}};
  FamilySpec q2{"constant", {{"value", 4.0}}};
  bool constant_velocity = false;
  bool divergence_free = false;  // n = 2: V from a stream function
};

struct SweepSummary {
  std::vector<std::string> variants;
  // ratios[v][t]: variant v, trial t, on the base and the refined grid.
  std::vector<std::vector<double>> ratios;
  std::vector<std::vector<double>> refined;
  double max_ratio = 0.0;
  double median_ratio = 0.0;
  double max_refinement_factor = 1.0;  // max over instances of max(r, r')/min(r, r')
  bool finite = true;
  bool refinement_ok = true;  // every factor <= 2
};

// Ratios below this are treated as exact zeros by the refinement check.
inline constexpr double kNegligibleRatio = 1e-9;

// Trials run at (N, J) and (2N, J + 1) with the same box and the same input
// band 2^J / 4. Throws std::invalid_argument for trials < 1.
SweepSummary constant_sweep(const SweepConfig& config, Theorem theorem, int trials, std::uint64_t seed);

}  // namespace varbesov
