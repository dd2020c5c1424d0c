#pragma once

#include <cstdint>
#include <vector>

#include "varbesov/exponents.hpp"
#include "varbesov/grid.hpp"
#include "varbesov/mixed.hpp"

namespace varbesov {

// integral of sum_j |f_j| |g_j|. Throws std::invalid_argument on a level or
// grid mismatch.
double pairing(const FieldSequence& fs, const FieldSequence& gs);

inline constexpr double kBetaDropThreshold = 1e-10;

struct ExtremalWitness {
  FieldSequence h;
  double K = 0.0;               // ||(f_j)||_{l^q(L^p)}
  std::vector<double> betas;    // 0 for skipped or dropped levels
  std::vector<std::size_t> dropped;  // nonzero levels with beta_j below the drop threshold
};

// h_j = beta_j^{1/q'} (|f_j| / (K beta_j^{1/q}))^{p-1}, where beta_j solves
// rho_p(f_j / (K beta_j^{1/q})) = 1. Requires p+ < inf, q finite-valued and
// fs != 0 (std::invalid_argument otherwise).
ExtremalWitness extremal_witness(const FieldSequence& fs, const ExponentField& p, const ExponentField& q);

struct InfinityWitness {
  FieldSequence h;
  double K = 0.0;
  std::vector<double> betas;
  std::vector<std::size_t> support;  // |E_j| in nodes
};

// p == inf branch: h_j = beta_j^{1/q'} |E_j|^{-1} chi_{E_j}, E_j the nodes
// where |f_j| / (K beta_j^{1/q}) comes within eps / (K 2^{j-1}) of its
// maximum. Requires q finite-valued and eps > 0.
InfinityWitness infinity_witness_full(const FieldSequence& fs, const ExponentField& q, double eps);
FieldSequence infinity_witness(const FieldSequence& fs, const ExponentField& q, double eps);

struct DualSearchResult {
  double best = 0.0;
  double K = 0.0;
  std::vector<double> pairings;  // one per candidate, witness last if present
  bool witness_included = false;
  double max_ratio = 0.0;  // max pairing / K
};

// Random candidates (band-limited noise shaped by |f_j|^{p-1}) rescaled to
// the unit ball of l^{q'}(L^{p'}); the extremal witness joins the pool when
// p+ < inf and q is finite-valued. Deterministic in `seed`.
DualSearchResult random_dual_search(const FieldSequence& fs, const ExponentField& p, const ExponentField& q,
                                    int trials, std::uint64_t seed);

struct NormConjugateReport {
  double norm = 0.0;
  double best_pairing = 0.0;
  double ratio = 0.0;  // best / norm (0 for f == 0)
  bool passed = false;
};

// Best pairing of f against unit-ball candidates of L^{p'}: random shaped
// ones plus the extremal function on {p < inf} and a near-argmax indicator on
// {p = inf}. Passes when the ratio lies in [1/2, 2].
NormConjugateReport verify_norm_conjugate(const Field& f, const ExponentField& p, int trials,
                                          std::uint64_t seed);

// Splitting of fs along A = {p < inf}, B = {q < inf} into chi_{A and B} f,
// chi_{not B} f and chi_{B minus A} f, each paired against its own witness.
struct SplitDualityReport {
  double K = 0.0;
  double piece_norms[3] = {0.0, 0.0, 0.0};
  double piece_pairings[3] = {0.0, 0.0, 0.0};
  double piece_feasibility[3] = {0.0, 0.0, 0.0};  // ||h||_{l^{q'}(L^{p'})}
  double best = 0.0;
  bool passed = false;  // every witness feasible, best >= K / C_HOLDER, best <= C_HOLDER K
};

SplitDualityReport split_duality(const FieldSequence& fs, const ExponentField& p, const ExponentField& q,
                                 double eps);

}  // namespace varbesov
