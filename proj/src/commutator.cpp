#include "varbesov/commutator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "varbesov/fft.hpp"
#include "varbesov/kernels.hpp"
#include "varbesov/lebesgue.hpp"
#include "varbesov/sampling.hpp"

namespace varbesov {
namespace {

// i xi_axis applied to a spectrum; the Nyquist mode is dropped as in
// spectral_derivative.
fft::Spectrum derivative_spectrum(const Grid& grid, fft::Spectrum s, int axis) {
  const std::size_t n = grid.points_per_axis();
  for (std::size_t k = 0; k < s.size(); ++k) {
    const std::size_t idx = grid.dim() == 1 ? k : (axis == 0 ? k / n : k % n);
    s[k] = idx == n / 2 ? std::complex<double>(0.0) : s[k] * std::complex<double>(0.0, grid.wavenumber(idx));
  }
  return s;
}

void check_velocity(const VectorField& V, const Field& f) {
  if (static_cast<int>(V.dim()) != f.grid().dim())
    throw std::invalid_argument("commutator: V needs one component per axis");
  require_same_grid(V.grid(), f.grid(), "commutator");
}

ExponentField harmonic_or_domain_error(const ExponentField& a, const ExponentField& b, const char* what) {
  try {
    return harmonic_sum(a, b);
  } catch (const std::invalid_argument&) {
    throw std::domain_error(std::string(what) + ": exponent split leaves [1, inf]");
  }
}

void require_decay(const VectorField& V, const Field& f) {
  for (const Field& c : V) require_boundary_decay(c, "V");
  require_boundary_decay(f, "f");
}

double grad_norm(const Field& f, const ExponentField& p) {
  double s = 0.0;
  for (int a = 0; a < f.grid().dim(); ++a) s += luxemburg_norm(spectral_derivative(f, a), p);
  return s;
}

double vector_norm(const VectorField& V, const ExponentField& p) {
  double s = 0.0;
  for (const Field& c : V) s += luxemburg_norm(c, p);
  return s;
}

double vector_grad_norm(const VectorField& V, const ExponentField& p) {
  double s = 0.0;
  for (const Field& c : V) s += grad_norm(c, p);
  return s;
}

double vector_besov(const VectorField& V, const ExponentField& s, const ExponentField& p, const ExponentField& q,
                    const ResolutionOfUnity& rou) {
  double t = 0.0;
  for (const Field& c : V) t += besov_norm(c, s, p, q, rou);
  return t;
}

double grad_besov(const Field& f, const ExponentField& s, const ExponentField& p, const ExponentField& q,
                  const ResolutionOfUnity& rou) {
  double t = 0.0;
  for (int a = 0; a < f.grid().dim(); ++a) t += besov_norm(spectral_derivative(f, a), s, p, q, rou);
  return t;
}

std::string describe(const ExponentField& e) {
  std::ostringstream os;
  os.precision(6);
  if (e.is_constant()) os << "constant " << e.raw()[0];
  else os << "variable [" << e.minus() << ", " << e.plus() << "]";
  return os.str();
}

EstimateReport make_report(const char* estimate, const char* variant, double lhs,
                           std::vector<std::pair<std::string, double>> terms, const ResolutionOfUnity& rou) {
  EstimateReport r;
  r.estimate = estimate;
  r.variant = variant;
  r.lhs = lhs;
  r.rhs_terms = std::move(terms);
  const double rhs = r.rhs();
  r.ratio = rhs == 0.0 ? (lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity()) : lhs / rhs;
  const Grid& g = rou.grid();
  r.config["dim"] = std::to_string(g.dim());
  r.config["N"] = std::to_string(g.points_per_axis());
  r.config["L"] = std::to_string(g.half_width());
  r.config["J"] = std::to_string(rou.max_level());
  return r;
}

}  // namespace

VectorField::VectorField(std::vector<Field> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("VectorField: needs at least one component");
  for (const Field& c : components_) require_same_grid(components_.front().grid(), c.grid(), "VectorField");
  if (static_cast<int>(components_.size()) != components_.front().grid().dim())
    throw std::invalid_argument("VectorField: component count must equal the grid dimension");
}

VectorField VectorField::constant(const Grid& grid, const std::vector<double>& value) {
  if (static_cast<int>(value.size()) != grid.dim())
    throw std::invalid_argument("VectorField::constant: one value per axis");
  std::vector<Field> c;
  for (double v : value) c.push_back(Field::constant(grid, v));
  return VectorField(std::move(c));
}

VectorField VectorField::from_stream_function(const Field& psi) {
  if (psi.grid().dim() != 2) throw std::invalid_argument("from_stream_function: needs n = 2");
  return VectorField({spectral_derivative(psi, 1), spectral_derivative(psi, 0) * -1.0});
}

VectorField& VectorField::operator+=(const VectorField& other) {
  if (other.dim() != dim()) throw std::invalid_argument("VectorField: dimension mismatch");
  for (std::size_t k = 0; k < dim(); ++k) components_[k] += other.components_[k];
  return *this;
}

VectorField& VectorField::operator*=(double c) {
  for (Field& f : components_) f *= c;
  return *this;
}

double EstimateReport::rhs() const {
  double s = 0.0;
  for (const auto& [name, v] : rhs_terms) s += v;
  return s;
}

Field divergence(const VectorField& V) {
  Field out(V.grid());
  for (std::size_t k = 0; k < V.dim(); ++k) out += spectral_derivative(V[k], static_cast<int>(k));
  return out;
}

FieldSequence commutator_sequence(const VectorField& V, const Field& f, const ResolutionOfUnity& rou) {
  check_velocity(V, f);
  require_same_grid(f.grid(), rou.grid(), "commutator");
  const Grid& grid = f.grid();
  const auto& kern = kernels::active();
  const fft::Spectrum ff = fft::forward(f);

  std::vector<fft::Spectrum> dspec;
  Field transport(grid);  // sum_k V_k d_k f
  for (std::size_t k = 0; k < V.dim(); ++k) {
    dspec.push_back(derivative_spectrum(grid, ff, static_cast<int>(k)));
    transport += multiply(V[k], fft::inverse(grid, dspec.back()));
  }
  const fft::Spectrum tspec = fft::forward(transport);

  std::vector<Field> out;
  for (int j = 0; j <= rou.max_level(); ++j) {
    const double* m = rou.multiplier(j).data();
    fft::Spectrum t = tspec;
    kern.mul_real_complex(m, t.data(), t.size());
    Field c = fft::inverse(grid, std::move(t)) * -1.0;
    for (std::size_t k = 0; k < V.dim(); ++k) {
      fft::Spectrum d = dspec[k];
      kern.mul_real_complex(m, d.data(), d.size());
      c += multiply(V[k], fft::inverse(grid, std::move(d)));
    }
    out.push_back(std::move(c));
  }
  return FieldSequence(std::move(out));
}

Field commutator(const VectorField& V, const Field& f, const ResolutionOfUnity& rou, int j) {
  rou.multiplier(j);  // range check
  check_velocity(V, f);
  const Grid& grid = f.grid();
  Field transport(grid);
  Field out(grid);
  for (std::size_t k = 0; k < V.dim(); ++k) {
    const int axis = static_cast<int>(k);
    out += multiply(V[k], spectral_derivative(lp_block(f, rou, j), axis));
    transport += multiply(V[k], spectral_derivative(f, axis));
  }
  return out - lp_block(transport, rou, j);
}

double commutator_lhs_norm(const VectorField& V, const Field& f, const ExponentField& s,
                           const ExponentField& p, const ExponentField& q, const ResolutionOfUnity& rou) {
  return mixed_norm(weight_sequence(commutator_sequence(V, f, rou), s), p, q);
}

std::vector<EstimateReport> theorem1_report(const VectorField& V, const Field& f, const ExponentField& s,
                                            const ExponentField& p1, const ExponentField& p2,
                                            const ExponentField& q, const ResolutionOfUnity& rou) {
  if (!(s.minus().value() > 0.0)) throw std::domain_error("theorem1: needs s- > 0");
  const ExponentField p = harmonic_or_domain_error(p1, p2, "theorem1");
  check_velocity(V, f);
  require_decay(V, f);

  const double lhs = commutator_lhs_norm(V, f, s, p, q, rou);
  const double grad_f = grad_norm(f, p1);
  const double V_B = vector_besov(V, s, p2, q, rou);
  const double grad_V = vector_grad_norm(V, p1);
  const double f_B = besov_norm(f, s, p2, q, rou);
  const double V_p1 = vector_norm(V, p1);
  const double grad_f_B = grad_besov(f, s, p2, q, rou);
  const double fdiv_B = besov_norm(multiply(f, divergence(V)), s, p, q, rou);
  const double f_p1 = luxemburg_norm(f, p1);
  const double V_B1 = vector_besov(V, shift(s, 1.0), p2, q, rou);

  std::vector<EstimateReport> out;
  out.push_back(make_report("theorem1", "grad_V", lhs,
                            {{"grad_f_p1*V_B", grad_f * V_B}, {"grad_V_p1*f_B", grad_V * f_B}}, rou));
  out.push_back(make_report("theorem1", "grad_f", lhs,
                            {{"grad_f_p1*V_B", grad_f * V_B}, {"V_p1*grad_f_B", V_p1 * grad_f_B}}, rou));
  out.push_back(make_report(
      "theorem1", "div_form", lhs,
      {{"f_divV_B", fdiv_B}, {"grad_V_p1*f_B", grad_V * f_B}, {"f_p1*V_B_s+1", f_p1 * V_B1}}, rou));
  for (auto& r : out) {
    r.config["s"] = describe(s);
    r.config["p1"] = describe(p1);
    r.config["p2"] = describe(p2);
    r.config["q"] = describe(q);
  }
  return out;
}

EstimateReport theorem2_report(const VectorField& V, const Field& f, const ExponentField& s,
                               const ExponentField& p1, const ExponentField& p2, const ExponentField& q,
                               const ResolutionOfUnity& rou) {
  const double lo = s.minus().value();
  const double hi = s.plus().value();
  const bool positive = lo > 0.0 && hi < 1.0;
  const bool negative = lo > -1.0 && hi < 0.0;
  if (!positive && !negative)
    throw std::domain_error("theorem2: needs 0 < s- <= s+ < 1 or -1 < s- <= s+ < 0");
  const ExponentField p = harmonic_or_domain_error(p1, p2, "theorem2");
  check_velocity(V, f);
  require_decay(V, f);

  const double lhs = commutator_lhs_norm(V, f, s, p, q, rou);
  EstimateReport r;
  if (positive) {
    r = make_report("theorem2", "positive_s", lhs,
                    {{"grad_f_p1*V_B", grad_norm(f, p1) * vector_besov(V, s, p2, q, rou)}}, rou);
  } else {
    r = make_report("theorem2", "negative_s", lhs,
                    {{"f_divV_B", besov_norm(multiply(f, divergence(V)), s, p, q, rou)},
                     {"f_p1*V_B_s+1", luxemburg_norm(f, p1) * vector_besov(V, shift(s, 1.0), p2, q, rou)}},
                    rou);
  }
  r.config["s"] = describe(s);
  r.config["p1"] = describe(p1);
  r.config["p2"] = describe(p2);
  r.config["q"] = describe(q);
  return r;
}

EstimateReport theorem3_report(const VectorField& V, const Field& f, const ExponentField& s1,
                               const ExponentField& s2, const ExponentField& p1, const ExponentField& p2,
                               const ExponentField& q1, const ExponentField& q2, const ResolutionOfUnity& rou) {
  const ExponentField s = add(s1, s2);
  if (!(s.minus().value() > 0.0)) throw std::domain_error("theorem3: needs (s1 + s2)- > 0");
  if (!(s2.plus().value() < 1.0)) throw std::domain_error("theorem3: needs s2+ < 1");
  const ExponentField p = harmonic_or_domain_error(p1, p2, "theorem3");
  const ExponentField q = harmonic_or_domain_error(q1, q2, "theorem3");
  check_velocity(V, f);
  require_decay(V, f);

  const double lhs = commutator_lhs_norm(V, f, s, p, q, rou);
  EstimateReport r = make_report(
      "theorem3", "split", lhs,
      {{"grad_f_p1*V_B", grad_norm(f, p1) * vector_besov(V, s, p2, q, rou)},
       {"grad_f_B1*V_B2", grad_besov(f, s1, p1, q1, rou) * vector_besov(V, s2, p2, q2, rou)}},
      rou);
  r.config["s1"] = describe(s1);
  r.config["s2"] = describe(s2);
  r.config["p1"] = describe(p1);
  r.config["p2"] = describe(p2);
  r.config["q1"] = describe(q1);
  r.config["q2"] = describe(q2);
  return r;
}

const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::one: return "theorem1";
    case Theorem::two: return "theorem2";
    case Theorem::three: return "theorem3";
  }
  return "?";
}

namespace {

struct TrialInputs {
  std::vector<WavePacket> f;
  std::vector<std::vector<WavePacket>> v;  // per component, or one stream function
  std::vector<double> constant_v;
};

std::vector<EstimateReport> run_instance(const SweepConfig& c, Theorem theorem, const TrialInputs& in,
                                         const Grid& grid, int J, double band) {
  const ResolutionOfUnity rou(grid, J);
  const Field f = band_limit(sample_packets(grid, in.f), band);
  std::vector<Field> comps;
  VectorField V = VectorField::constant(grid, std::vector<double>(grid.dim(), 0.0));
  if (c.constant_velocity) {
    V = VectorField::constant(grid, in.constant_v);
  } else if (c.divergence_free) {
    V = VectorField::from_stream_function(band_limit(sample_packets(grid, in.v.front()), band));
  } else {
    for (const auto& pk : in.v) comps.push_back(band_limit(sample_packets(grid, pk), band));
    V = VectorField(std::move(comps));
  }
  using K = ExponentKind;
  const ExponentField s = make_family(grid, c.s, K::smoothness);
  const ExponentField p1 = make_family(grid, c.p1, K::integrability);
  const ExponentField p2 = make_family(grid, c.p2, K::integrability);
  switch (theorem) {
    case Theorem::one:
      return theorem1_report(V, f, s, p1, p2, make_family(grid, c.q, K::integrability), rou);
    case Theorem::two:
      return {theorem2_report(V, f, s, p1, p2, make_family(grid, c.q, K::integrability), rou)};
    case Theorem::three:
      return {theorem3_report(V, f, s, make_family(grid, c.s2, K::smoothness), p1, p2,
                              make_family(grid, c.q1, K::integrability),
                              make_family(grid, c.q2, K::integrability), rou)};
  }
  return {};
}

}  // namespace

SweepSummary constant_sweep(const SweepConfig& c, Theorem theorem, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("constant_sweep: trials must be >= 1");
  if (c.divergence_free && c.dim != 2) throw std::invalid_argument("constant_sweep: divergence_free needs dim 2");
  const Grid base(c.dim, c.half_width, c.points);
  const Grid fine(c.dim, c.half_width, 2 * c.points);
  const double band = std::ldexp(1.0, c.J) / 4.0;
  const PacketRanges ranges = default_ranges(base, band);

  SweepSummary out;
  std::vector<double> all;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
    TrialInputs in;
    in.f = random_packets(rng, c.dim, ranges);
    const int streams = c.divergence_free ? 1 : c.dim;
    for (int k = 0; k < streams; ++k) in.v.push_back(random_packets(rng, c.dim, ranges));
    for (int k = 0; k < c.dim; ++k) in.constant_v.push_back(rng.uniform(-2.0, 2.0));

    const auto coarse = run_instance(c, theorem, in, base, c.J, band);
    const auto refined = run_instance(c, theorem, in, fine, c.J + 1, band);
    if (out.variants.empty()) {
      for (const auto& r : coarse) out.variants.push_back(r.variant);
      out.ratios.resize(coarse.size());
      out.refined.resize(coarse.size());
    }
    for (std::size_t v = 0; v < coarse.size(); ++v) {
      const double a = coarse[v].ratio;
      const double b = refined[v].ratio;
      out.ratios[v].push_back(a);
      out.refined[v].push_back(b);
      all.push_back(a);
      out.finite = out.finite && std::isfinite(a) && std::isfinite(b);
      out.max_ratio = std::max(out.max_ratio, a);
      if (std::max(a, b) > kNegligibleRatio) {
        const double factor = std::max(a, b) / std::min(a, b);
        out.max_refinement_factor = std::max(out.max_refinement_factor, factor);
      }
    }
  }
  std::sort(all.begin(), all.end());
  const std::size_t n = all.size();
  out.median_ratio = n % 2 ? all[n / 2] : 0.5 * (all[n / 2 - 1] + all[n / 2]);
  out.refinement_ok = out.max_refinement_factor <= 2.0;
  return out;
}

}  // namespace varbesov
