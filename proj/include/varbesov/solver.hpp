#pragma once

// Inversion of non-increasing maps, used for every infimum in the library:
// Luxemburg norms, the inner lambda_j of the mixed modular, the outer mu of
// the mixed norm and the beta_j of the dual witness. All of them are solved in
// log scale, u = log(lambda), where the constant-exponent case is exactly
// linear.

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace varbesov::solver {

inline constexpr double kLogLower = -700.0;
inline constexpr double kLogUpper = 700.0;

struct Options {
  // Absolute width of the final bracket in u, i.e. relative width in lambda.
  double tolerance = 1e-13;
  int max_iterations = 400;
  double initial_step = 1.0;
};

struct Threshold {
  // inf{u : g(u) <= 0}; -inf when g(kLogLower) <= 0, +inf when g(kLogUpper) > 0.
  double u = 0.0;
  int evaluations = 0;
};

// g must be non-increasing with values in [-inf, +inf]. The returned u is the
// upper end of the final bracket, so g(u) <= 0 holds at it.
template <class G>
Threshold threshold(G&& g, double guess, const Options& opt = {}) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  Threshold out;
  auto eval = [&](double u) {
    ++out.evaluations;
    return g(u);
  };

  double u0 = std::min(std::max(guess, kLogLower), kLogUpper);
  double g0 = eval(u0);
  double lo, hi, flo, fhi;
  double step = opt.initial_step;
  if (g0 <= 0.0) {
    hi = u0;
    fhi = g0;
    for (;;) {
      double cand = hi - step;
      if (cand <= kLogLower) {
        cand = kLogLower;
        double gc = eval(cand);
        if (gc <= 0.0) {
          out.u = -inf;
          return out;
        }
        lo = cand;
        flo = gc;
        break;
      }
      double gc = eval(cand);
      if (gc > 0.0) {
        lo = cand;
        flo = gc;
        break;
      }
      hi = cand;
      fhi = gc;
      step *= 2.0;
    }
  } else {
    lo = u0;
    flo = g0;
    for (;;) {
      double cand = lo + step;
      if (cand >= kLogUpper) {
        cand = kLogUpper;
        double gc = eval(cand);
        if (gc > 0.0) {
          out.u = inf;
          return out;
        }
        hi = cand;
        fhi = gc;
        break;
      }
      double gc = eval(cand);
      if (gc <= 0.0) {
        hi = cand;
        fhi = gc;
        break;
      }
      lo = cand;
      flo = gc;
      step *= 2.0;
    }
  }

  // Illinois-modified regula falsi on the bracket [lo, hi] with g(lo) > 0 >= g(hi),
  // falling back to bisection whenever an endpoint value is infinite or the
  // bracket stops halving.
  int side = 0;
  int since_check = 0;
  double width_at_check = hi - lo;
  for (int it = 0; it < opt.max_iterations && hi - lo > opt.tolerance; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    bool bisect = !std::isfinite(flo) || !std::isfinite(fhi) || flo == fhi;
    if (++since_check > 3) {
      if (hi - lo > 0.5 * width_at_check) bisect = true;
      since_check = 0;
      width_at_check = hi - lo;
    }
    double u = bisect ? mid : hi - fhi * (hi - lo) / (fhi - flo);
    // Stepping at least tolerance/2 inside lets the far endpoint move too.
    u = std::min(std::max(u, lo + 0.5 * opt.tolerance), hi - 0.5 * opt.tolerance);
    const double gu = eval(u);
    if (gu <= 0.0) {
      hi = u;
      fhi = gu;
      if (side == -1) flo *= 0.5;
      side = -1;
      if (gu == 0.0) break;
    } else {
      lo = u;
      flo = gu;
      if (side == 1) fhi *= 0.5;
      side = 1;
    }
  }
  out.u = hi;
  return out;
}

}  // namespace varbesov::solver
