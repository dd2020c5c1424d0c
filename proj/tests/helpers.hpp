#pragma once

#include <cmath>
#include <limits>

#include "varbesov/exponents.hpp"
#include "varbesov/grid.hpp"
#include "varbesov/sampling.hpp"

namespace testing {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double rel_err(double got, double want) {
  return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

inline varbesov::ExponentField constant_exponent(const varbesov::Grid& g, double v) {
  return varbesov::ExponentField::constant(g, varbesov::ExtendedReal::from_double(v));
}

inline varbesov::ExponentField smooth_exponent(const varbesov::Grid& g, double v) {
  return varbesov::ExponentField::constant(g, varbesov::ExtendedReal::from_double(v),
                                           varbesov::ExponentKind::smoothness);
}

inline varbesov::ExponentField family(const varbesov::Grid& g, const std::string& name,
                                      std::map<std::string, double> params,
                                      varbesov::ExponentKind kind = varbesov::ExponentKind::integrability) {
  return varbesov::make_family(g, {name, std::move(params)}, kind);
}

// Indicator of x_0 in [a, b).
inline varbesov::Field indicator(const varbesov::Grid& g, double a, double b, double value = 1.0) {
  return varbesov::Field::sample(g, [&](const varbesov::Grid::Point& x) { return x[0] >= a && x[0] < b ? value : 0.0; });
}

// Small 1D desk grid: h = 1/32 on [-16, 16).
inline varbesov::Grid small_grid() { return varbesov::Grid(1, 16.0, 1024); }

}  // namespace testing
