#pragma once

#include "varbesov/exponents.hpp"
#include "varbesov/extended.hpp"
#include "varbesov/grid.hpp"

namespace varbesov {

// omega_p(t): t^p for finite p, and for p = inf the indicator-type
// 0 (t <= 1) / inf (t > 1); omega_p(0) = 0. Throws on t < 0.
ExtendedReal omega(double t, ExtendedReal p);

// rho_p(f) = integral of omega_{p(x)}(|f(x)|), straight quadrature with pow.
ExtendedReal modular(const Field& f, const ExponentField& p);

// inf{lambda > 0 : rho_p(f / lambda) <= 1}; 0 for f == 0. The returned value
// satisfies rho_p(f / value) <= 1 and is within a relative 1e-13 of the
// infimum.
double luxemburg_norm(const Field& f, const ExponentField& p);

// Classical (h^n sum |f|^p0)^(1/p0), or max|f| for p0 = inf.
double constant_exponent_norm(const Field& f, ExtendedReal p0);

}  // namespace varbesov
