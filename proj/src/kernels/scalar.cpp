#include "varbesov/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace varbesov::kernels::scalar {
namespace {

double sum_exp_affine(const double* a, const double* b, double u, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::exp(a[i] - b[i] * u);
  return acc;
}

double max_affine(const double* a, const double* b, double u, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, a[i] - b[i] * u);
  return m;
}

double max_abs_diff(const double* x, const double* y, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

double max_abs(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

double sum(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

void scale_exp(const double* s, double c, const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(c * s[i]) * x[i];
}

void xpay(const double* x, double alpha, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + alpha * y[i];
}

void mul_real_complex(const double* m, std::complex<double>* z, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) z[i] *= m[i];
}

constexpr KernelTable kTable{
    sum_exp_affine, max_affine, max_abs_diff, max_abs, sum, scale_exp, xpay, mul_real_complex,
};

}  // namespace

const KernelTable& table() { return kTable; }

}  // namespace varbesov::kernels::scalar
