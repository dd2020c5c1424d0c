#pragma once

// Data-parallel inner loops shared by the norm solvers, the Fourier
// multipliers and the log-Hoelder scans. Every kernel has a scalar reference
// implementation; vector variants are selected once at startup and are
// required to agree with the reference to a few ulps per element (sums are
// reassociated, so reductions agree to a relative 1e-14).

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace varbesov::kernels {

enum class Backend { scalar, avx2 };

struct KernelTable {
  // sum_i exp(a_i - b_i * u)
  double (*sum_exp_affine)(const double* a, const double* b, double u, std::size_t n);
  // max_i (a_i - b_i * u); -inf for n == 0
  double (*max_affine)(const double* a, const double* b, double u, std::size_t n);
  // max_i |x_i - y_i|
  double (*max_abs_diff)(const double* x, const double* y, std::size_t n);
  // max_i |x_i|
  double (*max_abs)(const double* x, std::size_t n);
  double (*sum)(const double* x, std::size_t n);
  // out_i = exp(c * s_i) * x_i
  void (*scale_exp)(const double* s, double c, const double* x, double* out, std::size_t n);
  // y_i = x_i + alpha * y_i
  void (*xpay)(const double* x, double alpha, double* y, std::size_t n);
  // z_i *= m_i (real multiplier on a complex spectrum)
  void (*mul_real_complex)(const double* m, std::complex<double>* z, std::size_t n);
};

const KernelTable& table(Backend backend);
bool available(Backend backend);

// Backend in use by the library. Defaults to the widest available one; the
// VARBESOV_SIMD environment variable ("scalar" or "avx2") overrides it.
Backend active_backend();
const KernelTable& active();
void set_active_backend(Backend backend);

std::string_view name(Backend backend);

namespace scalar {
const KernelTable& table();
}
#if defined(VARBESOV_BUILD_AVX2)
namespace avx2 {
const KernelTable& table();
}
#endif

}  // namespace varbesov::kernels
