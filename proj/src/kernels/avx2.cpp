// Compiled with -mavx2 -mfma; only reached through dispatch after a cpuid check.

#include "varbesov/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace varbesov::kernels::avx2 {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_max_sd(lo, sh));
}

inline __m256d abs_pd(__m256d v) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

// Multiplies y by 2^k for integral k in [-1080, 1080], applying two factors
// that each stay inside the normal exponent range.
inline __m256d scale_pow2(__m256d y, __m256d kd) {
  __m256d k1 = _mm256_floor_pd(_mm256_mul_pd(kd, _mm256_set1_pd(0.5)));
  __m256d k2 = _mm256_sub_pd(kd, k1);
  auto to_scale = [](__m256d k) {
    __m256i ki = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(k));
    ki = _mm256_add_epi64(ki, _mm256_set1_epi64x(1023));
    return _mm256_castsi256_pd(_mm256_slli_epi64(ki, 52));
  };
  return _mm256_mul_pd(_mm256_mul_pd(y, to_scale(k1)), to_scale(k2));
}

// exp(x) to within ~2 ulp for finite x; +inf above the overflow threshold,
// 0 below the underflow threshold.
inline __m256d exp_pd(__m256d x) {
  const __m256d overflow = _mm256_set1_pd(709.782712893384);
  const __m256d underflow = _mm256_set1_pd(-745.1332191019412);
  __m256d xc = _mm256_min_pd(_mm256_max_pd(x, _mm256_set1_pd(-746.0)), _mm256_set1_pd(710.0));

  __m256d kd = _mm256_round_pd(_mm256_mul_pd(xc, _mm256_set1_pd(1.4426950408889634)),
                               _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(kd, _mm256_set1_pd(6.93147180369123816490e-01), xc);
  r = _mm256_fnmadd_pd(kd, _mm256_set1_pd(1.90821492927058770002e-10), r);

  // Taylor series to degree 13; |r| <= ln2/2 keeps the truncation below 1e-17.
  __m256d p = _mm256_set1_pd(1.0 / 6227020800.0);
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 479001600.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 39916800.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 3628800.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 362880.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 40320.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 5040.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 720.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 120.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 24.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 6.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(0.5));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));

  __m256d y = scale_pow2(p, kd);
  y = _mm256_blendv_pd(y, _mm256_set1_pd(std::numeric_limits<double>::infinity()),
                       _mm256_cmp_pd(x, overflow, _CMP_GT_OQ));
  y = _mm256_blendv_pd(y, _mm256_setzero_pd(), _mm256_cmp_pd(x, underflow, _CMP_LT_OQ));
  return y;
}

double sum_exp_affine(const double* a, const double* b, double u, std::size_t n) {
  const __m256d vu = _mm256_set1_pd(u);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d x0 = _mm256_fnmadd_pd(_mm256_loadu_pd(b + i), vu, _mm256_loadu_pd(a + i));
    __m256d x1 = _mm256_fnmadd_pd(_mm256_loadu_pd(b + i + 4), vu, _mm256_loadu_pd(a + i + 4));
    acc0 = _mm256_add_pd(acc0, exp_pd(x0));
    acc1 = _mm256_add_pd(acc1, exp_pd(x1));
  }
  for (; i + 4 <= n; i += 4) {
    __m256d x0 = _mm256_fnmadd_pd(_mm256_loadu_pd(b + i), vu, _mm256_loadu_pd(a + i));
    acc0 = _mm256_add_pd(acc0, exp_pd(x0));
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += std::exp(a[i] - b[i] * u);
  return acc;
}

double max_affine(const double* a, const double* b, double u, std::size_t n) {
  const __m256d vu = _mm256_set1_pd(u);
  double m = -std::numeric_limits<double>::infinity();
  __m256d vm = _mm256_set1_pd(m);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    vm = _mm256_max_pd(vm, _mm256_fnmadd_pd(_mm256_loadu_pd(b + i), vu, _mm256_loadu_pd(a + i)));
  m = hmax(vm);
  for (; i < n; ++i) m = std::max(m, a[i] - b[i] * u);
  return m;
}

double max_abs_diff(const double* x, const double* y, std::size_t n) {
  __m256d vm = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    vm = _mm256_max_pd(vm, abs_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i))));
  double m = hmax(vm);
  for (; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

double max_abs(const double* x, std::size_t n) {
  __m256d vm = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) vm = _mm256_max_pd(vm, abs_pd(_mm256_loadu_pd(x + i)));
  double m = hmax(vm);
  for (; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

double sum(const double* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x + i + 4));
  }
  for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += x[i];
  return acc;
}

void scale_exp(const double* s, double c, const double* x, double* out, std::size_t n) {
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d e = exp_pd(_mm256_mul_pd(vc, _mm256_loadu_pd(s + i)));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(e, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) out[i] = std::exp(c * s[i]) * x[i];
}

void xpay(const double* x, double alpha, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(y + i), _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) y[i] = x[i] + alpha * y[i];
}

void mul_real_complex(const double* m, std::complex<double>* z, std::size_t n) {
  auto* zd = reinterpret_cast<double*>(z);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    // [m0 m0 m1 m1]
    __m128d mm = _mm_loadu_pd(m + i);
    __m256d mv = _mm256_permute4x64_pd(_mm256_castpd128_pd256(mm), 0b01010000);
    _mm256_storeu_pd(zd + 2 * i, _mm256_mul_pd(mv, _mm256_loadu_pd(zd + 2 * i)));
  }
  for (; i < n; ++i) z[i] *= m[i];
}

constexpr KernelTable kTable{
    sum_exp_affine, max_affine, max_abs_diff, max_abs, sum, scale_exp, xpay, mul_real_complex,
};

}  // namespace

const KernelTable& table() { return kTable; }

}  // namespace varbesov::kernels::avx2
