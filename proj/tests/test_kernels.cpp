#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "varbesov/kernels.hpp"
#include "varbesov/sampling.hpp"

using namespace varbesov;
namespace k = varbesov::kernels;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> uniform_vec(Rng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(lo, hi);
  return v;
}

bool close(double a, double b, double rel) {
  if (a == b) return true;  // covers matching infinities
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("backend names and switching") {
    CHECK(k::name(k::Backend::scalar) == "scalar");
    CHECK(k::name(k::Backend::avx2) == "avx2");
    CHECK(k::available(k::Backend::scalar));
    const k::Backend before = k::active_backend();
    k::set_active_backend(k::Backend::scalar);
    CHECK(k::active_backend() == k::Backend::scalar);
    CHECK(&k::active() == &k::table(k::Backend::scalar));
    k::set_active_backend(before);
  }

  TEST_CASE("scalar reference values") {
    const auto& s = k::scalar::table();
    const double a[] = {0.0, std::log(2.0), std::log(3.0)};
    const double b[] = {1.0, 1.0, 2.0};
    CHECK(s.sum_exp_affine(a, b, 0.0, 3) == doctest::Approx(6.0));
    CHECK(s.max_affine(a, b, 1.0, 3) == doctest::Approx(std::log(2.0) - 1.0));
    CHECK(s.max_affine(a, b, 0.0, 0) == -kInf);
    CHECK(s.sum_exp_affine(a, b, 0.0, 0) == 0.0);
    const double x[] = {1.0, -4.0, 2.0};
    const double y[] = {1.5, -1.0, 2.0};
    CHECK(s.max_abs_diff(x, y, 3) == 3.0);
    CHECK(s.max_abs(x, 3) == 4.0);
    CHECK(s.sum(x, 3) == -1.0);
    double out[3];
    s.scale_exp(b, std::log(2.0), x, out, 3);
    CHECK(out[2] == doctest::Approx(8.0));
    double yy[] = {1.0, 1.0, 1.0};
    s.xpay(x, 0.5, yy, 3);
    CHECK(yy[1] == -3.5);
  }

  TEST_CASE("vector backend matches the scalar reference") {
    if (!k::available(k::Backend::avx2)) {
      MESSAGE("avx2 not available on this machine; equivalence not exercised");
      return;
    }
    const auto& s = k::table(k::Backend::scalar);
    const auto& v = k::table(k::Backend::avx2);
    Rng rng(2024);
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u, 31u, 37u, 1000u, 4099u}) {
      CAPTURE(n);
      const auto a = uniform_vec(rng, n, -50.0, 50.0);
      const auto b = uniform_vec(rng, n, 0.0, 4.0);
      const auto x = uniform_vec(rng, n, -3.0, 3.0);
      const auto y = uniform_vec(rng, n, -3.0, 3.0);
      for (double u : {-20.0, -1.0, 0.0, 0.3, 12.0}) {
        CHECK(close(v.sum_exp_affine(a.data(), b.data(), u, n), s.sum_exp_affine(a.data(), b.data(), u, n), 1e-14));
        // fused multiply-add in the vector path: a few ulps
        CHECK(close(v.max_affine(a.data(), b.data(), u, n), s.max_affine(a.data(), b.data(), u, n), 1e-15 * 64));
      }
      CHECK(v.max_abs_diff(x.data(), y.data(), n) == s.max_abs_diff(x.data(), y.data(), n));
      CHECK(v.max_abs(x.data(), n) == s.max_abs(x.data(), n));
      CHECK(close(v.sum(x.data(), n), s.sum(x.data(), n), 1e-13 * static_cast<double>(n + 1)));

      std::vector<double> o1(n), o2(n);
      s.scale_exp(b.data(), -1.7, x.data(), o1.data(), n);
      v.scale_exp(b.data(), -1.7, x.data(), o2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(close(o1[i], o2[i], 4e-16));

      std::vector<double> y1 = y, y2 = y;
      s.xpay(x.data(), 0.75, y1.data(), n);
      v.xpay(x.data(), 0.75, y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y1[i] - y2[i]) <= 4e-16 * (std::abs(x[i]) + std::abs(y[i])));

      std::vector<std::complex<double>> z1(n), z2;
      for (std::size_t i = 0; i < n; ++i) z1[i] = {x[i], y[i]};
      z2 = z1;
      s.mul_real_complex(b.data(), z1.data(), n);
      v.mul_real_complex(b.data(), z2.data(), n);
      CHECK(z1 == z2);
    }
  }

  TEST_CASE("vector exp at the edges of the double range") {
    if (!k::available(k::Backend::avx2)) return;
    const auto& s = k::table(k::Backend::scalar);
    const auto& v = k::table(k::Backend::avx2);
    for (double a0 : {-800.0, -745.0, -740.0, -708.5, -700.0, 0.0, 700.0, 709.0, 709.78, 710.0, 800.0}) {
      CAPTURE(a0);
      std::vector<double> a(9, a0), b(9, 0.0);
      const double sv = v.sum_exp_affine(a.data(), b.data(), 0.0, a.size());
      const double ss = s.sum_exp_affine(a.data(), b.data(), 0.0, a.size());
      if (ss == 0.0 || std::isinf(ss)) CHECK(sv == ss);
      else if (ss < 1e-300) CHECK(std::abs(sv - ss) <= 1e-320);  // subnormal range
      else CHECK(close(sv, ss, 1e-14));
    }
    // -inf inputs (log of zero) contribute nothing
    std::vector<double> a = {-kInf, 0.0, -kInf, 1.0, -kInf};
    std::vector<double> b(5, 1.0);
    CHECK(close(v.sum_exp_affine(a.data(), b.data(), 0.0, 5), 1.0 + std::exp(1.0), 1e-15));
    CHECK(v.max_affine(a.data(), b.data(), 0.0, 5) == 1.0);
  }
}
