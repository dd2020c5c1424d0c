#include "varbesov/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "varbesov/kernels.hpp"

namespace varbesov::fft {
namespace {

// FFTW planning is not thread-safe; execution on new arrays is. Plans are
// made once per (dim, N, direction), in place and without alignment
// assumptions, and reused through fftw_execute_dft.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan get(int dim, std::size_t n, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_tuple(dim, n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    const std::size_t total = dim == 1 ? n : n * n;
    auto* buf = fftw_alloc_complex(total);
    fftw_plan plan = dim == 1 ? fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign,
                                                 FFTW_ESTIMATE | FFTW_UNALIGNED)
                              : fftw_plan_dft_2d(static_cast<int>(n), static_cast<int>(n), buf,
                                                 buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    if (plan == nullptr) throw std::runtime_error("fftw plan creation failed");
    plans_.emplace(key, plan);
    return plan;
  }

  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, std::size_t, int>, fftw_plan> plans_;
};

void execute(const Grid& grid, Spectrum& data, int sign) {
  fftw_plan plan = PlanCache::instance().get(grid.dim(), grid.points_per_axis(), sign);
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, ptr, ptr);
}

}  // namespace

Spectrum forward(const Field& f) {
  Spectrum data(f.size());
  auto v = f.values();
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = v[i];
  execute(f.grid(), data, FFTW_FORWARD);
  return data;
}

Field inverse(const Grid& grid, Spectrum spectrum) {
  if (spectrum.size() != grid.size()) throw std::invalid_argument("fft::inverse: size mismatch");
  execute(grid, spectrum, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(grid.size());
  std::vector<double> out(spectrum.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = spectrum[i].real() * scale;
  return Field(grid, std::move(out));
}

Field apply_multiplier(const Field& f, const std::vector<double>& multiplier) {
  if (multiplier.size() != f.size()) throw std::invalid_argument("apply_multiplier: size mismatch");
  Spectrum s = forward(f);
  kernels::active().mul_real_complex(multiplier.data(), s.data(), s.size());
  return inverse(f.grid(), std::move(s));
}

}  // namespace varbesov::fft
