#include "varbesov/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace varbesov::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(VARBESOV_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend initial_backend() {
  if (const char* env = std::getenv("VARBESOV_SIMD")) {
    std::string v(env);
    if (v == "scalar") return Backend::scalar;
    if (v == "avx2" && cpu_has_avx2()) return Backend::avx2;
  }
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{initial_backend()};
  return backend;
}

}  // namespace

bool available(Backend backend) {
  return backend == Backend::scalar || (backend == Backend::avx2 && cpu_has_avx2());
}

const KernelTable& table(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return scalar::table();
    case Backend::avx2:
#if defined(VARBESOV_BUILD_AVX2)
      if (cpu_has_avx2()) return avx2::table();
#endif
      break;
  }
  throw std::invalid_argument("kernel backend not available on this build/cpu");
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

const KernelTable& active() { return table(active_backend()); }

void set_active_backend(Backend backend) {
  if (!available(backend)) throw std::invalid_argument("kernel backend not available");
  current().store(backend, std::memory_order_relaxed);
}

std::string_view name(Backend backend) {
  return backend == Backend::avx2 ? "avx2" : "scalar";
}

}  // namespace varbesov::kernels
