#include "linstab/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace linstab::kernels {

bool avx2_available() {
#if defined(__x86_64__) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Backend pick_default() {
  if (const char* env = std::getenv("LINSTAB_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && avx2_available()) return Backend::avx2;
  }
#ifdef LINSTAB_HAVE_AVX2
  if (avx2_available()) return Backend::avx2;
#endif
  return Backend::scalar;
}

Backend g_backend = pick_default();

}  // namespace

Backend active_backend() { return g_backend; }

void force_backend(Backend b) {
  if (b == Backend::avx2) {
#ifdef LINSTAB_HAVE_AVX2
    if (!avx2_available())
      throw std::runtime_error("AVX2 kernels unavailable on this host");
#else
    throw std::runtime_error("AVX2 kernels not built");
#endif
  }
  g_backend = b;
}

const Ops& ops(Backend b) {
  switch (b) {
    case Backend::scalar:
      return scalar_ops;
    case Backend::avx2:
#ifdef LINSTAB_HAVE_AVX2
      if (avx2_available()) return avx2_ops;
#endif
      throw std::runtime_error("AVX2 kernels unavailable");
  }
  return scalar_ops;
}

const Ops& ops() { return ops(g_backend); }

}  // namespace linstab::kernels
