#pragma once

#include <cstddef>

namespace linstab::kernels {

/// Data-parallel inner loops used by the mode-synthesis, convolution and
/// radial-transform layers. Every entry has a scalar reference
/// implementation; on x86-64 an AVX2 variant is selected at runtime and is
/// equivalence-tested against the reference.
struct Ops {
  // y[i] += a * x[i]
  void (*axpy)(std::size_t n, double a, const double* x, double* y);

  // sum_i x[i] * y[i]
  double (*dot)(std::size_t n, const double* x, const double* y);

  // sum_i x[i] * y[n-1-i]  (correlation inner loop for causal convolution)
  double (*dot_rev)(std::size_t n, const double* x, const double* y);

  // out[i] += ca*cos(w*i*dt) + cs*sin(w*i*dt)
  void (*harmonic_accumulate)(std::size_t n, double dt, double w, double ca,
                              double cs, double* out);

  // sum_i g[i] * sin(w*i*dt)   (radial sine-transform inner loop)
  double (*sin_dot)(std::size_t n, double dt, double w, const double* g);
};

enum class Backend { scalar, avx2 };

bool avx2_available();

/// Active backend (auto-selected at startup; honors LINSTAB_KERNELS=scalar|avx2).
Backend active_backend();
void force_backend(Backend b);

const Ops& ops();             // active backend
const Ops& ops(Backend b);    // explicit backend; throws if unavailable

extern const Ops scalar_ops;
#ifdef __x86_64__
extern const Ops avx2_ops;
#endif

}  // namespace linstab::kernels
