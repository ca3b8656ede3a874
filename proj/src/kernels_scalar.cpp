#include <cmath>

#include "linstab/kernels.hpp"

namespace linstab::kernels {

namespace {

void axpy_scalar(std::size_t n, double a, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double dot_scalar(std::size_t n, const double* x, const double* y) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double dot_rev_scalar(std::size_t n, const double* x, const double* y) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[n - 1 - i];
  return s;
}

void harmonic_accumulate_scalar(std::size_t n, double dt, double w, double ca,
                                double cs, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ph = w * dt * static_cast<double>(i);
    out[i] += ca * std::cos(ph) + cs * std::sin(ph);
  }
}

double sin_dot_scalar(std::size_t n, double dt, double w, const double* g) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += g[i] * std::sin(w * dt * static_cast<double>(i));
  return s;
}

}  // namespace

const Ops scalar_ops = {axpy_scalar, dot_scalar, dot_rev_scalar,
                        harmonic_accumulate_scalar, sin_dot_scalar};

}  // namespace linstab::kernels
