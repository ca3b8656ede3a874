#include <immintrin.h>

#include <cmath>

#include "linstab/kernels.hpp"

namespace linstab::kernels {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

void axpy_avx2(std::size_t n, double a, const double* x, double* y) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double dot_avx2(std::size_t n, const double* x, const double* y) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

double dot_rev_avx2(std::size_t n, const double* x, const double* y) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vx = _mm256_loadu_pd(x + i);
    __m256d vy = _mm256_loadu_pd(y + (n - 4 - i));
    vy = _mm256_permute4x64_pd(vy, 0x1B);  // reverse lanes
    acc = _mm256_fmadd_pd(vx, vy, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i] * y[n - 1 - i];
  return s;
}

// Phasor rotation across four consecutive samples per vector step, reseeded
// from libm every kReseed vector iterations to bound drift.
constexpr std::size_t kReseed = 32;

void harmonic_accumulate_avx2(std::size_t n, double dt, double w, double ca,
                              double cs, double* out) {
  const __m256d vca = _mm256_set1_pd(ca);
  const __m256d vcs = _mm256_set1_pd(cs);
  const double step = 4.0 * w * dt;
  const __m256d vC = _mm256_set1_pd(std::cos(step));
  const __m256d vS = _mm256_set1_pd(std::sin(step));

  std::size_t i = 0;
  __m256d c{}, s{};
  std::size_t since_seed = kReseed;
  for (; i + 4 <= n; i += 4) {
    if (since_seed >= kReseed) {
      alignas(32) double cb[4], sb[4];
      for (int j = 0; j < 4; ++j) {
        const double ph = w * dt * static_cast<double>(i + j);
        cb[j] = std::cos(ph);
        sb[j] = std::sin(ph);
      }
      c = _mm256_load_pd(cb);
      s = _mm256_load_pd(sb);
      since_seed = 0;
    }
    __m256d vy = _mm256_loadu_pd(out + i);
    vy = _mm256_fmadd_pd(vca, c, vy);
    vy = _mm256_fmadd_pd(vcs, s, vy);
    _mm256_storeu_pd(out + i, vy);
    const __m256d cn = _mm256_fmsub_pd(c, vC, _mm256_mul_pd(s, vS));
    s = _mm256_fmadd_pd(s, vC, _mm256_mul_pd(c, vS));
    c = cn;
    ++since_seed;
  }
  for (; i < n; ++i) {
    const double ph = w * dt * static_cast<double>(i);
    out[i] += ca * std::cos(ph) + cs * std::sin(ph);
  }
}

double sin_dot_avx2(std::size_t n, double dt, double w, const double* g) {
  const double step = 4.0 * w * dt;
  const __m256d vC = _mm256_set1_pd(std::cos(step));
  const __m256d vS = _mm256_set1_pd(std::sin(step));
  __m256d acc = _mm256_setzero_pd();

  std::size_t i = 0;
  __m256d c{}, s{};
  std::size_t since_seed = kReseed;
  for (; i + 4 <= n; i += 4) {
    if (since_seed >= kReseed) {
      alignas(32) double cb[4], sb[4];
      for (int j = 0; j < 4; ++j) {
        const double ph = w * dt * static_cast<double>(i + j);
        cb[j] = std::cos(ph);
        sb[j] = std::sin(ph);
      }
      c = _mm256_load_pd(cb);
      s = _mm256_load_pd(sb);
      since_seed = 0;
    }
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(g + i), s, acc);
    const __m256d cn = _mm256_fmsub_pd(c, vC, _mm256_mul_pd(s, vS));
    s = _mm256_fmadd_pd(s, vC, _mm256_mul_pd(c, vS));
    c = cn;
    ++since_seed;
  }
  double total = hsum(acc);
  for (; i < n; ++i)
    total += g[i] * std::sin(w * dt * static_cast<double>(i));
  return total;
}

}  // namespace

const Ops avx2_ops = {axpy_avx2, dot_avx2, dot_rev_avx2,
                      harmonic_accumulate_avx2, sin_dot_avx2};

}  // namespace linstab::kernels
