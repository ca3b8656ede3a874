#pragma once

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "linstab/params.hpp"

namespace linstab {

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1] (QUADPACK dqk15).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kKronrodW[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGaussW[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class T>
double abs_of(const T& v) {
  if constexpr (std::is_same_v<T, std::complex<double>>)
    return std::abs(v);
  else
    return std::fabs(v);
}

}  // namespace detail

/// One Gauss7/Kronrod15 panel. Returns the K15 estimate; err receives the
/// usual (200|K-G|)^{3/2} error heuristic capped by |K-G|.
template <class F, class T = std::invoke_result_t<F, double>>
T gk15_panel(const F& f, double lo, double hi, double& err) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  T f0 = f(mid);
  T k15 = detail::kKronrodW[7] * f0;
  T g7 = detail::kGaussW[3] * f0;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * detail::kGK15Nodes[i];
    T fi = f(mid + dx) + f(mid - dx);
    k15 += detail::kKronrodW[i] * fi;
    if (i % 2 == 1) g7 += detail::kGaussW[i / 2] * fi;
  }
  k15 *= half;
  g7 *= half;

  const double diff = detail::abs_of<T>(k15 - g7);
  err = std::min(diff, std::pow(200.0 * diff, 1.5));
  return k15;
}

/// Adaptive Gauss-Kronrod quadrature of f over [lo, hi] to absolute
/// tolerance tol. Throws numerical_error past the subdivision budget.
template <class F, class T = std::invoke_result_t<F, double>>
T adaptive_gk15(const F& f, double lo, double hi, double tol,
                int max_panels = 4000) {
  struct Panel {
    double lo, hi, err;
    T val;
  };
  std::vector<Panel> stack;
  double err0;
  T val0 = gk15_panel<F, T>(f, lo, hi, err0);
  stack.push_back({lo, hi, err0, val0});

  T total{};
  double budget = tol;
  int used = 1;
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    if (p.err <= budget * (p.hi - p.lo) / (hi - lo) || p.err <= 1e-300) {
      total += p.val;
      continue;
    }
    if (used + 2 > max_panels)
      throw numerical_error("adaptive_gk15: subdivision budget exhausted");
    const double mid = 0.5 * (p.lo + p.hi);
    double e1, e2;
    T v1 = gk15_panel<F, T>(f, p.lo, mid, e1);
    T v2 = gk15_panel<F, T>(f, mid, p.hi, e2);
    stack.push_back({p.lo, mid, e1, v1});
    stack.push_back({mid, p.hi, e2, v2});
    used += 2;
  }
  return total;
}

}  // namespace linstab
