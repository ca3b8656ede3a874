#include "linstab/greens.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "linstab/kernels.hpp"
#include "linstab/oscillatory.hpp"
#include "linstab/spectral.hpp"

namespace linstab {

double retarded_kg_mode(double t, double p_abs, double M2) {
  const double w2 = p_abs * p_abs + M2;
  if (w2 < 0.0)
    throw std::domain_error("retarded_kg_mode: negative squared frequency");
  if (t <= 0.0) return 0.0;
  if (w2 == 0.0) return -t;
  const double w = std::sqrt(w2);
  return -std::sin(w * t) / w;
}

double cut_density_value(const ModelParams& p, double M2, double floor_rel) {
  const double fm2 = p.fourM2();
  if (M2 < fm2) throw std::domain_error("cut_density_value: M2 below threshold");
  if (p.m == 0.0 && M2 == 0.0) return 0.0;  // log-suppressed threshold limit
  const double k = p.kappa();
  const auto bv = fa_cut_boundary(M2, p.m, p.a, CutSide::above);
  const double rho = p.m > 0.0 ? std::sqrt(1.0 - fm2 / M2) : 1.0;
  const double lin = p.lambda2 * M2 - p.lambda1;
  const double re_s = lin * k * bv.real_part + (p.g2 * M2 - p.g1);
  const double im_s = lin * k * bv.imag_part;
  const double s_sq = re_s * re_s + im_s * im_s;
  const double scale = (std::fabs(lin) * k * (std::fabs(bv.real_part) + M_PI) +
                        std::fabs(p.g2) * M2 + std::fabs(p.g1)) +
                       1e-300;
  if (s_sq < floor_rel * floor_rel * scale * scale)
    throw numerical_error(
        "cut_density_value: |S(-M^2)| below floor (parameters sit on or near "
        "the condition boundary where the cut integral is singular)");
  return k * rho * lin / s_sq;
}

namespace {

// Fit |density| ~ C * (M2)^(-q) on the last decade and integrate the tail in
// the omega measure; returns +inf when the decay cannot certify one.
double tail_abs_bound(const ModelParams& p, double M2max) {
  const double d_end = std::fabs(cut_density_value(p, M2max));
  const double d_mid = std::fabs(cut_density_value(p, M2max / 10.0));
  if (d_end <= 0.0 || d_mid <= 0.0)
    return std::numeric_limits<double>::infinity();
  const double q = std::log(d_mid / d_end) / std::log(10.0);
  // in omega: |G| = 2|density|, omega ~ sqrt(M2), |G| ~ omega^{-2q};
  // integral_W^inf |G| domega = 2 d_end W / (2q - 1) for q > 1/2
  if (q <= 0.55) return std::numeric_limits<double>::infinity();
  return 2.0 * d_end * std::sqrt(M2max) / (2.0 * q - 1.0);
}

}  // namespace

CutDensity cut_density(const ModelParams& p, double M2max, int n_nodes) {
  p.validate();
  const double fm2 = p.fourM2();
  if (!(M2max > fm2)) throw std::invalid_argument("cut_density: M2max <= 4m^2");
  if (n_nodes < 2) throw std::invalid_argument("cut_density: n_nodes < 2");

  CutDensity cd;
  cd.m2_max = M2max;
  cd.m2_nodes.resize(n_nodes);
  cd.weights.resize(n_nodes);
  const double u_max = std::sqrt(M2max - fm2);
  for (int i = 0; i < n_nodes; ++i) {
    const double u = u_max * static_cast<double>(i) / (n_nodes - 1);
    const double M2 = fm2 + u * u;
    cd.m2_nodes[i] = M2;
    cd.weights[i] = cut_density_value(p, M2);
  }
  cd.tail_coeff = 4.0 * std::fabs(cd.weights.back());
  cd.tail_abs = tail_abs_bound(p, M2max);
  return cd;
}

namespace {

double auto_m2_max(const ModelParams& p, double m2_core) {
  // Extend geometrically until the density has dropped seven orders below
  // its core maximum; the omitted tail then stays below ~1e-7 of the cut
  // contribution scale (integration-by-parts bound).
  double dmax = 0.0;
  const double fm2 = p.fourM2();
  for (int i = 1; i <= 32; ++i) {
    const double M2 = fm2 + (m2_core - fm2) * i / 32.0;
    dmax = std::max(dmax, std::fabs(cut_density_value(p, M2)));
  }
  double M2 = m2_core;
  const double cap = 1e12 * std::max(1.0, p.m * p.m);
  while (M2 < cap) {
    if (std::fabs(cut_density_value(p, M2)) <= 1e-7 * dmax) return M2;
    M2 *= 1.6;
  }
  return cap;
}

}  // namespace

ModeGreen mode_green(const ModelParams& p, double p_abs, const TimeGrid& tg,
                     const RootReport& report, const ModeGreenOptions& opt) {
  p.validate();
  if (p_abs < 0.0) throw std::invalid_argument("mode_green: p_abs < 0");
  if (tg.n == 0 || tg.dt <= 0.0)
    throw std::invalid_argument("mode_green: empty time grid");
  if (report.classification == Classification::ContainsPositive)
    throw regime_error(
        "mode_green: retarded fundamental solution unsupported for "
        "configurations with positive roots");
  if (report.classification == Classification::Degenerate)
    throw numerical_error("mode_green: degenerate root report");

  ModeGreen g;
  g.p_abs = p_abs;
  g.grid = tg;
  g.pole_part.assign(tg.n, 0.0);
  g.cut_part.assign(tg.n, 0.0);
  g.values.assign(tg.n, 0.0);

  // Pole sum: -(1/S'(s)) * (-sin(w t)/w) per root.
  double w_max = 0.0;
  for (const Root& r : report.roots) {
    const double w = std::sqrt(p_abs * p_abs - r.s);
    w_max = std::max(w_max, w);
    kernels::ops().harmonic_accumulate(tg.n, tg.dt, w, 0.0,
                                       1.0 / (r.s_prime * w),
                                       g.pole_part.data());
  }
  if (opt.enforce_dt && w_max * tg.dt > 0.1 + 1e-12)
    throw std::invalid_argument(
        "mode_green: time step too coarse for the pole frequencies "
        "(need dt * max(w) <= 0.1)");

  // Branch-cut integral, assembled as int 2*density(M2(w)) sin(w t) dw on a
  // Filon mesh: graded prefix at the threshold kink, uniform core over the
  // structured region, geometric tail to the certified cutoff.
  const double fm2 = p.fourM2();
  double scale2 = std::max({fm2, std::fabs(p.a), 1.0});
  if (p.g2 != 0.0) scale2 = std::max(scale2, std::fabs(p.g1 / p.g2));
  if (p.lambda2 != 0.0)
    scale2 = std::max(scale2, std::fabs(p.lambda1 / p.lambda2));
  const double m2_core = fm2 + 25.0 * scale2;
  const double m2_max =
      opt.m2_max > 0.0 ? opt.m2_max : auto_m2_max(p, m2_core);
  g.m2_max_used = m2_max;

  const double w_th = std::sqrt(p_abs * p_abs + fm2);
  const double w_core = std::sqrt(p_abs * p_abs + std::min(m2_core, m2_max));
  const double w_hi = std::sqrt(p_abs * p_abs + m2_max);

  FilonMesh::Build b;
  b.lo = w_th;
  b.core_hi = std::max(w_core, w_th + 1e-8 * (w_hi - w_th) + 1e-12);
  b.total_hi = w_hi;
  b.n_uniform = std::max(opt.n_uniform, 8);
  b.n_graded = 80;
  b.graded_span = 0.25 * (b.core_hi - b.lo);
  b.geo_ratio = 1.06;

  int n_uniform = b.n_uniform;
  for (int attempt = 0; attempt < 4; ++attempt) {
    b.n_uniform = n_uniform;
    FilonMesh mesh = FilonMesh::build(b);
    mesh.fill([&](double w) {
      const double M2 = w * w - p_abs * p_abs;
      return 2.0 * cut_density_value(p, std::max(M2, fm2));
    });

    // Spike guard: if adjacent node values jump too much the uniform core
    // under-resolves a narrow |S|^2 dip; refine and retry.
    const auto& f = mesh.values();
    double fmax = 0.0;
    for (double v : f) fmax = std::max(fmax, std::fabs(v));
    bool ok = true;
    for (std::size_t i = 1; i + 1 < f.size() && ok; ++i)
      if (std::fabs(f[i] - f[i - 1]) > 0.5 * fmax + 1e-300) ok = false;
    if (!ok && attempt < 3) {
      n_uniform *= 2;
      continue;
    }

    mesh.accumulate_sin_series(tg.dt, tg.n, 1.0, g.cut_part.data());
    break;
  }

  g.tail_coeff = 4.0 * std::fabs(cut_density_value(p, m2_max));
  for (std::size_t i = 0; i < tg.n; ++i)
    g.values[i] = g.pole_part[i] + g.cut_part[i];
  g.pole_part[0] = g.cut_part[0] = g.values[0] = 0.0;
  return g;
}

}  // namespace linstab
