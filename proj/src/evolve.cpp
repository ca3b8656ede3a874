#include "linstab/evolve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

#include "linstab/fft.hpp"
#include "linstab/kernels.hpp"
#include "linstab/spectral.hpp"

namespace linstab {

namespace {

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  const int nt = std::max(1, std::min<int>(threads, static_cast<int>(n)));
  if (nt == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (int t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
        fn(i);
    });
  for (auto& th : pool) th.join();
}

void synthesize(ModeSolution& mode) {
  const std::size_t n = mode.grid.n;
  std::vector<double> re(n, 0.0), im(n, 0.0);
  const auto& ops = kernels::ops();
  for (const auto& c : mode.coefficients) {
    const double w = std::sqrt(mode.p_abs * mode.p_abs - c.s);
    const cplx A = c.c_plus + c.c_minus;
    const cplx B = cplx(0.0, 1.0) * (c.c_plus - c.c_minus);
    ops.harmonic_accumulate(n, mode.grid.dt, w, A.real(), B.real(), re.data());
    ops.harmonic_accumulate(n, mode.grid.dt, w, A.imag(), B.imag(), im.data());
  }
  mode.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) mode.values[i] = cplx(re[i], im[i]);
}

}  // namespace

double time_bump(double t, double center, double width) {
  const double x = (t - center) / width;
  if (std::fabs(x) >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - x * x));
}

ModeSolution solve_ivp_mode(double p_abs, const RootReport& report,
                            const std::vector<cplx>& data, const TimeGrid& tg) {
  if (report.classification != Classification::AllNegative)
    throw regime_error(
        "solve_ivp_mode: initial value problem requires an AllNegative root "
        "set");
  const std::size_t ns = report.roots.size();
  if (ns < 1 || ns > 2)
    throw std::invalid_argument("solve_ivp_mode: |S| must be 1 or 2");
  if (data.size() != 2 * ns)
    throw std::invalid_argument(
        "solve_ivp_mode: need exactly 2|S| data entries (refusing to "
        "zero-fill)");

  ModeSolution mode;
  mode.p_abs = p_abs;
  mode.grid = tg;

  if (ns == 1) {
    const double s = report.roots[0].s;
    const double w = std::sqrt(p_abs * p_abs - s);
    const cplx half_deriv = cplx(0.0, 1.0) * data[1] / (2.0 * w);
    mode.coefficients.push_back({s, 0.5 * data[0] - half_deriv,
                                 0.5 * data[0] + half_deriv});
  } else {
    const double s1 = report.roots[0].s, s2 = report.roots[1].s;
    const double n1 = -s1, n2 = -s2;
    if (n1 == n2)
      throw numerical_error("solve_ivp_mode: coincident roots (singular system)");
    const double w1 = std::sqrt(p_abs * p_abs + n1);
    const double w2 = std::sqrt(p_abs * p_abs + n2);
    const double den = 2.0 * (n1 - n2);
    const cplx i1(0.0, 1.0);
    const cplx f0 = data[0], f1 = data[1], f2 = data[2], f3 = data[3];
    const cplx c1p =
        (-w2 * w2 * f0 + i1 * (w2 * w2 / w1) * f1 - f2 + i1 / w1 * f3) / den;
    const cplx c1m =
        (-w2 * w2 * f0 - i1 * (w2 * w2 / w1) * f1 - f2 - i1 / w1 * f3) / den;
    const cplx c2p =
        (w1 * w1 * f0 - i1 * (w1 * w1 / w2) * f1 + f2 - i1 / w2 * f3) / den;
    const cplx c2m =
        (w1 * w1 * f0 + i1 * (w1 * w1 / w2) * f1 + f2 + i1 / w2 * f3) / den;
    mode.coefficients.push_back({s1, c1p, c1m});
    mode.coefficients.push_back({s2, c2p, c2m});
  }

  synthesize(mode);
  return mode;
}

ModeSolution runaway_mode(double p_abs, double s_positive, const TimeGrid& tg) {
  if (!(s_positive > 0.0))
    throw std::invalid_argument("runaway_mode: requires a positive root");
  ModeSolution mode;
  mode.p_abs = p_abs;
  mode.grid = tg;
  mode.values.resize(tg.n);

  const double disc = s_positive - p_abs * p_abs;
  if (disc > 0.0) {
    const double rate = std::sqrt(disc);
    if (rate * tg.tmax() > 300.0)
      throw std::invalid_argument("runaway_mode: grid too long, exp overflow");
    for (std::size_t i = 0; i < tg.n; ++i)
      mode.values[i] = std::exp(rate * tg.time(i));
    mode.flag = ModeFlag::growing;
    // log-linear fit of the synthesized series
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < tg.n; ++i) {
      const double x = tg.time(i), y = std::log(std::abs(mode.values[i]));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double nn = static_cast<double>(tg.n);
    mode.growth_rate = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
  } else if (disc == 0.0) {
    for (std::size_t i = 0; i < tg.n; ++i)
      mode.values[i] = 1.0 + tg.time(i);  // constant + linear marginal pair
    mode.flag = ModeFlag::marginal;
  } else {
    const double w = std::sqrt(-disc);
    for (std::size_t i = 0; i < tg.n; ++i)
      mode.values[i] = 2.0 * std::cos(w * tg.time(i));
    mode.flag = ModeFlag::oscillatory;
  }
  return mode;
}

ModeSolution evolve_sourced_mode(double p_abs, const ModeGreen& green,
                                 const std::vector<double>& T_of_t,
                                 double b_mode) {
  const std::size_t n = green.grid.n;
  if (T_of_t.size() != n)
    throw std::invalid_argument("evolve_sourced_mode: grid mismatch");
  std::size_t j0 = n, j1 = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (T_of_t[j] != 0.0) {
      j0 = std::min(j0, j);
      j1 = std::max(j1, j);
    }
  ModeSolution mode;
  mode.p_abs = p_abs;
  mode.grid = green.grid;
  mode.values.assign(n, cplx(0.0, 0.0));
  if (j0 == n || b_mode == 0.0) return mode;  // zero source
  if (j1 + 1 == n)
    throw std::invalid_argument(
        "evolve_sourced_mode: source must end before the grid does");

  const auto& ops = kernels::ops();
  const double dt = green.grid.dt;
  for (std::size_t k = j0 + 1; k < n; ++k) {
    const std::size_t hi = std::min(k, j1);
    const std::size_t len = hi - j0 + 1;
    // sum_{j=j0..hi} T[j] G[k-j]
    const double acc =
        ops.dot_rev(len, T_of_t.data() + j0, green.values.data() + (k - hi));
    mode.values[k] = dt * b_mode * acc;
  }
  return mode;
}

SourcedRun evolve_sourced(const ModelParams& p, const RootReport& report,
                          const SourceSpec& source, const PGrid& pg,
                          const TimeGrid& tg, int threads,
                          const ModeGreenOptions& gopt) {
  SourcedRun run;
  run.grid = tg;
  run.pgrid = pg;
  run.t_source_lo = source.t_center - source.t_width;
  run.t_source_hi = source.t_center + source.t_width;
  if (run.t_source_lo < 0.0)
    throw std::invalid_argument("evolve_sourced: source starts before t=0");
  if (run.t_source_hi >= tg.tmax())
    throw std::invalid_argument("evolve_sourced: source not inside the grid");

  run.T_of_t.resize(tg.n);
  for (std::size_t i = 0; i < tg.n; ++i)
    run.T_of_t[i] = time_bump(tg.time(i), source.t_center, source.t_width);
  run.b_modes = radial_to_mode(source.spatial, pg);

  run.modes.resize(pg.n);
  parallel_for(pg.n, threads, [&](std::size_t j) {
    const ModeGreen g = mode_green(p, pg.p(j), tg, report, gopt);
    run.modes[j] = evolve_sourced_mode(pg.p(j), g, run.T_of_t, run.b_modes[j]);
  });
  return run;
}

HomogeneousRun evolve_ivp(const ModelParams& p, const RootReport& report,
                          const std::vector<RadialField>& data,
                          const PGrid& pg, const TimeGrid& tg, int threads) {
  p.validate();
  const std::size_t ns = report.roots.size();
  if (data.size() != 2 * ns)
    throw std::invalid_argument(
        "evolve_ivp: need exactly 2|S| initial profiles (refusing to "
        "zero-fill)");
  HomogeneousRun run;
  run.grid = tg;
  run.pgrid = pg;
  for (const RadialField& f : data)
    run.data_modes.push_back(radial_to_mode(f, pg));

  run.modes.resize(pg.n);
  parallel_for(pg.n, threads, [&](std::size_t j) {
    std::vector<cplx> d(2 * ns);
    for (std::size_t k = 0; k < 2 * ns; ++k) d[k] = run.data_modes[k][j];
    run.modes[j] = solve_ivp_mode(pg.p(j), report, d, tg);
  });
  return run;
}

double residual_check(const SourcedRun& run, const ModelParams& p) {
  const std::size_t n = run.grid.n;
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("residual_check: grid length must be 2^k");
  const double dt = run.grid.dt;

  // Exponential damping exp(-eta t) turns the transforms into evaluations at
  // p0 - i eta, where S(-(p0-i eta)^2 + p^2) * psi^ = f^ holds exactly; the
  // undamped pole components would otherwise leak across all bins.
  const double eta = 10.0 / run.grid.tmax();
  std::vector<double> damp(n);
  for (std::size_t i = 0; i < n; ++i)
    damp[i] = std::exp(-eta * run.grid.time(i));

  std::vector<cplx> tw(n);
  for (std::size_t i = 0; i < n; ++i) tw[i] = damp[i] * run.T_of_t[i];
  fft_forward(tw);

  double worst = 0.0;
  std::vector<cplx> buf(n);
  for (std::size_t jm = 0; jm < run.modes.size(); ++jm) {
    const double pa = run.pgrid.p(jm);
    const double b = run.b_modes[jm];
    if (b == 0.0) continue;

    for (std::size_t i = 0; i < n; ++i)
      buf[i] = damp[i] * run.modes[jm].values[i];
    fft_forward(buf);

    double y_max = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      y_max = std::max(y_max, std::abs(tw[k] * b));
    if (y_max == 0.0) continue;

    const double dp0 = 2.0 * M_PI / (double(n) * dt);
    double num = 0.0, den = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
      double p0 = dp0 * double(k);
      if (k > n / 2) p0 -= 2.0 * M_PI / dt;
      // resolved band: keep the transform's own discretization error,
      // ~((|p0|+w) dt)^2 / 12, well under the comparison tolerance
      if (std::fabs(p0) > std::min(0.35 / dt, 0.5 * M_PI / dt)) continue;
      const cplx y = tw[k] * b;
      if (std::abs(y) < 1e-3 * y_max) continue;

      const cplx zq = cplx(p0, -eta);
      const cplx S = s_eval(-zq * zq + pa * pa, p);
      const cplx resid = S * buf[k] * dt - y * dt;
      num += std::norm(resid);
      den += std::norm(y * dt);
    }
    if (den > 0.0) worst = std::max(worst, std::sqrt(num / den));
  }
  return worst;
}

RadialField reconstruct_slice(const std::vector<ModeSolution>& modes,
                              const PGrid& pg, std::size_t time_index,
                              double dr, std::size_t nr) {
  std::vector<double> vals(pg.n);
  for (std::size_t j = 0; j < pg.n; ++j)
    vals[j] = modes[j].values[time_index].real();
  return mode_to_radial(vals, pg, dr, nr);
}

MaxSeries max_abs_series(const std::vector<ModeSolution>& modes,
                         const PGrid& pg, double dr, std::size_t nr,
                         std::size_t stride, int threads) {
  if (modes.empty()) return {};
  const TimeGrid tg = modes[0].grid;
  const std::size_t count = (tg.n + stride - 1) / stride;
  MaxSeries out;
  out.t.resize(count);
  out.value.resize(count);
  parallel_for(count, threads, [&](std::size_t k) {
    const std::size_t it = k * stride;
    const RadialField slice = reconstruct_slice(modes, pg, it, dr, nr);
    double m = 0.0;
    for (double v : slice.values) m = std::max(m, std::fabs(v));
    out.t[k] = tg.time(it);
    out.value[k] = m;
  });
  return out;
}

}  // namespace linstab
