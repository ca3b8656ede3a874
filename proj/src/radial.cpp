#include "linstab/radial.hpp"

#include <cmath>
#include <stdexcept>

#include "linstab/kernels.hpp"

namespace linstab {

void RadialField::validate() const {
  if (dr <= 0.0 || values.empty())
    throw std::invalid_argument("RadialField: empty grid");
  double vmax = 0.0;
  for (double v : values) {
    if (!std::isfinite(v))
      throw std::invalid_argument("RadialField: non-finite sample");
    vmax = std::max(vmax, std::fabs(v));
  }
  for (std::size_t i = 0; i < values.size(); ++i)
    if (r(i) > support_radius && std::fabs(values[i]) > 1e-12 * vmax)
      throw std::invalid_argument(
          "RadialField: support leaks past support_radius");
}

RadialField bump_profile(double r0, double dr, double rmax, double amplitude) {
  if (!(r0 > 0.0) || !(dr > 0.0) || !(rmax >= r0))
    throw std::invalid_argument("bump_profile: bad geometry");
  RadialField f;
  f.dr = dr;
  f.support_radius = r0;
  const std::size_t n = static_cast<std::size_t>(std::floor(rmax / dr)) + 1;
  f.values.resize(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = f.r(i) / r0;
    if (x < 1.0)
      f.values[i] = amplitude * std::exp(1.0 - 1.0 / (1.0 - x * x));
  }
  return f;
}

RadialField gaussian_profile(double sigma, double dr, double rmax,
                             double amplitude) {
  if (!(sigma > 0.0) || !(dr > 0.0))
    throw std::invalid_argument("gaussian_profile: bad geometry");
  RadialField f;
  f.dr = dr;
  const std::size_t n = static_cast<std::size_t>(std::floor(rmax / dr)) + 1;
  f.values.resize(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double g = std::exp(-0.5 * f.r(i) * f.r(i) / (sigma * sigma));
    f.values[i] = g < 1e-13 ? 0.0 : amplitude * g;
  }
  f.support_radius = std::min(rmax, sigma * std::sqrt(2.0 * std::log(1e13)));
  return f;
}

std::vector<double> radial_to_mode(const RadialField& f, const PGrid& pg) {
  f.validate();
  if (pg.pmax() * f.dr > M_PI / 4.0 + 1e-12)
    throw std::invalid_argument(
        "radial_to_mode: dr does not resolve pmax (p*dr > pi/4)");

  const std::size_t n = f.values.size();
  std::vector<double> g(n), g2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    g[i] = w * f.values[i] * f.r(i) * f.dr;
    g2[i] = g[i] * f.r(i);
  }

  const auto& ops = kernels::ops();
  std::vector<double> out(pg.n, 0.0);
  for (std::size_t j = 0; j < pg.n; ++j) {
    const double p = pg.p(j);
    if (p == 0.0) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += g2[i];
      out[j] = 4.0 * M_PI * s;
    } else {
      out[j] = 4.0 * M_PI / p * ops.sin_dot(n, f.dr, p, g.data());
    }
  }
  return out;
}

RadialField mode_to_radial(const std::vector<double>& modes, const PGrid& pg,
                           double dr, std::size_t nr) {
  if (modes.size() != pg.n)
    throw std::invalid_argument("mode_to_radial: size mismatch");
  if (nr == 0 || dr <= 0.0)
    throw std::invalid_argument("mode_to_radial: bad radial grid");
  const double rmax = dr * static_cast<double>(nr - 1);
  if (rmax * pg.dp > M_PI / 4.0 + 1e-12)
    throw std::invalid_argument(
        "mode_to_radial: dp does not resolve rmax (r*dp > pi/4)");

  const std::size_t np = pg.n;
  std::vector<double> h(np), h2(np);
  for (std::size_t j = 0; j < np; ++j) {
    const double w = (j == 0 || j + 1 == np) ? 0.5 : 1.0;
    h[j] = w * modes[j] * pg.p(j) * pg.dp;
    h2[j] = h[j] * pg.p(j);
  }

  const auto& ops = kernels::ops();
  RadialField f;
  f.dr = dr;
  f.support_radius = rmax;
  f.values.resize(nr, 0.0);
  const double norm = 1.0 / (2.0 * M_PI * M_PI);
  for (std::size_t i = 0; i < nr; ++i) {
    const double r = f.r(i);
    if (r == 0.0) {
      double s = 0.0;
      for (std::size_t j = 0; j < np; ++j) s += h2[j];
      f.values[i] = norm * s;
    } else {
      f.values[i] = norm / r * ops.sin_dot(np, pg.dp, r, h.data());
    }
  }
  return f;
}

}  // namespace linstab
