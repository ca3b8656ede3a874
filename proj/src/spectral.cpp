#include "linstab/spectral.hpp"

#include <cmath>

#include "linstab/quadrature.hpp"

namespace linstab {

namespace detail {

// Small-argument series of G in u2 = w/(4m^2); the direct formula loses
// precision once log(sq+u) ~ u underflows the log's resolution.
static cplx g_series(cplx u2) {
  return 2.0 + u2 * (2.0 / 3.0) - u2 * u2 * (4.0 / 15.0) +
         u2 * u2 * u2 * (16.0 / 105.0) - u2 * u2 * u2 * u2 * (32.0 / 315.0);
}

cplx g_kernel(cplx w, double m) {
  const double fm2 = 4.0 * m * m;
  const cplx u2 = w / fm2;
  if (std::abs(u2) < 1e-4) return g_series(u2);
  const cplx u = std::sqrt(w) / (2.0 * m);
  const cplx sq = std::sqrt(1.0 + u * u);
  return 2.0 * (sq / u) * std::log(sq + u);
}

double g_kernel_real(double s, double m) {
  const double fm2 = 4.0 * m * m;
  if (s <= -fm2) {
    if (s == -fm2) return 0.0;
    throw std::domain_error("g_kernel_real: argument on the cut");
  }
  if (std::fabs(s) < 1e-4 * fm2) {
    const double u2 = s / fm2;
    return 2.0 + u2 * (2.0 / 3.0) - u2 * u2 * (4.0 / 15.0) +
           u2 * u2 * u2 * (16.0 / 105.0);
  }
  if (s > 0.0) {
    const double u = std::sqrt(s) / (2.0 * m);
    const double sq = std::sqrt(1.0 + u * u);
    return 2.0 * (sq / u) * std::asinh(u);
  }
  const double v = std::sqrt(-s) / (2.0 * m);  // v in (0,1)
  return 2.0 * std::asin(v) * std::sqrt(1.0 - v * v) / v;
}

}  // namespace detail

double spectral_density(double M2, double m) {
  const double fm2 = 4.0 * m * m;
  if (M2 < fm2) throw std::domain_error("spectral_density: M2 < 4m^2");
  return std::sqrt(1.0 - fm2 / M2) / (16.0 * M_PI * M_PI);
}

cplx fa_closed(cplx z, double m, double a) {
  if (!(m > 0.0)) throw std::domain_error("fa_closed: requires m > 0");
  const double fm2 = 4.0 * m * m;
  if (!(a > -fm2)) throw std::domain_error("fa_closed: requires a > -4m^2");
  if (z.imag() == 0.0) {
    if (z.real() < -fm2)
      throw std::domain_error("fa_closed: z on the branch cut");
    return cplx(fa_real(z.real(), m, a), 0.0);
  }
  return detail::g_kernel(z, m) - detail::g_kernel_real(a, m);
}

double fa_real(double s, double m, double a) {
  return detail::g_kernel_real(s, m) - detail::g_kernel_real(a, m);
}

double fa_prime_real(double s, double m) {
  const double fm2 = 4.0 * m * m;
  if (!(s > -fm2)) throw std::domain_error("fa_prime_real: s <= -4m^2");
  if (std::fabs(s) < 1e-4 * fm2) {
    const double u2 = s / fm2;
    return (2.0 / 3.0 - (8.0 / 15.0) * u2 + (16.0 / 35.0) * u2 * u2) / fm2;
  }
  if (s > 0.0) {
    const double u = std::sqrt(s) / (2.0 * m);
    const double sq = std::sqrt(1.0 + u * u);
    return 1.0 / s - std::asinh(u) / (fm2 * sq * u * u * u);
  }
  const double v = std::sqrt(-s) / (2.0 * m);
  const double sq = std::sqrt(1.0 - v * v);
  return 1.0 / s + std::asin(v) / (fm2 * sq * v * v * v);
}

cplx fa_integral(cplx z, double m, double a, double tol) {
  const double fm2 = 4.0 * m * m;
  if (!(a > -fm2)) throw std::domain_error("fa_integral: requires a > -4m^2");
  if (!(tol > 0.0)) throw std::domain_error("fa_integral: tol must be > 0");
  if (z.imag() == 0.0 && z.real() < -fm2)
    throw std::domain_error("fa_integral: z on the branch cut");

  const cplx A(fm2 + a, 0.0);
  const cplx Z = fm2 + z;
  const double za = std::abs(z - cplx(a, 0.0));
  const double scale = fm2 + std::abs(a) + std::abs(z);

  // Cutoff so that the neglected tail correction is below tol/10; the
  // leading (z-a)/U^2 tail is added back analytically.
  double U = std::sqrt(100.0 * (scale + 1.0));
  const double c2 = za * (2.0 * m * m + std::abs(A) + std::abs(Z));
  if (c2 > 0.0) U = std::max(U, std::pow(10.0 * c2 / tol, 0.25));

  // M^2 = 4m^2 + u^2 removes the threshold square-root kink.
  auto integrand = [&](double u) -> cplx {
    const double M2 = fm2 + u * u;
    const double w = 2.0 * u * u / std::sqrt(M2);
    return w * (1.0 / (u * u + A) - 1.0 / (u * u + Z));
  };
  cplx body = adaptive_gk15(integrand, 0.0, U, 0.8 * tol);
  return body + (z - cplx(a, 0.0)) / (U * U);
}

CutBoundaryValue fa_cut_boundary(double M2, double m, double a, CutSide side) {
  const double fm2 = 4.0 * m * m;
  if (M2 < fm2) throw std::domain_error("fa_cut_boundary: M2 < 4m^2");
  double rho, re;
  if (m > 0.0) {
    rho = std::sqrt(1.0 - fm2 / M2);
    const double M = std::sqrt(M2);
    re = 2.0 * rho * std::log((std::sqrt(M2 - fm2) + M) / (2.0 * m)) -
         detail::g_kernel_real(a, m);
  } else {
    if (!(a > 0.0) || M2 <= 0.0)
      throw std::domain_error("fa_cut_boundary: massless requires a,M2 > 0");
    rho = 1.0;
    re = std::log(M2 / a);
  }
  const double im = (side == CutSide::above ? M_PI : -M_PI) * rho;
  return {re, im, side};
}

cplx fa_massless(double x, double a) {
  if (!(a > 0.0)) throw std::domain_error("fa_massless: requires a > 0");
  if (x == 0.0) throw std::domain_error("fa_massless: x must be nonzero");
  if (x > 0.0) return cplx(std::log(x / a), 0.0);
  return cplx(std::log(-x / a), M_PI);
}

}  // namespace linstab
