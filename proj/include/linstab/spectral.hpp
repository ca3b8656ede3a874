#pragma once

#include <complex>

#include "linstab/params.hpp"

namespace linstab {

using cplx = std::complex<double>;

/// Two-particle spectral density rho(M^2) = (1/16 pi^2) sqrt(1 - 4m^2/M^2).
double spectral_density(double M2, double m);

/// Side of the branch cut on (-inf, -4m^2).
enum class CutSide { above, below };

/// Boundary value F_a(-M^2 +- i0) on the cut.
struct CutBoundaryValue {
  double real_part;  // continuous across the cut
  double imag_part;  // +pi*sqrt(1-4m^2/M^2) above, opposite below
  CutSide side;
};

/// F_a(z) from the closed form, continued off the principal domain so that
/// it is analytic on C \ (-inf, -4m^2] and sgn(Im F) = sgn(Im z).
/// Requires m > 0, a > -4m^2; throws std::domain_error on the open cut.
cplx fa_closed(cplx z, double m, double a);

/// F_a on the real interval (-4m^2, inf); exactly real.
double fa_real(double s, double m, double a);

/// dF_a/ds on (-4m^2, inf), from the analytic derivative of the closed form.
double fa_prime_real(double s, double m);

/// Independent evaluation of F_a by adaptive quadrature of the spectral
/// integral, absolute error <= tol. Accepts m >= 0.
cplx fa_integral(cplx z, double m, double a, double tol);

/// Boundary values on the cut, M2 >= 4m^2 (equality gives the threshold
/// limit). Throws std::domain_error below threshold.
CutBoundaryValue fa_cut_boundary(double M2, double m, double a, CutSide side);

/// Massless limit: log(x/a) for x > 0, log(|x|/a) + i pi for x < 0 (the
/// continuation from the upper half-plane). Requires a > 0, x != 0.
cplx fa_massless(double x, double a);

namespace detail {
// G(w) with principal branches; F_a(z) = G(z) - G(a). Exposed for tests.
cplx g_kernel(cplx w, double m);
double g_kernel_real(double s, double m);
}  // namespace detail

}  // namespace linstab
