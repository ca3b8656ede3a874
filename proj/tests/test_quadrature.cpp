#include <cmath>
#include <complex>

#include "doctest.h"
#include "linstab/quadrature.hpp"

using linstab::adaptive_gk15;

TEST_CASE("adaptive quadrature matches known integrals") {
  auto f1 = [](double x) { return std::exp(-x * x); };
  const double erf_part = adaptive_gk15(f1, 0.0, 8.0, 1e-12);
  CHECK(erf_part == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-12));

  auto f2 = [](double x) { return 1.0 / (1.0 + x * x); };
  CHECK(adaptive_gk15(f2, 0.0, 1.0, 1e-12) ==
        doctest::Approx(M_PI / 4.0).epsilon(1e-12));
}

TEST_CASE("adaptive quadrature handles integrable endpoint behavior") {
  // sqrt singularity in the derivative at 0 after u-substitution style use
  auto f = [](double x) { return std::sqrt(x); };
  CHECK(adaptive_gk15(f, 0.0, 1.0, 1e-11) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("adaptive quadrature on complex integrands") {
  using cplx = std::complex<double>;
  auto f = [](double x) { return cplx(std::cos(3.0 * x), std::sin(3.0 * x)); };
  const cplx got = adaptive_gk15(f, 0.0, 2.0, 1e-12);
  CHECK(got.real() == doctest::Approx(std::sin(6.0) / 3.0).epsilon(1e-12));
  CHECK(got.imag() ==
        doctest::Approx((1.0 - std::cos(6.0)) / 3.0).epsilon(1e-12));
}

TEST_CASE("adaptive quadrature throws past the budget") {
  // Near-singular spike narrower than the budget allows at this tolerance.
  auto f = [](double x) { return 1.0 / (1e-14 + (x - 0.3) * (x - 0.3)); };
  CHECK_THROWS_AS(adaptive_gk15(f, 0.0, 1.0, 1e-14, 40),
                  linstab::numerical_error);
}
