#include <cmath>
#include <vector>

#include "doctest.h"
#include "linstab/quadrature.hpp"
#include "linstab/radial.hpp"

using namespace linstab;

namespace {

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

double round_trip_error(double r0, double dr) {
  const RadialField f = bump_profile(r0, dr, 1.25 * r0);
  PGrid pg;
  pg.dp = (M_PI / 4.0) / f.rmax();
  pg.n = static_cast<std::size_t>((M_PI / 4.0 / dr) / pg.dp) + 1;
  const auto modes = radial_to_mode(f, pg);
  const RadialField back = mode_to_radial(modes, pg, dr, f.values.size());
  double err = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    err = std::max(err, std::fabs(back.values[i] - f.values[i]));
  return err / max_abs(f.values);
}

}  // namespace

TEST_CASE("zero field transforms to zero") {
  RadialField f;
  f.dr = 0.05;
  f.values.assign(100, 0.0);
  f.support_radius = 1.0;
  PGrid pg{0.1, 50};
  for (double v : radial_to_mode(f, pg)) CHECK(v == 0.0);
}

TEST_CASE("p=0 value is 4 pi int f r^2 dr") {
  const RadialField f = bump_profile(2.0, 2.0 / 64.0, 2.5);
  PGrid pg{0.1, 3};
  const auto modes = radial_to_mode(f, pg);
  const double want =
      4.0 * M_PI *
      adaptive_gk15(
          [&](double r) {
            const double x = r / 2.0;
            return x < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - x * x)) * r * r : 0.0;
          },
          0.0, 2.0, 1e-13);
  CHECK(modes[0] == doctest::Approx(want).epsilon(1e-9));
  // continuity at p -> 0
  CHECK(modes[1] == doctest::Approx(modes[0]).epsilon(2e-2));
}

TEST_CASE("forward transform matches direct quadrature") {
  const double r0 = 1.5, dr = r0 / 96.0;
  const RadialField f = bump_profile(r0, dr, 2.0);
  PGrid pg{0.5, 20};
  const auto modes = radial_to_mode(f, pg);
  for (std::size_t j : {1ul, 7ul, 19ul}) {
    const double p = pg.p(j);
    const double want =
        4.0 * M_PI / p *
        adaptive_gk15(
            [&](double r) {
              const double x = r / r0;
              return x < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - x * x)) * r *
                                   std::sin(p * r)
                             : 0.0;
            },
            0.0, r0, 1e-13);
    CHECK(modes[j] == doctest::Approx(want).epsilon(1e-8));
  }
}

TEST_CASE("bump round trip is accurate and refines at least second order") {
  // the inverse integrand carries f~(p)*p and the bump spectrum only decays
  // like exp(-sqrt(2 r0 p)); pmax = pi/(4 dr) must reach deep into that tail
  // before the 1e-6 target is attainable
  const double e1 = round_trip_error(2.0, 2.0 / 384.0);
  CHECK(e1 < 1e-6);
  const double e2 = round_trip_error(2.0, 2.0 / 768.0);
  CHECK(e2 < e1 / 4.0);
}

TEST_CASE("gaussian round trip reaches near machine accuracy") {
  const double sigma = 0.5, dr = sigma / 12.0;
  const RadialField f = gaussian_profile(sigma, dr, 9.0 * sigma);
  PGrid pg;
  pg.dp = (M_PI / 4.0) / f.rmax();
  pg.n = static_cast<std::size_t>((9.0 / sigma) / pg.dp) + 1;
  const auto modes = radial_to_mode(f, pg);
  const RadialField back = mode_to_radial(modes, pg, dr, f.values.size());
  double err = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    err = std::max(err, std::fabs(back.values[i] - f.values[i]));
  CHECK(err < 1e-10);
}

TEST_CASE("resolution preconditions") {
  const RadialField f = bump_profile(1.0, 0.25, 1.5);
  PGrid pg{0.5, 20};  // pmax*dr = 2.375 > pi/4
  CHECK_THROWS_AS(radial_to_mode(f, pg), std::invalid_argument);

  std::vector<double> modes(40, 1.0);
  PGrid pg2{0.5, 40};
  CHECK_THROWS_AS(mode_to_radial(modes, pg2, 0.5, 100), std::invalid_argument);
}

TEST_CASE("compact support invariant is enforced") {
  RadialField f;
  f.dr = 0.1;
  f.values.assign(30, 0.0);
  f.values[25] = 1.0;
  f.support_radius = 1.0;  // sample at r=2.5 violates it
  CHECK_THROWS_AS(f.validate(), std::invalid_argument);
}
