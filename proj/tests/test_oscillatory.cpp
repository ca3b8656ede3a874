#include <cmath>
#include <vector>

#include "doctest.h"
#include "linstab/oscillatory.hpp"
#include "linstab/quadrature.hpp"

using namespace linstab;

TEST_CASE("filon coefficients: series/direct seam and Simpson limit") {
  const auto z = filon_coeffs(0.0);
  CHECK(z.alpha == 0.0);
  CHECK(z.beta == doctest::Approx(2.0 / 3.0));
  CHECK(z.gamma == doctest::Approx(4.0 / 3.0));

  for (double th : {0.149, 0.151}) {
    const auto lo = filon_coeffs(th - 1e-9);
    const auto hi = filon_coeffs(th + 1e-9);
    CHECK(lo.alpha == doctest::Approx(hi.alpha).epsilon(1e-8));
    CHECK(lo.beta == doctest::Approx(hi.beta).epsilon(1e-8));
    CHECK(lo.gamma == doctest::Approx(hi.gamma).epsilon(1e-8));
  }
}

TEST_CASE("filon is exact for quadratics at arbitrary theta") {
  // single panel [1, 1+2h], f = 2 - x + 0.5 x^2, integrated against sin(tx)
  const double h = 0.37, t = 9.3;
  FilonMesh::Build b;
  b.lo = 1.0;
  b.core_hi = 1.0 + 2.0 * h;
  b.total_hi = b.core_hi;
  b.n_uniform = 1;
  auto mesh = FilonMesh::build(b);
  auto f = [](double x) { return 2.0 - x + 0.5 * x * x; };
  mesh.fill(f);
  const double got = mesh.integrate_sin(t);
  const double want = adaptive_gk15(
      [&](double x) { return f(x) * std::sin(t * x); }, b.lo, b.core_hi, 1e-13);
  CHECK(got == doctest::Approx(want).epsilon(1e-11));
}

TEST_CASE("composite filon vs adaptive quadrature, smooth integrand") {
  FilonMesh::Build b;
  b.lo = 0.3;
  b.core_hi = 20.0;
  b.total_hi = 45.0;
  b.n_uniform = 600;
  b.n_graded = 40;
  b.graded_span = 0.5;
  auto mesh = FilonMesh::build(b);
  auto f = [](double x) { return std::exp(-0.3 * x) * (2.0 + std::cos(x)); };
  mesh.fill(f);

  for (double t : {0.0, 0.7, 6.0, 31.0}) {
    const double want = adaptive_gk15(
        [&](double x) { return f(x) * std::sin(t * x); }, b.lo, b.total_hi,
        1e-12, 60000);
    CHECK(mesh.integrate_sin(t) == doctest::Approx(want).epsilon(2e-5));
    const double wantc = adaptive_gk15(
        [&](double x) { return f(x) * std::cos(t * x); }, b.lo, b.total_hi,
        1e-12, 60000);
    CHECK(mesh.integrate_exp(t).real() ==
          doctest::Approx(wantc).epsilon(2e-5));
  }
}

TEST_CASE("filon handles sqrt kinks with a graded prefix") {
  FilonMesh::Build b;
  b.lo = 2.0;
  b.core_hi = 12.0;
  b.total_hi = 12.0;
  b.n_uniform = 400;
  b.n_graded = 80;
  b.graded_span = 1.0;
  auto mesh = FilonMesh::build(b);
  auto f = [](double x) { return std::sqrt(x - 2.0) * std::exp(-0.2 * x); };
  mesh.fill(f);
  const double t = 13.7;
  const double want = adaptive_gk15(
      [&](double x) { return f(x) * std::sin(t * x); }, 2.0, 12.0, 1e-12,
      60000);
  CHECK(mesh.integrate_sin(t) == doctest::Approx(want).epsilon(1e-6));
}

TEST_CASE("accumulate_sin_series matches per-t integrate_sin") {
  FilonMesh::Build b;
  b.lo = 1.4;
  b.core_hi = 9.0;
  b.total_hi = 25.0;
  b.n_uniform = 120;
  b.n_graded = 12;
  b.graded_span = 0.25;
  auto mesh = FilonMesh::build(b);
  mesh.fill([](double x) { return std::exp(-0.1 * x * x) + 0.1 * x; });

  const double dt = 0.21;
  const std::size_t n = 500;
  std::vector<double> out(n, 1.0);
  mesh.accumulate_sin_series(dt, n, 2.5, out.data());
  for (std::size_t i = 0; i < n; i += 37) {
    const double want = 1.0 + 2.5 * mesh.integrate_sin(dt * double(i));
    CHECK(out[i] == doctest::Approx(want).epsilon(1e-9));
  }
  CHECK(out[0] == doctest::Approx(1.0));  // sin moments vanish at t = 0
}

TEST_CASE("rotstate tracks libm") {
  RotState r(3.7, 0.01);
  double worst = 0.0;
  for (int i = 0; i < 5000; ++i) {
    worst = std::max(worst, std::fabs(r.c() - std::cos(3.7 * 0.01 * i)));
    worst = std::max(worst, std::fabs(r.s() - std::sin(3.7 * 0.01 * i)));
    r.advance();
  }
  CHECK(worst < 1e-12);
}
