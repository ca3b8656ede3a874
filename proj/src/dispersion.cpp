#include "linstab/dispersion.hpp"

#include <algorithm>
#include <cmath>

namespace linstab {

cplx s_eval(cplx z, const ModelParams& p) {
  const cplx lin = p.lambda1 + p.lambda2 * z;
  if (lin == cplx(0.0, 0.0)) return -(p.g1 + p.g2 * z);
  cplx F;
  if (p.m > 0.0) {
    F = fa_closed(z, p.m, p.a);
  } else {
    if (z.imag() == 0.0) {
      F = fa_massless(z.real(), p.a);
      if (z.real() < 0.0)
        throw std::domain_error("s_eval: massless S is real only on (0,inf)");
    } else {
      F = std::log(z / p.a);
    }
  }
  return -lin * p.kappa() * F - (p.g1 + p.g2 * z);
}

double s_eval_real(double s, const ModelParams& p) {
  const double lin = p.lambda1 + p.lambda2 * s;
  if (lin == 0.0) return -(p.g1 + p.g2 * s);
  double F;
  if (p.m > 0.0) {
    F = fa_real(s, p.m, p.a);
  } else {
    if (!(s > 0.0))
      throw std::domain_error("s_eval_real: massless domain is (0,inf)");
    F = std::log(s / p.a);
  }
  return -lin * p.kappa() * F - (p.g1 + p.g2 * s);
}

double s_prime(double s, const ModelParams& p) {
  double F, Fp;
  if (p.m > 0.0) {
    F = fa_real(s, p.m, p.a);
    Fp = fa_prime_real(s, p.m);
  } else {
    if (!(s > 0.0))
      throw std::domain_error("s_prime: massless domain is (0,inf)");
    F = std::log(s / p.a);
    Fp = 1.0 / s;
  }
  const double k = p.kappa();
  return -p.lambda2 * k * F - (p.lambda1 + p.lambda2 * s) * k * Fp - p.g2;
}

bool check_condition(const ModelParams& p) {
  return p.g2 * p.lambda1 - p.lambda2 * p.g1 >= 0.0;
}

namespace {

double prime_scale(double s, const ModelParams& p) {
  double F, Fp;
  if (p.m > 0.0) {
    F = fa_real(s, p.m, p.a);
    Fp = fa_prime_real(s, p.m);
  } else {
    F = std::log(s / p.a);
    Fp = 1.0 / s;
  }
  const double k = p.kappa();
  return k * (std::fabs(p.lambda2 * F) +
              std::fabs((p.lambda1 + p.lambda2 * s) * Fp)) +
         std::fabs(p.g2) + 1e-30;
}

double bisect_root(const ModelParams& p, double lo, double hi, double flo,
                   double tol_abs) {
  for (int it = 0; it < 200 && hi - lo > tol_abs; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = s_eval_real(mid, p);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

RootReport find_roots(const ModelParams& p, const RootFindOptions& opt) {
  p.validate();
  RootReport rep;
  rep.condition_holds = check_condition(p);

  const double fm2 = p.fourM2();
  double base = std::max({p.m * p.m, std::fabs(p.a), 1.0});
  if (p.g2 != 0.0) base = std::max(base, std::fabs(p.g1 / p.g2));
  if (p.lambda2 != 0.0) base = std::max(base, std::fabs(p.lambda1 / p.lambda2));
  const double s_max = opt.s_max > 0.0 ? opt.s_max : 1e4 * base;
  const double tol_abs = opt.root_tol * std::max(1.0, std::max(fm2, s_max * 1e-8));

  // Geometric grid in (s + 4m^2): dense toward the threshold, logarithmic
  // toward s_max where F grows only like log s.
  const double x_lo = fm2 > 0.0 ? fm2 * 1e-9 : s_max * 1e-12;
  const double x_hi = s_max + fm2;
  const int n = std::max(opt.grid_points, 16);
  rep.searched_min = x_lo - fm2;
  rep.searched_max = s_max;

  const double ratio = std::log(x_hi / x_lo) / static_cast<double>(n - 1);
  double prev_s = x_lo - fm2;
  double prev_f = s_eval_real(prev_s, p);
  bool degenerate = false;

  for (int i = 1; i < n; ++i) {
    const double x = x_lo * std::exp(ratio * static_cast<double>(i));
    const double s = x - fm2;
    const double f = s_eval_real(s, p);
    const bool crossing = (prev_f < 0.0) != (f < 0.0) || prev_f == 0.0;
    if (crossing) {
      const double r = prev_f == 0.0
                           ? prev_s
                           : bisect_root(p, prev_s, s, prev_f, tol_abs);
      const double sp = s_prime(r, p);
      if (std::fabs(sp) < 1e-6 * prime_scale(r, p)) degenerate = true;
      rep.roots.push_back({r, sp, RootKind::interior});
    }
    prev_s = s;
    prev_f = f;
  }

  if (rep.roots.size() > 2) degenerate = true;

  // Special point -lambda1/lambda2 on or beyond the cut threshold: a zero of
  // S there iff the affine part also vanishes, i.e. g1 + g2*(-l1/l2) = 0.
  if (p.lambda2 != 0.0) {
    const double sp_loc = -p.lambda1 / p.lambda2;
    if (sp_loc <= -fm2) {
      const double affine = p.g1 + p.g2 * sp_loc;
      const double g_scale = std::fabs(p.g1) + std::fabs(p.g2 * sp_loc) + 1.0;
      if (std::fabs(affine) <= opt.root_tol * g_scale) {
        double re_f;
        if (p.m > 0.0)
          re_f = fa_cut_boundary(-sp_loc, p.m, p.a, CutSide::above).real_part;
        else
          re_f = std::log(-sp_loc / p.a);
        const double sp_deriv = -p.lambda2 * p.kappa() * re_f - p.g2;
        rep.roots.push_back({sp_loc, sp_deriv, RootKind::special_point});
      }
    }
  }

  std::sort(rep.roots.begin(), rep.roots.end(),
            [](const Root& x, const Root& y) { return x.s < y.s; });

  if (degenerate) {
    rep.classification = Classification::Degenerate;
  } else if (rep.roots.empty()) {
    rep.classification = Classification::Empty;
  } else {
    bool all_negative = true;
    for (const Root& r : rep.roots)
      if (!(r.s < -tol_abs)) all_negative = false;
    rep.classification = all_negative ? Classification::AllNegative
                                      : Classification::ContainsPositive;
  }
  return rep;
}

RootReport classify(const ModelParams& p, const RootFindOptions& opt) {
  RootReport rep = find_roots(p, opt);
  rep.corollary_case = CorollaryCase::none;

  // The sufficient conditions live under the main theorem's hypotheses:
  // condition-param and -4m^2 < a < 0.
  if (!rep.condition_holds || !(p.a < 0.0) || !(p.a > -p.fourM2()))
    return rep;

  const double k = p.kappa();
  if (p.lambda2 == 0.0 && p.lambda1 != 0.0 && p.m > 0.0) {
    const double fa0 = fa_real(0.0, p.m, p.a);
    const double fam = fa_real(-p.fourM2(), p.m, p.a);
    if (p.g2 / p.lambda1 >= 0.0 && -p.g1 / p.lambda1 <= k * fa0 &&
        k * fam <= -p.g1 / p.lambda1 + p.fourM2() * p.g2 / p.lambda1) {
      rep.corollary_case = CorollaryCase::a;
      return rep;
    }
  }
  if (p.lambda2 != 0.0 && p.g2 != 0.0) {
    if (-p.lambda1 / p.lambda2 < -p.g1 / p.g2 && -p.g1 / p.g2 < p.a) {
      rep.corollary_case = CorollaryCase::b;
      return rep;
    }
  }
  if (p.lambda2 != 0.0 && p.lambda1 != 0.0 && p.g2 > 0.0 && p.m > 0.0) {
    const double sp_loc = -p.lambda1 / p.lambda2;
    const double fa0 = fa_real(0.0, p.m, p.a);
    if (-p.fourM2() < sp_loc && sp_loc < p.a && -p.g1 / p.lambda1 >= 0.0 &&
        -p.g1 / p.lambda1 <= k * fa0) {
      rep.corollary_case = CorollaryCase::c;
      return rep;
    }
  }
  return rep;
}

}  // namespace linstab
