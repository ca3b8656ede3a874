#pragma once

#include <vector>

#include "linstab/params.hpp"
#include "linstab/spectral.hpp"

namespace linstab {

enum class RootKind { interior, special_point };

struct Root {
  double s = 0.0;        // root location (mass^2 units)
  double s_prime = 0.0;  // S'(s); for special_point the boundary real part
  RootKind kind = RootKind::interior;
};

enum class Classification { Empty, AllNegative, ContainsPositive, Degenerate };
enum class CorollaryCase { a, b, c, none };

struct RootReport {
  std::vector<Root> roots;
  Classification classification = Classification::Empty;
  bool condition_holds = false;  // g2*lambda1 - lambda2*g1 >= 0
  CorollaryCase corollary_case = CorollaryCase::none;
  double searched_min = 0.0;  // interval actually scanned
  double searched_max = 0.0;
};

/// S(z) = -(lambda1 + lambda2 z) (lambda hbar / 16 pi^2) F_a(z) - (g1 + g2 z).
cplx s_eval(cplx z, const ModelParams& p);

/// S on the real interval (-4m^2, inf) (and at the special point -l1/l2).
double s_eval_real(double s, const ModelParams& p);

/// dS/ds on (-4m^2, inf) via the analytic derivative of F_a.
double s_prime(double s, const ModelParams& p);

/// g2*lambda1 - lambda2*g1 >= 0.
bool check_condition(const ModelParams& p);

struct RootFindOptions {
  double root_tol = 1e-12;
  double s_max = 0.0;    // 0 = automatic
  int grid_points = 4096;
};

RootReport find_roots(const ModelParams& p, const RootFindOptions& opt = {});

/// find_roots plus the sufficient-condition cases of the stability corollary.
RootReport classify(const ModelParams& p, const RootFindOptions& opt = {});

}  // namespace linstab
