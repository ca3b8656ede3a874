#pragma once

#include <vector>

#include "linstab/dispersion.hpp"
#include "linstab/params.hpp"

namespace linstab {

/// Spatial Fourier kernel of the retarded Klein-Gordon propagator:
/// -sin(w0 t)/w0 for t > 0 (w0 = sqrt(p^2 + M2)), 0 for t <= 0,
/// -t in the removable w0 = 0 limit.
double retarded_kg_mode(double t, double p_abs, double M2);

/// Branch-cut spectral density
///   kappa * sqrt(1 - 4m^2/M^2) * (lambda2 M^2 - lambda1) / |S(-M^2)|^2
/// evaluated on the cut edge. Throws numerical_error when |S(-M^2)| falls
/// below floor_rel times its natural scale.
double cut_density_value(const ModelParams& p, double M2,
                         double floor_rel = 1e-9);

struct CutDensity {
  std::vector<double> m2_nodes;
  std::vector<double> weights;  // density value at each node
  double m2_max = 0.0;
  // |omitted tail at time t| <~ tail_coeff / t (integration by parts)
  double tail_coeff = 0.0;
  // absolute bound on the omitted tail integral, +inf if the fitted decay
  // is too slow to certify one
  double tail_abs = 0.0;
};

CutDensity cut_density(const ModelParams& p, double M2max, int n_nodes);

struct ModeGreenOptions {
  double m2_max = 0.0;    // 0: auto-extend until the tail certifies
  int n_uniform = 600;    // uniform-core Filon panels
  bool enforce_dt = true; // require dt * (max pole frequency) <= 0.1
};

/// One spatial Fourier mode of the retarded fundamental solution, split into
/// the pole sum and the branch-cut integral. values = pole_part + cut_part,
/// and values[0] = 0 exactly (retardedness).
struct ModeGreen {
  double p_abs = 0.0;
  TimeGrid grid;
  std::vector<double> pole_part;
  std::vector<double> cut_part;
  std::vector<double> values;
  double m2_max_used = 0.0;
  double tail_coeff = 0.0;  // |omitted tail at time t| <~ tail_coeff / t
};

/// Requires report.classification AllNegative or Empty; refuses
/// ContainsPositive (regime_error) and Degenerate (numerical_error).
ModeGreen mode_green(const ModelParams& p, double p_abs, const TimeGrid& tg,
                     const RootReport& report,
                     const ModeGreenOptions& opt = {});

}  // namespace linstab
