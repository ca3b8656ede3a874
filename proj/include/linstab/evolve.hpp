#pragma once

#include <complex>
#include <vector>

#include "linstab/dispersion.hpp"
#include "linstab/greens.hpp"
#include "linstab/params.hpp"
#include "linstab/radial.hpp"

namespace linstab {

enum class ModeFlag { oscillatory, growing, marginal };

/// One spatial Fourier mode of the linearized field.
struct ModeSolution {
  double p_abs = 0.0;
  TimeGrid grid;
  std::vector<cplx> values;

  struct Coefficient {
    double s;  // root the branch belongs to
    cplx c_plus, c_minus;
  };
  std::vector<Coefficient> coefficients;  // empty for sourced modes

  ModeFlag flag = ModeFlag::oscillatory;
  double growth_rate = 0.0;  // fitted rate for growing modes
};

/// Homogeneous mode from initial data (phi^0..phi^{2|S|-1} at this p).
/// Requires an AllNegative report with one or two distinct roots and exactly
/// 2|S| data entries (no silent zero-fill).
ModeSolution solve_ivp_mode(double p_abs, const RootReport& report,
                            const std::vector<cplx>& data, const TimeGrid& tg);

/// Growing branch exp(+t sqrt(s - p^2)) for a positive root s, with the rate
/// fitted from the synthesized series; oscillatory/marginal fallbacks when
/// p^2 >= s.
ModeSolution runaway_mode(double p_abs, double s_positive, const TimeGrid& tg);

/// Retarded response: psi~(t,p) = int G(t-t') T(t') dt' * B~(p), trapezoidal
/// on the shared grid. T must vanish at the final grid sample.
ModeSolution evolve_sourced_mode(double p_abs, const ModeGreen& green,
                                 const std::vector<double>& T_of_t,
                                 double b_mode);

/// Separable source f(t, r) = T(t) B(r); T is the unit-max smooth bump
/// supported on [t_center - t_width, t_center + t_width].
struct SourceSpec {
  double t_center = 5.0;
  double t_width = 2.0;
  RadialField spatial;
};

struct SourcedRun {
  TimeGrid grid;
  PGrid pgrid;
  std::vector<double> T_of_t;
  std::vector<double> b_modes;
  std::vector<ModeSolution> modes;
  double t_source_lo = 0.0, t_source_hi = 0.0;
  double residual_norm = 0.0;  // filled by residual_check
};

struct HomogeneousRun {
  TimeGrid grid;
  PGrid pgrid;
  std::vector<std::vector<double>> data_modes;  // [j][p]
  std::vector<ModeSolution> modes;
};

SourcedRun evolve_sourced(const ModelParams& p, const RootReport& report,
                          const SourceSpec& source, const PGrid& pg,
                          const TimeGrid& tg, int threads = 1,
                          const ModeGreenOptions& gopt = {});

HomogeneousRun evolve_ivp(const ModelParams& p, const RootReport& report,
                          const std::vector<RadialField>& data,
                          const PGrid& pg, const TimeGrid& tg,
                          int threads = 1);

/// Max over modes of the relative L2 deviation between windowed-FFT(psi)*S
/// and windowed-FFT(f) on resolved bins (poles excised, Hann window).
/// Returns 0 for a vanishing source.
double residual_check(const SourcedRun& run, const ModelParams& p);

/// Real-part field slice psi(t_i, r) reconstructed on a radial grid.
RadialField reconstruct_slice(const std::vector<ModeSolution>& modes,
                              const PGrid& pg, std::size_t time_index,
                              double dr, std::size_t nr);

/// max_r |psi(t, r)| sampled every `stride` time samples.
struct MaxSeries {
  std::vector<double> t;
  std::vector<double> value;
};
MaxSeries max_abs_series(const std::vector<ModeSolution>& modes,
                         const PGrid& pg, double dr, std::size_t nr,
                         std::size_t stride, int threads = 1);

/// Unit-max smooth bump in time supported on [c-w, c+w].
double time_bump(double t, double center, double width);

}  // namespace linstab
