#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "linstab/params.hpp"

namespace linstab {

/// Filon quadrature coefficients for theta = t*h.
struct FilonCoeffs {
  double alpha, beta, gamma;
};

FilonCoeffs filon_coeffs(double theta);

/// cos/sin of w*dt*i advanced by rotation, reseeded from libm periodically.
class RotState {
 public:
  RotState(double w, double dt);
  double c() const { return c_; }
  double s() const { return s_; }
  void advance();

 private:
  void reseed();
  double w_, dt_;
  double rc_, rs_;
  double c_, s_;
  std::size_t i_ = 0;
  std::size_t since_ = 0;
};

/// Piecewise-quadratic (Filon-Simpson) integrator against sin(tx)/e^{itx}
/// over a fixed panelization: an optional geometrically graded prefix (for
/// square-root kinks at the lower edge), a uniform core, and an optional
/// geometric tail. Panel values are filled once; integrals against any t
/// reuse them.
class FilonMesh {
 public:
  struct Build {
    double lo = 0.0;
    double core_hi = 1.0;   // end of the uniform core
    double total_hi = 1.0;  // end of the geometric tail (== core_hi: no tail)
    int n_uniform = 256;    // uniform panels
    int n_graded = 0;       // graded prefix panels (0: none)
    double graded_span = 0.0;     // width covered by the graded prefix
    double graded_dynamic = 1e8;  // width ratio largest/smallest graded panel
    double geo_ratio = 1.06;      // tail panel growth factor
  };

  static FilonMesh build(const Build& b);

  const std::vector<double>& nodes() const { return x_; }
  std::vector<double>& values() { return f_; }
  const std::vector<double>& values() const { return f_; }

  void fill(const std::function<double(double)>& f);

  /// integral of f(x) e^{i x t} dx over the mesh
  std::complex<double> integrate_exp(double t) const;
  double integrate_sin(double t) const { return integrate_exp(t).imag(); }

  /// out[i] += coeff * integral of f(x) sin(x t_i) dx, t_i = i*dt
  void accumulate_sin_series(double dt, std::size_t n, double coeff,
                             double* out) const;

  std::size_t panel_count() const { return h_.size(); }

 private:
  // node j of panel p is x_[2p + j], j in {0,1,2}
  std::vector<double> x_;
  std::vector<double> f_;
  std::vector<double> h_;          // per-panel half-width
  std::size_t uniform_begin_ = 0;  // panel index range of the uniform core
  std::size_t uniform_end_ = 0;
  double uniform_h_ = 0.0;
};

}  // namespace linstab
