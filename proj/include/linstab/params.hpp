#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace linstab {

/// Raised when an adaptive scheme fails to converge, a quadrature floor is
/// hit, or a degenerate (tangential) root is detected.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an operation is asked to act in a regime it does not support
/// (e.g. a retarded Green function for a configuration with a positive root).
struct regime_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Coupling/renormalization tuple defining one semiclassical theory.
struct ModelParams {
  double m = 1.0;        // mass of the quantum field, >= 0
  double hbar = 1.0;     // > 0
  double lambda = 1.0;   // interaction coupling, > 0
  double lambda1 = 1.0;  // source coupling (mass^2 units)
  double lambda2 = 0.0;  // source coupling (dimensionless)
  double g1 = 1.0;       // background coupling
  double g2 = 1.0;       // background coupling
  double a = -1.0;       // renormalization point, > -4 m^2

  // lambda*hbar/(16 pi^2), the prefactor of F_a in S.
  double kappa() const { return lambda * hbar / (16.0 * M_PI * M_PI); }

  double fourM2() const { return 4.0 * m * m; }

  // Throws std::invalid_argument on violated invariants.
  void validate() const;
};

inline void validate_or_throw(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

/// Uniform time grid t_i = i*dt, i in [0, n).
struct TimeGrid {
  double dt = 0.0;
  std::size_t n = 0;

  double time(std::size_t i) const { return dt * static_cast<double>(i); }
  double tmax() const { return n == 0 ? 0.0 : dt * static_cast<double>(n - 1); }
};

}  // namespace linstab
