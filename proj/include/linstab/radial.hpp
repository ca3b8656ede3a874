#pragma once

#include <cstddef>
#include <vector>

#include "linstab/params.hpp"

namespace linstab {

/// Spherically symmetric profile sampled on r_i = i*dr.
struct RadialField {
  double dr = 0.0;
  std::vector<double> values;
  double support_radius = 0.0;

  double r(std::size_t i) const { return dr * static_cast<double>(i); }
  double rmax() const {
    return values.empty() ? 0.0 : dr * static_cast<double>(values.size() - 1);
  }
  // compact support: |values| beyond support_radius within 1e-12 of the max
  void validate() const;
};

/// Smooth compactly supported bump exp(1 - 1/(1-(r/r0)^2)), unit max.
RadialField bump_profile(double r0, double dr, double rmax,
                         double amplitude = 1.0);

/// Gaussian exp(-r^2/(2 sigma^2)) truncated where it falls below 1e-13.
RadialField gaussian_profile(double sigma, double dr, double rmax,
                             double amplitude = 1.0);

/// Uniform grid of radial wavenumbers p_j = j*dp.
struct PGrid {
  double dp = 0.0;
  std::size_t n = 0;
  double p(std::size_t j) const { return dp * static_cast<double>(j); }
  double pmax() const {
    return n == 0 ? 0.0 : dp * static_cast<double>(n - 1);
  }
};

/// 3D Fourier transform of a radial profile:
/// f~(p) = (4 pi / p) * int f(r) sin(p r) r dr, with the p = 0 limit
/// 4 pi int f r^2 dr. Throws when p*dr exceeds pi/4 (unresolved).
std::vector<double> radial_to_mode(const RadialField& f, const PGrid& pg);

/// Inverse transform psi(r) = (1/(2 pi^2 r)) int psi~(p) p sin(p r) dp
/// truncated at pg.pmax(). Throws when rmax*dp exceeds pi/4.
RadialField mode_to_radial(const std::vector<double>& modes, const PGrid& pg,
                           double dr, std::size_t nr);

}  // namespace linstab
