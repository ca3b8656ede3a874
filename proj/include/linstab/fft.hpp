#pragma once

#include <complex>
#include <vector>

namespace linstab {

/// In-place radix-2 complex FFT, forward kernel e^{-2 pi i k n / N}.
/// Length must be a power of two.
void fft_forward(std::vector<std::complex<double>>& data);

/// Inverse transform (includes the 1/N factor).
void fft_inverse(std::vector<std::complex<double>>& data);

std::size_t next_pow2(std::size_t n);

}  // namespace linstab
