#pragma once

// Spectral reference: the multiplier -|k|^alpha applied to periodic grid
// samples with an in-repo radix-2 FFT.

#include <complex>
#include <vector>

namespace fraclap {

struct GridField {
  std::vector<double> samples;  // u(j dx), j = 0..N-1
  double dx = 1.0;

  std::size_t size() const { return samples.size(); }
  double period() const { return dx * static_cast<double>(samples.size()); }
  /// N a power of two in [16, 65536], dx > 0, samples finite.
  void validate() const;
};

/// Samples of exp(-(x - c)^2/sigma^2) on x_j = x0 + j dx.
GridField sample_gaussian(std::size_t N, double dx, double sigma, double x0, double center = 0.0);

/// In-place radix-2 transform; inverse includes the 1/N.
void fft(std::vector<std::complex<double>>& a, bool inverse);

/// Signed wave number of DFT mode j on a period L: 2 pi j'/L, j' in (-N/2, N/2].
double mode_wave_number(std::size_t j, std::size_t N, double L);

/// Apply -|k|^alpha mode by mode. At alpha = 0 every mode, including k = 0, gets -1.
GridField dft_fl(const GridField& g, double alpha);

/// The trigonometric interpolant of dft_fl(g, alpha), evaluated at offset x
/// from the first sample (x in units of length, any real).
double dft_fl_at(const GridField& g, double alpha, double x);

/// |sum|u|^2 - sum|U|^2/N| / sum|u|^2 for the forward transform of g.
double parseval_defect(const GridField& g);

/// (-1)^{p+1} d^{2p}/dx^{2p} exp(-x^2/sigma^2) for alpha = 2p in {0, 2, 4}.
double gaussian_reference(double alpha, double sigma, double x);

}  // namespace fraclap
