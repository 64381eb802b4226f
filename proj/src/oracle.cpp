#include "fraclap/oracle.hpp"

#include <cmath>
#include <string>

#include "fraclap/constants.hpp"
#include "fraclap/errors.hpp"
#include "fraclap/field.hpp"

namespace fraclap {

namespace {

bool is_pow2(std::size_t n) { return n && !(n & (n - 1)); }

std::vector<std::complex<double>> forward(const GridField& g) {
  std::vector<std::complex<double>> a(g.samples.begin(), g.samples.end());
  fft(a, false);
  return a;
}

double multiplier(double k, double alpha) { return alpha == 0.0 ? -1.0 : -std::pow(std::abs(k), alpha); }

}  // namespace

void GridField::validate() const {
  const std::size_t n = samples.size();
  if (!is_pow2(n) || n < 16 || n > 65536)
    throw DomainError("grid size N = " + std::to_string(n) + " must be a power of two in [16, 65536]");
  if (!(dx > 0.0) || !std::isfinite(dx)) throw DomainError("grid spacing must be positive");
  for (double v : samples)
    if (!std::isfinite(v)) throw DomainError("grid samples must be finite");
}

GridField sample_gaussian(std::size_t N, double dx, double sigma, double x0, double center) {
  GridField g;
  g.dx = dx;
  g.samples.resize(N);
  for (std::size_t j = 0; j < N; ++j) {
    const double y = x0 + static_cast<double>(j) * dx - center;
    g.samples[j] = std::exp(-y * y / (sigma * sigma));
  }
  g.validate();
  return g;
}

void fft(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (!is_pow2(n)) throw DomainError("fft: length must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    const std::size_t half = len / 2;
    // twiddles from sin/cos directly, not by repeated multiplication
    std::vector<std::complex<double>> tw(half);
    for (std::size_t k = 0; k < half; ++k) tw[k] = std::polar(1.0, ang * static_cast<double>(k));
    for (std::size_t i = 0; i < n; i += len)
      for (std::size_t k = 0; k < half; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + half] * tw[k];
        a[i + k] = u + v;
        a[i + k + half] = u - v;
      }
  }
  if (inverse)
    for (auto& z : a) z /= static_cast<double>(n);
}

double mode_wave_number(std::size_t j, std::size_t N, double L) {
  const double jj = j <= N / 2 ? static_cast<double>(j) : static_cast<double>(j) - static_cast<double>(N);
  return 2.0 * kPi * jj / L;
}

GridField dft_fl(const GridField& g, double alpha) {
  g.validate();
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw DomainError("dft_fl: alpha must be >= 0");
  auto a = forward(g);
  const std::size_t N = g.size();
  const double L = g.period();
  for (std::size_t j = 0; j < N; ++j) a[j] *= multiplier(mode_wave_number(j, N, L), alpha);
  fft(a, true);
  GridField out;
  out.dx = g.dx;
  out.samples.resize(N);
  for (std::size_t j = 0; j < N; ++j) out.samples[j] = a[j].real();
  return out;
}

double dft_fl_at(const GridField& g, double alpha, double x) {
  g.validate();
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw DomainError("dft_fl_at: alpha must be >= 0");
  const auto a = forward(g);
  const std::size_t N = g.size();
  const double L = g.period();
  double s = 0.0;
  for (std::size_t j = 0; j < N; ++j) {
    const double k = mode_wave_number(j, N, L);
    const double mult = multiplier(k, alpha);
    if (j == N / 2) {
      // Nyquist: real interpolant uses cos
      s += mult * a[j].real() * std::cos(k * x);
    } else {
      s += mult * (a[j] * std::polar(1.0, k * x)).real();
    }
  }
  return s / static_cast<double>(N);
}

double parseval_defect(const GridField& g) {
  g.validate();
  const auto a = forward(g);
  double e = 0.0, f = 0.0;
  for (double v : g.samples) e += v * v;
  for (const auto& z : a) f += std::norm(z);
  f /= static_cast<double>(g.size());
  return e > 0.0 ? std::abs(e - f) / e : std::abs(f);
}

double gaussian_reference(double alpha, double sigma, double x) {
  if (!(sigma > 0.0)) throw DomainError("gaussian_reference: sigma must be positive");
  if (!(alpha == 0.0 || alpha == 2.0 || alpha == 4.0))
    throw DomainError("gaussian_reference: alpha must be 0, 2 or 4");
  const int p = static_cast<int>(alpha) / 2;
  const double t = x / sigma;
  const double d2p = hermite(2 * p, t) * std::pow(sigma, -2 * p) * std::exp(-t * t);
  return ((p % 2) ? 1.0 : -1.0) * d2p;
}

}  // namespace fraclap
