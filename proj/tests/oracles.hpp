#pragma once

// Reference computations that share no code with the library: brute-force
// sums, composite Simpson rules and closed forms from the literature.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

// Fourier-side value of the 1D fractional Laplacian of exp(-x^2/sigma^2):
//   -(1/pi) int_0^inf k^alpha sigma sqrt(pi) exp(-k^2 sigma^2/4) cos(k x) dk,
// integrated in k = t^2 so the origin is smooth.
inline double gaussian_fl_1d(double alpha, double sigma, double x) {
  const double tmax = std::sqrt(80.0) / sigma;
  auto f = [&](double t) {
    const double k = t * t;
    return 2.0 * t * std::pow(k, alpha) * std::exp(-0.25 * k * k * sigma * sigma) * std::cos(k * x);
  };
  return -sigma * std::sqrt(pi) / pi * simpson(f, 0.0, tmax, 40000);
}

// Value at the center of the n-dimensional Gaussian, from the radial Fourier integral.
inline double gaussian_fl_center(int n, double alpha, double sigma) {
  const double area = 2.0 * std::pow(pi, 0.5 * n) / std::tgamma(0.5 * n);
  const double radial = 0.5 * std::pow(2.0 / sigma, alpha + n) * std::tgamma(0.5 * (alpha + n));
  return -std::pow(sigma * std::sqrt(pi), n) / std::pow(2.0 * pi, n) * area * radial;
}

// 4^m sum_s a^{-delta s} sin^{2m}(kh a^s / 2) over a fixed wide window, in
// 50-digit arithmetic so that the phases of the large-s terms stay exact.
inline double wm_bruteforce(double kh, double delta, double a, int m) {
  using big = boost::multiprecision::cpp_bin_float_50;
  big s = 0;
  const int lo = static_cast<int>(std::floor(-60.0 / std::log10(a)));
  const int hi = static_cast<int>(std::ceil(25.0 / (delta * std::log10(a))));
  for (int j = hi; j >= lo; --j) {
    const big v = sin(big(kh) * pow(big(a), j) / 2);
    s += pow(big(a), -big(delta) * j) * pow(4 * v * v, m);
  }
  return static_cast<double>(s);
}

inline std::vector<std::complex<double>> naive_dft(const std::vector<double>& x) {
  const std::size_t N = x.size();
  std::vector<std::complex<double>> out(N);
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t j = 0; j < N; ++j)
      out[k] += x[j] * std::polar(1.0, -2.0 * pi * static_cast<double>((k * j) % N) / static_cast<double>(N));
  return out;
}

// V_{1,alpha} = pi / (Gamma(alpha+1) sin(pi alpha/2)), 0 < alpha < 2.
inline double v_order_one(double alpha) { return pi / (std::tgamma(alpha + 1.0) * std::sin(0.5 * pi * alpha)); }

// Levy-interval constant 2^alpha Gamma((alpha+n)/2) / (pi^{n/2} |Gamma(-alpha/2)|).
inline double c_levy(int n, double alpha) {
  return std::pow(2.0, alpha) * std::tgamma(0.5 * (alpha + n)) /
         (std::pow(pi, 0.5 * n) * std::abs(std::tgamma(-0.5 * alpha)));
}

// Central finite difference of order 2 for the k-th derivative, by recursion.
inline double nth_derivative(const std::function<double(double)>& f, double x, int k, double h) {
  if (k == 0) return f(x);
  return (nth_derivative(f, x + h, k - 1, h) - nth_derivative(f, x - h, k - 1, h)) / (2.0 * h);
}

inline double rel(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

}  // namespace oracle
