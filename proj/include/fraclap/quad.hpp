#pragma once

// Singular-integral engine: adaptive Gauss-Kronrod quadrature, oscillatory
// tails by contour rotation, and the epsilon-regularized half-line integrals
// with extrapolation to epsilon = 0.

#include <complex>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace fraclap {

using RealFn = std::function<double(double)>;

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  double l1 = 0.0;     // estimate of the integral of |f|
  int panels = 0;
};

/// Adaptive 7/15-point Gauss-Kronrod on [lo, hi]; hi may be +infinity, in
/// which case x = lo + t/(1-t) maps it onto [0, 1).
/// Stops when the summed error estimate is below max(abs_tol, rel_tol * l1).
/// Throws ConvergenceError when the panel budget runs out first.
QuadResult integrate_adaptive(const RealFn& f, double lo, double hi, double abs_tol,
                              double rel_tol = 0.0, int max_panels = 4000);

/// Same, with the interval pre-split at the sorted break points (first and
/// last entries are the end points).
QuadResult integrate_adaptive(const RealFn& f, std::span<const double> points, double abs_tol,
                              double rel_tol = 0.0, int max_panels = 4000);

/// int_lo^inf exp(i omega xi) xi^{-beta} dxi for lo > 0, omega > 0, beta > 0,
/// by rotating the contour onto xi = lo + i t.
std::complex<double> fourier_tail(double omega, double lo, double beta, double tol = 1e-15);

/// int_0^inf (2 sin(q t / 2))^{2m} t^{-alpha-1} dt for 0 < alpha < 2m, q > 0.
/// Equals q^alpha V_{m,alpha}.
double sine_power_moment(int m, double alpha, double q, double tol = 1e-13);

/// Re (eps - i xi)^{-alpha-1} on the principal branch.
double reg_kernel(double xi, double alpha, double eps);

/// Re { i^{alpha+1} (xi + i eps)^{-alpha-1} }, the second form of the same kernel.
double reg_kernel_alt(double xi, double alpha, double eps);

/// lim_{eps->0+} Re int_0^{xi0} (eps - i xi)^{-alpha-1} dxi = sin(pi alpha/2)/alpha * xi0^{-alpha};
/// pi/2 at alpha = 0.
double i_reg(double xi0, double alpha);

/// Radial quadrature configuration for the regularized integrals.
struct QuadSpec {
  double cutoff = 0.0;  // radius of the epsilon-dependent part; 0 = automatic
  double tol = 1e-13;   // relative panel tolerance
  double eps0 = 0.0;    // first epsilon; 0 = 1e-2 * profile scale
  int levels = 8;       // J: eps_j = eps0 * 2^-j, j = 0..J
  int order = 2;        // Richardson order (model v + c1 eps + ... + c_order eps^order)

  void validate() const;
};

/// A real function on the half line together with what the regularized
/// integral needs to know about it.
struct RadialProfile {
  RealFn value;
  /// f(xi) = sum_j even_taylor[j] xi^{2j} near the origin.
  std::vector<double> even_taylor;
  /// Below this radius f - (low Taylor terms) is summed from the series.
  double series_radius = 0.0;
  /// Characteristic xi-scale.
  double scale = 1.0;
  /// f is negligible beyond this radius.
  double support = std::numeric_limits<double>::infinity();
  /// Points where f is not smooth.
  std::vector<double> breakpoints;
  /// Optional exact far field: tail(R, beta) = int_R^inf f(xi) xi^{-beta} dxi.
  std::function<double(double, double)> tail;
};

struct RegResult {
  double value = 0.0;
  double error = 0.0;
  std::vector<double> eps;      // epsilon sequence
  std::vector<double> samples;  // integral at each epsilon
};

/// lim_{eps->0+} int_0^inf f(xi) Re(eps - i xi)^{-alpha-1} dxi.
///
/// Even Taylor terms of order 2j < alpha are subtracted before integrating;
/// their regularized integral over the half line is exactly zero for every
/// eps > 0. For alpha > 2 the profile must provide them. The remainder is
/// integrated for each eps in the sequence and Richardson-extrapolated.
/// Throws ConvergenceError when successive extrapolants stop contracting.
RegResult reg_halfline(const RadialProfile& profile, double alpha, const QuadSpec& spec = {});

RegResult reg_halfline(const RealFn& f, double alpha, const QuadSpec& spec = {});

/// Richardson tableau on eps_j = eps0 2^-j, eliminating `order` powers of eps.
/// Returns the last diagonal estimate and the difference to the previous one.
RegResult richardson_halving(std::span<const double> eps, std::span<const double> samples, int order);

}  // namespace fraclap
