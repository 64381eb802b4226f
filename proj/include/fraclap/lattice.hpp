#pragma once

// Self-similar lattice energies and Laplacians, Weierstrass-Mandelbrot
// dispersion relations and the fractional continuum limit a -> 1.

#include <functional>

#include "fraclap/field.hpp"

namespace fraclap {

struct SelfSimilarParams {
  double delta = 1.0;  // exponent, 0 < delta < 2m
  double a = 2.0;      // scale ratio, a > 1
  double h = 1.0;      // lattice length
  int m = 1;           // difference order
  double spring = 1.0; // f_m
  /// Explicit window s in [-S, S] when positive; otherwise the window grows
  /// until the certified tail bound drops below tol relative to the sum.
  int s_max = 0;
  double tol = 1e-12;
  int s_cap = 200000;  // largest window the automatic truncation may use

  void validate() const;
};

/// Truncated lattice sum with the window it used and its certified tail bound.
struct LatticeSum {
  double value = 0.0;
  double tail_bound = 0.0;
  int s_lo = 0;
  int s_hi = 0;
};

/// (f_m/2) sum_s a^{-delta s} [(D(h a^s) - 1)^m u(x)]^2 along the first axis.
LatticeSum wm_energy_density(const TestField& u, double x, const SelfSimilarParams& p);

/// sum_s a^{-delta s} Delta_2m(h a^s) u(x) along the first axis.
LatticeSum selfsim_laplacian(const TestField& u, double x, const SelfSimilarParams& p);

/// omega^2(kh) = 4^m sum_s a^{-delta s} sin^{2m}(kh a^s / 2).
LatticeSum wm_dispersion_sum(double kh, const SelfSimilarParams& p);
double wm_dispersion(double kh, const SelfSimilarParams& p);

/// h^delta int_0^inf f(tau) tau^{-delta-1} dtau.
/// With period > 0, f is taken to be periodic on [period, inf) and the
/// oscillating tail is summed in closed form through the Hurwitz zeta function.
/// Throws ConvergenceError when the quadrature does not settle (non-integrable f).
double fractional_continuum_limit(const std::function<double(double)>& f, double delta, double h,
                                  double tol = 1e-10, double period = 0.0);

/// Hurwitz zeta sum_{k>=0} (q + k)^{-s}, s > 1, q > 0.
double hurwitz_zeta(double s, double q);

/// The same limit for f(tau) = 4^m sin^{2m}(tau/2): h^delta V_{m,delta}.
double sine_power_continuum_limit(int m, double delta, double h);

/// Growth bounds for the lattice sum: |f(tau)| <= f0 tau^b near 0 and
/// |f(tau)| <= finf tau^c at infinity, with c < delta < b.
struct AdmissibleBounds {
  double f0 = 1.0;
  double b = 2.0;
  double finf = 1.0;
  double c = 0.0;
};

/// |ln a| sum_s a^{-delta s} f(a^s h), the discrete side of the continuum limit.
LatticeSum continuum_sum(const std::function<double(double)>& f, const AdmissibleBounds& bounds, double delta,
                         double a, double h, double tol = 1e-12, int s_cap = 200000);

/// Relative deviation of |ln a| omega^2(kh) from its limit V (kh)^delta, as a
/// function over one log-period kh a^t, t in [0, 1). Returns the maximum.
double continuum_envelope_error(double kh, const SelfSimilarParams& p, int samples = 64);

}  // namespace fraclap
