#pragma once

// Special functions and the closed-form normalization constants of the
// fractional Laplacian representations.

#include <vector>

namespace fraclap {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Largest difference order m accepted anywhere in the library.
inline constexpr int kMaxDifferenceOrder = 20;

/// Gamma function. Lanczos (g = 7, 9 terms) on x >= 0.5, reflection below.
/// Exact for positive integer arguments up to 21.
/// Throws DomainError at the poles 0, -1, -2, ...
double gamma(double x);

/// sin(pi * x) with range reduction on x; exactly 0 at integers.
double sin_pi(double x);

/// sin(pi * alpha / 2), exactly 0 when alpha is an even integer.
double sin_half_pi(double alpha);

/// True when alpha / 2 lies within tol of a non-negative integer.
bool is_even_integer(double alpha, double tol = 1e-12);

/// Binomial coefficient C(n, k) for 0 <= n <= 2 * kMaxDifferenceOrder, exact.
double binomial(int n, int k);

/// Stencil of the symmetric difference operator of even order 2m,
///   Delta_2m(h) u(x) = sum_{p=-m..m} w_p u(x + p h).
struct DiffWeights {
  int order = 0;                // m
  std::vector<double> weights;  // w_{-m} .. w_{m}

  double weight(int p) const { return weights[static_cast<std::size_t>(p + order)]; }
  /// sum_p w_p p^(2j); zero for j < m.
  double even_moment(int j) const;
};

DiffWeights diff_weights(int m);

/// (D(1) - D(-1))^{2m} |lambda|^alpha at lambda = 0, via its binomial series
///   2^{1+alpha} (-1)^m sum_{p=1}^m C(2m, m+p) (-1)^p p^alpha.
/// Integer alpha is summed in exact integer arithmetic, so the even-integer
/// zeros below 2m come out as exact zeros.
double central_diff_power(int m, double alpha);

/// Integral of |n_1|^alpha over the unit sphere in n dimensions, general formula.
double unit_sphere_moment(int n, double alpha);

/// The simplified per-dimension forms: 2, 2 sqrt(pi) G((a+1)/2)/G(1+a/2), 4 pi/(a+1).
double unit_sphere_moment_special(int n, double alpha);

/// V_{m,alpha} = 2^{2m-alpha} int_0^inf sin^{2m}(xi) / xi^{alpha+1} dxi.
/// Closed form for alpha/2 not an integer, quadrature otherwise.
double v_integral(int m, double alpha);

/// Closed form of V_{m,alpha}; requires alpha/2 not an integer.
double v_integral_closed(int m, double alpha);

/// Quadrature route for V_{m,alpha}, valid on the whole window (0, 2m).
double v_integral_quadrature(int m, double alpha, double tol = 1e-13);

/// Normalization of the m-independent (regularized) representation,
///   C_{n,alpha} = G((alpha+n)/2) G(alpha+1) sin(pi alpha/2) / (pi^{(n+1)/2} G((alpha+1)/2)).
/// Exactly zero at even-integer alpha, where `distributional` is set.
struct StandardConstant {
  double value = 0.0;
  bool distributional = false;
};

StandardConstant c_standard(int n, double alpha);

/// Levy-interval form 2^{alpha-1} alpha G((alpha+n)/2) / (pi^{n/2} G(1 - alpha/2)), 0 < alpha < 2.
double c_standard_levy(int n, double alpha);

struct NormConstants {
  int m = 0;
  int n = 0;
  double alpha = 0.0;
  double U = 0.0;           // unit-sphere moment
  double V = 0.0;           // radial sine-power integral
  double A = 0.0;           // U * V
  double c_general = 0.0;   // 1 / A
  double c_standard = 0.0;  // m-independent constant
  bool distributional = false;
};

/// All normalization constants for order m, dimension n and exponent alpha in (0, 2m).
NormConstants norm_constants(int m, int n, double alpha);

/// Prefactor of the power-law dispersion in the fractional continuum limit,
///   A_delta = (h^delta / zeta) pi / (G(delta+1) sin(delta pi/2)),  0 < delta < 2.
double a_delta(double delta, double h, double zeta);

}  // namespace fraclap
