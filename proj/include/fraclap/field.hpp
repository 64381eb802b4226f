#pragma once

// Closed-form test fields in 1..3 dimensions with exact shifted evaluation,
// even Laplacian powers, sphere averages and derivative bounds.

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace fraclap {

using Point = std::array<double, 3>;

enum class FieldKind { PlaneWave, Gaussian, Callable };

/// How a callable field falls off at infinity.
struct Decay {
  enum class Kind { Exponential, Algebraic } kind = Kind::Exponential;
  double scale = 1.0;     // length scale of the decay
  double exponent = 0.0;  // |u| <= sup * (scale/|y|)^exponent, algebraic only
};

class TestField {
 public:
  /// Real part of exp(i k.x): cos(k.x).
  static TestField plane_wave(int n, const Point& k);
  /// exp(-|x - c|^2 / sigma^2).
  static TestField gaussian(int n, double sigma, const Point& center = {0.0, 0.0, 0.0});
  /// User field. `sup` bounds |u|; `laplacian_power(p, x)` returns Delta^p u(x)
  /// and is required wherever a representation needs even derivatives.
  static TestField callable(int n, std::function<double(const Point&)> u, double sup, Decay decay,
                            std::function<double(int, const Point&)> laplacian_power = {},
                            const Point& center = {0.0, 0.0, 0.0});

  /// Bounds on |d^j u| along lines, for callable fields used in lattice sums.
  TestField& with_derivative_bounds(std::function<double(int)> bounds);

  FieldKind kind() const { return kind_; }
  int dimension() const { return n_; }
  double sigma() const { return sigma_; }
  const Point& wave_vector() const { return k_; }
  const Point& center() const { return center_; }
  double wave_number() const;
  bool has_derivatives() const { return kind_ != FieldKind::Callable || static_cast<bool>(lap_); }

  double operator()(const Point& x) const;
  /// u(x + t * dir).
  double shifted(const Point& x, double t, const Point& dir) const;
  /// Delta^p u(x). Throws DomainError when the field has no derivatives.
  double laplacian_power(int p, const Point& x) const;
  /// Bound on |u|.
  double sup() const;
  /// Bound on |d^j/dt^j u(x + t e)| over t, any unit e.
  double derivative_bound(int j) const;
  /// Length scale of the field (1/|k|, sigma, or the decay scale).
  double scale() const;

  /// S(r) = integral of u(x + r e) over the unit sphere of directions e.
  double sphere_integral(const Point& x, double r) const;
  /// S(r) by product quadrature over the sphere, for any kind of field.
  double sphere_integral_quadrature(const Point& x, double r, int points = 64) const;
  /// Coefficients S_2j with S(r) = sum_j S_2j r^2j, j = 0..terms-1.
  std::vector<double> sphere_taylor(const Point& x, int terms) const;
  /// Radius beyond which u(x + r e) is below tol * sup for every direction e.
  double negligible_radius(const Point& x, double tol) const;

 private:
  FieldKind kind_ = FieldKind::Gaussian;
  int n_ = 1;
  Point k_{};
  double sigma_ = 1.0;
  Point center_{};
  std::function<double(const Point&)> fn_;
  std::function<double(int, const Point&)> lap_;
  std::function<double(int)> dbound_;
  double sup_ = 1.0;
  Decay decay_;
};

/// Direction set for sphere averages: unit vectors and weights summing to the
/// sphere area. n = 1: two points; n = 2: trapezoid in phi; n = 3: Gauss-Legendre
/// in cos(theta) times trapezoid in phi.
struct AngularRule {
  std::vector<Point> dirs;
  std::vector<double> weights;
};
AngularRule angular_rule(int n, int points);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int npts, std::vector<double>& nodes, std::vector<double>& weights);

/// Physicists' Hermite polynomial H_k(t).
double hermite(int k, double t);

/// d^{2p}/dx^{2p} exp(-x^2/sigma^2), and Delta^p of the n-dimensional Gaussian
/// at offset y from its center.
double gaussian_laplacian_power(int n, int p, double sigma, const Point& y);

}  // namespace fraclap
