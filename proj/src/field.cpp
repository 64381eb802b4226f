#include "fraclap/field.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fraclap/constants.hpp"
#include "fraclap/errors.hpp"

namespace fraclap {

namespace {

void check_dim(int n) {
  if (n < 1 || n > 3) throw DomainError("field dimension n = " + std::to_string(n) + " outside [1, 3]");
}

double dot(const Point& a, const Point& b, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
  return s;
}

double dist(const Point& a, const Point& b, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)];
    s += d * d;
  }
  return std::sqrt(s);
}

// I0(z) exp(-z)
double bessel_i0_scaled(double z) {
  if (z < 600.0) return std::cyl_bessel_i(0.0, z) * std::exp(-z);
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 12; ++k) {
    term *= (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * z);
    sum += term;
  }
  return sum / std::sqrt(2.0 * kPi * z);
}

double factorial(int k) { return gamma(k + 1.0); }

}  // namespace

TestField TestField::plane_wave(int n, const Point& k) {
  check_dim(n);
  TestField f;
  f.kind_ = FieldKind::PlaneWave;
  f.n_ = n;
  f.k_ = k;
  for (int i = n; i < 3; ++i) f.k_[static_cast<std::size_t>(i)] = 0.0;
  if (!(f.wave_number() > 0.0)) throw DomainError("plane wave needs a nonzero wave vector");
  return f;
}

TestField TestField::gaussian(int n, double sigma, const Point& center) {
  check_dim(n);
  if (!(sigma > 0.0)) throw DomainError("gaussian width must be positive");
  TestField f;
  f.kind_ = FieldKind::Gaussian;
  f.n_ = n;
  f.sigma_ = sigma;
  f.center_ = center;
  return f;
}

TestField TestField::callable(int n, std::function<double(const Point&)> u, double sup, Decay decay,
                              std::function<double(int, const Point&)> laplacian_power, const Point& center) {
  check_dim(n);
  if (!u) throw DomainError("callable field needs a function");
  if (!(sup > 0.0) || !std::isfinite(sup)) throw DomainError("callable field must declare a finite bound");
  if (!(decay.scale > 0.0)) throw DomainError("callable field must declare a positive decay scale");
  if (decay.kind == Decay::Kind::Algebraic && !(decay.exponent > 0.0))
    throw DomainError("callable field with algebraic decay needs a positive exponent");
  TestField f;
  f.kind_ = FieldKind::Callable;
  f.n_ = n;
  f.fn_ = std::move(u);
  f.lap_ = std::move(laplacian_power);
  f.sup_ = sup;
  f.decay_ = decay;
  f.center_ = center;
  return f;
}

TestField& TestField::with_derivative_bounds(std::function<double(int)> bounds) {
  dbound_ = std::move(bounds);
  return *this;
}

double TestField::wave_number() const { return std::sqrt(dot(k_, k_, n_)); }

double TestField::operator()(const Point& x) const {
  switch (kind_) {
    case FieldKind::PlaneWave: return std::cos(dot(k_, x, n_));
    case FieldKind::Gaussian: {
      const double d = dist(x, center_, n_);
      return std::exp(-d * d / (sigma_ * sigma_));
    }
    default: return fn_(x);
  }
}

double TestField::shifted(const Point& x, double t, const Point& dir) const {
  Point y = x;
  for (int i = 0; i < n_; ++i) y[static_cast<std::size_t>(i)] += t * dir[static_cast<std::size_t>(i)];
  return (*this)(y);
}

double TestField::laplacian_power(int p, const Point& x) const {
  if (p < 0) throw DomainError("laplacian_power: negative power");
  switch (kind_) {
    case FieldKind::PlaneWave: {
      const double k2 = dot(k_, k_, n_);
      return std::pow(-k2, p) * (*this)(x);
    }
    case FieldKind::Gaussian: {
      Point y{};
      for (int i = 0; i < n_; ++i) y[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] - center_[static_cast<std::size_t>(i)];
      return gaussian_laplacian_power(n_, p, sigma_, y);
    }
    default:
      if (p == 0) return fn_(x);
      if (!lap_) throw DomainError("field provides no analytic even derivatives");
      return lap_(p, x);
  }
}

double TestField::sup() const { return kind_ == FieldKind::Callable ? sup_ : 1.0; }

double TestField::derivative_bound(int j) const {
  if (j < 0) throw DomainError("derivative_bound: negative order");
  switch (kind_) {
    case FieldKind::PlaneWave: return std::pow(wave_number(), j);
    case FieldKind::Gaussian:
      // Cramer: |H_j(t)| exp(-t^2/2) <= 1.0865 2^{j/2} sqrt(j!)
      return 1.0865 * std::pow(2.0, 0.5 * j) * std::sqrt(factorial(j)) * std::pow(sigma_, -j);
    default:
      if (j == 0) return sup_;
      if (dbound_) return dbound_(j);
      throw DomainError("callable field declares no derivative bounds");
  }
}

double TestField::scale() const {
  switch (kind_) {
    case FieldKind::PlaneWave: return 1.0 / wave_number();
    case FieldKind::Gaussian: return sigma_;
    default: return decay_.scale;
  }
}

double TestField::sphere_integral(const Point& x, double r) const {
  r = std::abs(r);
  if (kind_ == FieldKind::Callable) return sphere_integral_quadrature(x, r);
  if (kind_ == FieldKind::PlaneWave) {
    const double z = wave_number() * r;
    const double u = (*this)(x);
    switch (n_) {
      case 1: return 2.0 * std::cos(z) * u;
      case 2: return 2.0 * kPi * std::cyl_bessel_j(0.0, z) * u;
      default: return 4.0 * kPi * (z < 1e-4 ? 1.0 - z * z / 6.0 : std::sin(z) / z) * u;
    }
  }
  const double d = dist(x, center_, n_);
  const double s2 = sigma_ * sigma_;
  const double z = 2.0 * d * r / s2;
  const double near = std::exp(-(d - r) * (d - r) / s2);
  switch (n_) {
    case 1: return near + std::exp(-(d + r) * (d + r) / s2);
    case 2: return 2.0 * kPi * near * bessel_i0_scaled(z);
    default: {
      // 4 pi exp(-(d^2+r^2)/s2) sinh(z)/z
      if (z < 1e-4) return 4.0 * kPi * std::exp(-(d * d + r * r) / s2) * (1.0 + z * z / 6.0);
      return 4.0 * kPi * near * (-std::expm1(-2.0 * z)) / (2.0 * z);
    }
  }
}

double TestField::sphere_integral_quadrature(const Point& x, double r, int points) const {
  const AngularRule rule = angular_rule(n_, points);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.dirs.size(); ++i) s += rule.weights[i] * shifted(x, r, rule.dirs[i]);
  return s;
}

std::vector<double> TestField::sphere_taylor(const Point& x, int terms) const {
  std::vector<double> c(static_cast<std::size_t>(std::max(terms, 0)));
  for (int j = 0; j < terms; ++j)
    c[static_cast<std::size_t>(j)] = unit_sphere_moment(n_, 2.0 * j) * laplacian_power(j, x) / factorial(2 * j);
  return c;
}

double TestField::negligible_radius(const Point& x, double tol) const {
  const double d = dist(x, center_, n_);
  switch (kind_) {
    case FieldKind::PlaneWave: return std::numeric_limits<double>::infinity();
    case FieldKind::Gaussian: return d + sigma_ * std::sqrt(std::log(1.0 / tol));
    default:
      if (decay_.kind == Decay::Kind::Exponential) return d + decay_.scale * std::log(1.0 / tol);
      return d + decay_.scale * std::pow(tol, -1.0 / decay_.exponent);
  }
}

void gauss_legendre(int npts, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(npts), 0.0);
  weights.assign(static_cast<std::size_t>(npts), 0.0);
  for (int i = 0; i < (npts + 1) / 2; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (npts + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= npts; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = npts * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - t * t) * dp * dp);
    nodes[static_cast<std::size_t>(i)] = -t;
    nodes[static_cast<std::size_t>(npts - 1 - i)] = t;
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(npts - 1 - i)] = w;
  }
}

AngularRule angular_rule(int n, int points) {
  check_dim(n);
  if (points < 4) throw DomainError("angular_rule: need at least 4 points");
  AngularRule r;
  if (n == 1) {
    r.dirs = {Point{1.0, 0.0, 0.0}, Point{-1.0, 0.0, 0.0}};
    r.weights = {1.0, 1.0};
    return r;
  }
  const double dphi = 2.0 * kPi / points;
  if (n == 2) {
    for (int i = 0; i < points; ++i) {
      r.dirs.push_back({std::cos(i * dphi), std::sin(i * dphi), 0.0});
      r.weights.push_back(dphi);
    }
    return r;
  }
  std::vector<double> mu, w;
  gauss_legendre(points / 2 + 1, mu, w);
  for (std::size_t a = 0; a < mu.size(); ++a) {
    const double st = std::sqrt(1.0 - mu[a] * mu[a]);
    for (int i = 0; i < points; ++i) {
      r.dirs.push_back({st * std::cos(i * dphi), st * std::sin(i * dphi), mu[a]});
      r.weights.push_back(w[a] * dphi);
    }
  }
  return r;
}

double hermite(int k, double t) {
  if (k < 0) throw DomainError("hermite: negative degree");
  double h0 = 1.0;
  if (k == 0) return h0;
  double h1 = 2.0 * t;
  for (int j = 1; j < k; ++j) {
    const double h2 = 2.0 * t * h1 - 2.0 * j * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double gaussian_laplacian_power(int n, int p, double sigma, const Point& y) {
  check_dim(n);
  if (p < 0) throw DomainError("gaussian_laplacian_power: negative power");
  double r2 = 0.0;
  for (int i = 0; i < n; ++i) r2 += y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
  const double g = std::exp(-r2 / (sigma * sigma));
  auto d2q = [&](int q, int i) { return hermite(2 * q, y[static_cast<std::size_t>(i)] / sigma); };
  // (sum_i d_i^2)^p by the multinomial theorem
  double s = 0.0;
  if (n == 1) {
    s = d2q(p, 0);
  } else if (n == 2) {
    for (int q = 0; q <= p; ++q) s += binomial(p, q) * d2q(q, 0) * d2q(p - q, 1);
  } else {
    for (int q1 = 0; q1 <= p; ++q1)
      for (int q2 = 0; q1 + q2 <= p; ++q2) {
        const int q3 = p - q1 - q2;
        const double coef = factorial(p) / (factorial(q1) * factorial(q2) * factorial(q3));
        s += coef * d2q(q1, 0) * d2q(q2, 1) * d2q(q3, 2);
      }
  }
  return s * std::pow(sigma, -2 * p) * g;
}

}  // namespace fraclap
