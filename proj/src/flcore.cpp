#include "fraclap/flcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fraclap/constants.hpp"
#include "fraclap/errors.hpp"

namespace fraclap {

namespace {

struct Integral {
  double value = 0.0;
  double error = 0.0;
};

// int_0^inf r^{-1-alpha} sum_p w_p S(|p| r) dr for the sphere average S of u about x.
Integral tempered_integral(const TestField& u, const Point& x, double alpha, int m, const FLOptions& opt) {
  const DiffWeights w = diff_weights(m);
  const double s0 = u.sphere_integral(x, 0.0);
  auto diff = [&](double r) {
    double s = w.weight(0) * s0;
    for (int p = 1; p <= m; ++p) s += 2.0 * w.weight(p) * u.sphere_integral(x, p * r);
    return s;
  };
  auto g = [&](double r) { return diff(r) * std::pow(r, -1.0 - alpha); };

  double rs = 0.0, near = 0.0, last = 0.0;
  if (u.has_derivatives()) {
    // r < rs: sum_j c_j S_2j r^2j with c_j = 0 for j < m, integrated term by term
    const int terms = std::max(opt.taylor_terms, m + 4);
    const std::vector<double> taylor = u.sphere_taylor(x, terms);
    rs = 0.25 * u.scale() / m;
    for (int j = m; j < terms; ++j) {
      last = w.even_moment(j) * taylor[static_cast<std::size_t>(j)] * std::pow(rs, 2.0 * j - alpha) / (2.0 * j - alpha);
      near += last;
    }
  } else {
    // no derivatives: keep only the leading r^2m behaviour below a small radius
    rs = 1e-3 * u.scale() / m;
    near = diff(rs) * std::pow(rs, -alpha) / (2.0 * m - alpha);
    last = near * 1e-6;
  }

  const double R = std::max(u.negligible_radius(x, 1e-18), 4.0 * rs);
  std::vector<double> pts = {rs};
  double d = 0.0;
  for (int i = 0; i < u.dimension(); ++i) {
    const double di = x[static_cast<std::size_t>(i)] - u.center()[static_cast<std::size_t>(i)];
    d += di * di;
  }
  d = std::sqrt(d);
  for (int p = 1; p <= m; ++p)
    if (d / p > rs && d / p < R) pts.push_back(d / p);
  for (double b = 2.0 * rs; b < R; b *= 2.0) pts.push_back(b);
  pts.push_back(R);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const QuadResult mid = integrate_adaptive(g, pts, 1e-300, opt.tol, 20000);

  // beyond R only the centre term survives
  const double tail = w.weight(0) * s0 * std::pow(R, -alpha) / alpha;
  return {near + mid.value + tail, mid.error + std::abs(last)};
}

void check_plane_wave_x(const TestField& u) {
  if (u.kind() == FieldKind::PlaneWave && !(u.wave_number() > 0.0))
    throw DomainError("plane wave needs a nonzero wave vector");
}

bool near_even_integer(double alpha) {
  const double d = std::abs(0.5 * alpha - std::round(0.5 * alpha));
  return d > 1e-12 && 2.0 * d < 1e-3;
}

}  // namespace

const char* representation_name(Representation rep) {
  switch (rep) {
    case Representation::Standard: return "standard";
    case Representation::OrderM: return "order-m";
    default: return "regularized";
  }
}

Representation parse_representation(const std::string& name) {
  if (name == "standard") return Representation::Standard;
  if (name == "order-m" || name == "orderm" || name == "order_m") return Representation::OrderM;
  if (name == "regularized") return Representation::Regularized;
  throw DomainError("unknown representation '" + name + "' (standard, order-m, regularized)");
}

FLResult fl_standard(const TestField& u, const Point& x, double alpha, const FLOptions& opt) {
  if (!(alpha > 0.0 && alpha < 2.0))
    throw DomainError("standard representation needs 0 < alpha < 2; at alpha = " + std::to_string(alpha) +
                      " the second difference only tempers the kernel as r^{2-alpha}, which diverges");
  check_plane_wave_x(u);
  const int n = u.dimension();
  const double c = c_standard(n, alpha).value;
  FLResult r;
  r.rep = Representation::Standard;
  r.alpha = alpha;
  r.n = n;
  r.m = 1;
  if (u.kind() == FieldKind::PlaneWave) {
    const double q = sine_power_moment(1, alpha, u.wave_number(), 0.1 * opt.tol);
    r.value = -0.5 * c * unit_sphere_moment(n, alpha) * q * u(x);
    r.error = std::abs(r.value) * opt.tol;
    return r;
  }
  const Integral in = tempered_integral(u, x, alpha, 1, opt);
  r.value = 0.5 * c * in.value;
  r.error = 0.5 * std::abs(c) * in.error;
  return r;
}

FLResult fl_order_m(const TestField& u, const Point& x, double alpha, int m, const FLOptions& opt) {
  const NormConstants nc = norm_constants(m, u.dimension(), alpha);
  check_plane_wave_x(u);
  const double pref = opt.norm == Normalization::Physical ? std::pow(opt.h, alpha) / (2.0 * opt.zeta) : nc.c_general;
  FLResult r;
  r.rep = Representation::OrderM;
  r.alpha = alpha;
  r.n = u.dimension();
  r.m = m;
  if (u.kind() == FieldKind::PlaneWave) {
    const double q = sine_power_moment(m, alpha, u.wave_number(), 0.1 * opt.tol);
    r.value = -pref * nc.U * q * u(x);
    r.error = std::abs(r.value) * opt.tol;
    return r;
  }
  const Integral in = tempered_integral(u, x, alpha, m, opt);
  r.value = pref * in.value;
  r.error = std::abs(pref) * in.error;
  return r;
}

FLResult fl_regularized(const TestField& u, const Point& x, double alpha, const FLOptions& opt) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw DomainError("regularized representation needs alpha >= 0");
  check_plane_wave_x(u);
  const int n = u.dimension();
  FLResult r;
  r.rep = Representation::Regularized;
  r.alpha = alpha;
  r.n = n;
  if (is_even_integer(alpha)) {
    const int p = static_cast<int>(std::lround(0.5 * alpha));
    r.integer_branch = true;
    r.value = ((p % 2) ? 1.0 : -1.0) * u.laplacian_power(p, x);
    return r;
  }
  r.ill_conditioned = near_even_integer(alpha);
  const double pref = -2.0 * gamma(alpha + 1.0) / kPi;
  const int nsub = static_cast<int>(std::ceil(0.5 * alpha));

  if (u.kind() == FieldKind::PlaneWave) {
    // the angular average factors out as U_{n,alpha} k^alpha and cancels
    const double k = u.wave_number();
    RadialProfile prof;
    prof.value = [k](double xi) { return std::cos(k * xi); };
    for (int j = 0; j < opt.taylor_terms; ++j)
      prof.even_taylor.push_back(((j % 2) ? -1.0 : 1.0) * std::pow(k, 2 * j) / gamma(2.0 * j + 1.0));
    prof.series_radius = 0.5 / k;
    prof.scale = 1.0 / k;
    prof.tail = [k](double R, double beta) { return fourier_tail(k, R, beta).real(); };
    const RegResult reg = reg_halfline(prof, alpha, opt.spec);
    const double ux = u(x);
    r.value = pref * reg.value * ux;
    r.error = std::abs(pref * reg.error * ux);
    return r;
  }

  RadialProfile prof;
  prof.value = [&u, &x](double rr) { return u.sphere_integral(x, rr); };
  if (u.has_derivatives()) {
    prof.even_taylor = u.sphere_taylor(x, opt.taylor_terms);
    prof.series_radius = 0.25 * u.scale();
  } else {
    if (nsub > 1)
      throw DomainError("alpha = " + std::to_string(alpha) + " needs analytic even derivatives of the field");
    prof.even_taylor = {u.sphere_integral(x, 0.0)};
  }
  prof.scale = u.scale();
  prof.support = u.negligible_radius(x, 1e-18);
  double d = 0.0;
  for (int i = 0; i < n; ++i) {
    const double di = x[static_cast<std::size_t>(i)] - u.center()[static_cast<std::size_t>(i)];
    d += di * di;
  }
  d = std::sqrt(d);
  if (d > 0.0) prof.breakpoints.push_back(d);
  for (double b = u.scale(); b < prof.support; b += u.scale()) prof.breakpoints.push_back(b);
  const RegResult reg = reg_halfline(prof, alpha, opt.spec);
  const double U = unit_sphere_moment(n, alpha);
  r.value = pref * reg.value / U;
  r.error = std::abs(pref * reg.error / U);
  return r;
}

FLResult fl_apply(Representation rep, const TestField& u, const Point& x, double alpha, int m, const FLOptions& opt) {
  switch (rep) {
    case Representation::Standard: return fl_standard(u, x, alpha, opt);
    case Representation::OrderM: return fl_order_m(u, x, alpha, m, opt);
    default: return fl_regularized(u, x, alpha, opt);
  }
}

double fl_eigenvalue(Representation rep, int n, double alpha, int m, double k, const FLOptions& opt) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("wave number k must be positive");
  const TestField u = TestField::plane_wave(n, {k, 0.0, 0.0});
  return fl_apply(rep, u, {0.0, 0.0, 0.0}, alpha, m, opt).value;
}

}  // namespace fraclap
