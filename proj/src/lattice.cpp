#include "fraclap/lattice.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "fraclap/constants.hpp"
#include "fraclap/errors.hpp"
#include "fraclap/quad.hpp"

namespace fraclap {

namespace {

struct Neumaier {
  double sum = 0.0;
  double c = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) c += (sum - t) + x;
    else c += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + c; }
};

// A two-sided sum over s whose terms are bounded by geometric envelopes:
//   |term(s)| <= up_coef   * a^{-up_rate s}   (s -> +inf)
//   |term(s)| <= down_coef * a^{ down_rate s} (s -> -inf)
struct Series {
  std::function<double(int)> term;
  int center = 0;
  double up_coef = 0.0, up_rate = 1.0;
  double down_coef = 0.0, down_rate = 1.0;
  double floor = 0.0;  // absolute scale below which tol is taken as absolute
};

double geometric_tail(double coef, double rate, double first_exp, double log_a) {
  if (coef == 0.0) return 0.0;
  return std::exp(std::log(coef) - rate * first_exp * log_a) / (-std::expm1(-rate * log_a));
}

LatticeSum sum_series(const Series& s, const SelfSimilarParams& p) {
  const double la = std::log(p.a);
  auto up = [&](int hi) { return geometric_tail(s.up_coef, s.up_rate, hi + 1.0, la); };
  auto down = [&](int lo) { return geometric_tail(s.down_coef, s.down_rate, -(lo - 1.0), la); };

  LatticeSum r;
  Neumaier acc;
  if (p.s_max > 0) {
    for (int k = -p.s_max; k <= p.s_max; ++k) acc.add(s.term(k));
    r.s_lo = -p.s_max;
    r.s_hi = p.s_max;
  } else {
    int lo = s.center, hi = s.center;
    acc.add(s.term(s.center));
    for (;;) {
      const double ut = up(hi), dt = down(lo);
      if (ut + dt <= p.tol * std::max(std::abs(acc.value()), s.floor)) break;
      if (hi - lo >= p.s_cap)
        throw ConvergenceError("lattice sum: tail bound " + std::to_string(ut + dt) + " still above tolerance after " +
                               std::to_string(p.s_cap) + " terms");
      if (ut >= dt) acc.add(s.term(++hi));
      else acc.add(s.term(--lo));
    }
    r.s_lo = lo;
    r.s_hi = hi;
  }
  r.value = acc.value();
  r.tail_bound = up(r.s_hi) + down(r.s_lo);
  return r;
}

// sin(t a^k / 2). Once t a^k is large its double rounding error exceeds a
// radian, so the phase is formed and reduced in quad precision.
double half_phase_sin(double t, double a, int k) {
  const double x = t * std::pow(a, k);
  if (std::abs(x) < 1048576.0) return std::sin(0.5 * x);
  using quad = boost::multiprecision::cpp_bin_float_quad;
  static const quad pi("3.14159265358979323846264338327950288419716939937510582");
  const quad half = quad(t) * boost::multiprecision::pow(quad(a), k) / 2;
  return std::sin(static_cast<double>(half - pi * boost::multiprecision::floor(half / pi)));
}

int center_index(double length, const SelfSimilarParams& p) {
  if (!(length > 0.0) || !std::isfinite(length)) return 0;
  const double s = std::round(std::log(length / p.h) / std::log(p.a));
  return static_cast<int>(std::clamp(s, -1e6, 1e6));
}

}  // namespace

void SelfSimilarParams::validate() const {
  if (m < 1 || m > kMaxDifferenceOrder) throw DomainError("difference order m = " + std::to_string(m) + " outside [1, 20]");
  if (!(delta > 0.0 && delta < 2.0 * m))
    throw DomainError("delta = " + std::to_string(delta) + " outside the window (0, 2m) = (0, " + std::to_string(2 * m) + ")");
  if (!(a > 1.0) || !std::isfinite(a)) throw DomainError("scale ratio a must exceed 1");
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("lattice length h must be positive");
  if (!(spring > 0.0)) throw DomainError("spring constant must be positive");
  if (!(tol > 0.0)) throw DomainError("truncation tolerance must be positive");
  if (s_max < 0) throw DomainError("explicit window must be non-negative");
}

LatticeSum wm_dispersion_sum(double kh, const SelfSimilarParams& p) {
  p.validate();
  if (!(kh >= 0.0) || !std::isfinite(kh)) throw DomainError("wm_dispersion: kh must be finite and >= 0");
  if (kh == 0.0) return {};
  const int m = p.m;
  Series s;
  s.term = [&](int k) {
    const double sn = half_phase_sin(kh, p.a, k);
    return std::pow(p.a, -p.delta * k) * std::pow(4.0 * sn * sn, m);
  };
  s.center = -center_index(kh, SelfSimilarParams{p.delta, p.a, 1.0, m});
  s.up_coef = std::pow(4.0, m);
  s.up_rate = p.delta;
  s.down_coef = std::pow(kh, 2 * m);  // 4^m sin^2m(x/2) <= x^2m
  s.down_rate = 2.0 * m - p.delta;
  return sum_series(s, p);
}

double wm_dispersion(double kh, const SelfSimilarParams& p) { return wm_dispersion_sum(kh, p).value; }

LatticeSum selfsim_laplacian(const TestField& u, double x, const SelfSimilarParams& p) {
  p.validate();
  if (u.dimension() != 1) throw DomainError("lattice sums act on one-dimensional fields");
  const DiffWeights w = diff_weights(p.m);
  const Point x0{x, 0.0, 0.0};
  const Point e{1.0, 0.0, 0.0};
  Series s;
  // short stencils cancel catastrophically, so below this spacing use
  // Delta_2m(eta) u = sum_j even_moment(j) eta^2j u^(2j) / (2j)!
  const bool series = u.has_derivatives();
  const double eta_series = 0.5 * u.scale() / p.m;
  std::vector<double> coef;
  if (series)
    for (int j = p.m; j < p.m + 12; ++j)
      coef.push_back(w.even_moment(j) * u.laplacian_power(j, x0) / gamma(2.0 * j + 1.0));
  s.term = [&](int k) {
    const double eta = p.h * std::pow(p.a, k);
    double d = 0.0;
    if (series && eta < eta_series) {
      const double e2 = eta * eta;
      double pw = std::pow(e2, p.m);
      for (double c : coef) {
        d += c * pw;
        pw *= e2;
      }
    } else {
      for (int q = -p.m; q <= p.m; ++q) d += w.weight(q) * u.shifted(x0, q * eta, e);
    }
    return std::pow(p.a, -p.delta * k) * d;
  };
  s.center = center_index(u.scale(), p);
  s.up_coef = std::pow(4.0, p.m) * u.sup();
  s.up_rate = p.delta;
  // |Delta_2m(eta) u| <= eta^2m sup|u^(2m)|
  s.down_coef = std::pow(p.h, 2 * p.m) * u.derivative_bound(2 * p.m);
  s.down_rate = 2.0 * p.m - p.delta;
  s.floor = 1e-3 * u.sup();
  return sum_series(s, p);
}

LatticeSum wm_energy_density(const TestField& u, double x, const SelfSimilarParams& p) {
  p.validate();
  if (u.dimension() != 1) throw DomainError("lattice sums act on one-dimensional fields");
  const Point x0{x, 0.0, 0.0};
  const Point e{1.0, 0.0, 0.0};
  std::vector<double> c(static_cast<std::size_t>(p.m + 1));
  for (int j = 0; j <= p.m; ++j) c[static_cast<std::size_t>(j)] = (((p.m - j) % 2) ? -1.0 : 1.0) * binomial(p.m, j);
  Series s;
  s.term = [&](int k) {
    const double eta = p.h * std::pow(p.a, k);
    double d = 0.0;
    for (int j = 0; j <= p.m; ++j) d += c[static_cast<std::size_t>(j)] * u.shifted(x0, j * eta, e);
    return 0.5 * p.spring * std::pow(p.a, -p.delta * k) * d * d;
  };
  s.center = center_index(u.scale(), p);
  s.up_coef = 0.5 * p.spring * std::pow(4.0, p.m) * u.sup() * u.sup();
  s.up_rate = p.delta;
  const double mm = u.derivative_bound(p.m);
  s.down_coef = 0.5 * p.spring * std::pow(p.h, 2 * p.m) * mm * mm;
  s.down_rate = 2.0 * p.m - p.delta;
  s.floor = 1e-3 * u.sup() * u.sup();
  return sum_series(s, p);
}

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0)) throw DomainError("hurwitz_zeta: s must exceed 1");
  if (!(q > 0.0)) throw DomainError("hurwitz_zeta: q must be positive");
  // Euler-Maclaurin after N explicit terms
  constexpr int N = 12;
  constexpr std::array<double, 7> B2j = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6};
  double sum = 0.0;
  for (int k = 0; k < N; ++k) sum += std::pow(q + k, -s);
  const double z = q + N;
  sum += std::pow(z, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(z, -s);
  double rising = s;  // s (s+1) ... (s+2j-2)
  double fact = 2.0;  // (2j)!
  for (std::size_t j = 1; j <= B2j.size(); ++j) {
    sum += B2j[j - 1] / fact * rising * std::pow(z, -s - 2.0 * j + 1.0);
    rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
  }
  return sum;
}

double fractional_continuum_limit(const std::function<double(double)>& f, double delta, double h, double tol,
                                  double period) {
  if (!(delta > 0.0)) throw DomainError("fractional_continuum_limit: delta must be positive");
  if (!(h > 0.0)) throw DomainError("fractional_continuum_limit: h must be positive");
  if (!(tol > 0.0)) throw DomainError("fractional_continuum_limit: tolerance must be positive");
  auto g = [&](double t) { return t > 0.0 ? f(t) * std::pow(t, -delta - 1.0) : 0.0; };
  double value = 0.0;
  if (period > 0.0) {
    // sum_k int_0^P f(P + s) (P + s + kP)^{-delta-1} ds
    const double head = integrate_adaptive(g, 0.0, period, 0.0, tol, 20000).value;
    auto periodic = [&](double s) {
      return f(period + s) * std::pow(period, -delta - 1.0) * hurwitz_zeta(delta + 1.0, 1.0 + s / period);
    };
    const std::array<double, 5> pts = {0.0, 0.25 * period, 0.5 * period, 0.75 * period, period};
    value = head + integrate_adaptive(periodic, pts, 0.0, tol, 20000).value;
  } else {
    const std::array<double, 3> pts = {0.0, 1.0, std::numeric_limits<double>::infinity()};
    value = integrate_adaptive(g, pts, 0.0, tol, 20000).value;
  }
  return std::pow(h, delta) * value;
}

double sine_power_continuum_limit(int m, double delta, double h) {
  if (!(h > 0.0)) throw DomainError("sine_power_continuum_limit: h must be positive");
  return std::pow(h, delta) * v_integral(m, delta);
}

LatticeSum continuum_sum(const std::function<double(double)>& f, const AdmissibleBounds& bounds, double delta,
                         double a, double h, double tol, int s_cap) {
  if (!(bounds.c < delta && delta < bounds.b))
    throw DomainError("continuum_sum: need c < delta < b for the lattice sum to converge");
  SelfSimilarParams p;
  p.delta = delta;
  p.a = a;
  p.h = h;
  p.m = std::max(1, static_cast<int>(std::ceil(0.5 * delta + 1e-9)));
  p.tol = tol;
  p.s_cap = s_cap;
  if (!(a > 1.0)) throw DomainError("scale ratio a must exceed 1");
  if (!(h > 0.0)) throw DomainError("lattice length h must be positive");
  Series s;
  s.term = [&](int k) { return std::pow(a, -delta * k) * f(h * std::pow(a, k)); };
  s.center = 0;
  s.up_coef = bounds.finf * std::pow(h, bounds.c);
  s.up_rate = delta - bounds.c;
  s.down_coef = bounds.f0 * std::pow(h, bounds.b);
  s.down_rate = bounds.b - delta;
  LatticeSum r = sum_series(s, p);
  const double la = std::log(a);
  r.value *= la;
  r.tail_bound *= la;
  return r;
}

double continuum_envelope_error(double kh, const SelfSimilarParams& p, int samples) {
  p.validate();
  if (!(kh > 0.0)) throw DomainError("continuum_envelope_error: kh must be positive");
  if (samples < 1) throw DomainError("continuum_envelope_error: need at least one sample");
  const double V = v_integral(p.m, p.delta);
  const double la = std::log(p.a);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double kk = kh * std::pow(p.a, static_cast<double>(i) / samples);
    const double limit = V * std::pow(kk, p.delta);
    worst = std::max(worst, std::abs(la * wm_dispersion(kk, p) - limit) / limit);
  }
  return worst;
}

}  // namespace fraclap
