#include "fraclap/constants.hpp"

#include <array>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "fraclap/errors.hpp"
#include "fraclap/quad.hpp"

namespace fraclap {

namespace {

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
constexpr double kLanczosG = 7.0;

double lanczos_gamma(double x) {
  // x >= 0.5
  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (int i = 1; i < 9; ++i) sum += kLanczos[i] / (z + i);
  const double t = z + kLanczosG + 0.5;
  const double half = 0.5 * (z + 0.5);
  const double tp = std::pow(t, half);
  return std::sqrt(2.0 * kPi) * tp * (tp * std::exp(-t)) * sum;
}

bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

void check_order(int m) {
  if (m < 1 || m > kMaxDifferenceOrder)
    throw DomainError("difference order m = " + std::to_string(m) + " outside [1, " +
                      std::to_string(kMaxDifferenceOrder) + "]");
}

void check_dimension(int n) {
  if (n < 1 || n > 3) throw DomainError("dimension n = " + std::to_string(n) + " outside [1, 3]");
}

void check_window(int m, double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0 * m))
    throw DomainError("alpha = " + std::to_string(alpha) + " outside the window (0, 2m) = (0, " +
                      std::to_string(2 * m) + ")");
}

}  // namespace

double gamma(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma: non-finite argument");
  if (x <= 0.0 && is_integer(x)) throw DomainError("gamma: pole at " + std::to_string(x));
  if (x > 0.0 && is_integer(x) && x <= 21.0) {
    double f = 1.0;
    for (int i = 2; i < static_cast<int>(x); ++i) f *= i;
    return f;
  }
  if (x < 0.5) return kPi / (sin_pi(x) * lanczos_gamma(1.0 - x));
  return lanczos_gamma(x);
}

double sin_pi(double x) {
  if (is_integer(x)) return 0.0;
  // x = 2k + r with r in [-1, 1)
  const double r = x - 2.0 * std::floor(0.5 * x + 0.5);
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  if (r > 0.5) return std::sin(kPi * (1.0 - r));
  if (r < -0.5) return -std::sin(kPi * (1.0 + r));
  return std::sin(kPi * r);
}

double sin_half_pi(double alpha) { return sin_pi(0.5 * alpha); }

bool is_even_integer(double alpha, double tol) {
  const double half = 0.5 * alpha;
  return half >= -tol && std::abs(half - std::round(half)) <= tol;
}

double binomial(int n, int k) {
  if (n < 0 || n > 2 * kMaxDifferenceOrder) throw DomainError("binomial: n outside table");
  if (k < 0 || k > n) return 0.0;
  std::uint64_t c = 1;
  k = std::min(k, n - k);
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return static_cast<double>(c);
}

double DiffWeights::even_moment(int j) const {
  double s = 0.0;
  for (int p = 1; p <= order; ++p) s += 2.0 * weight(p) * std::pow(static_cast<double>(p), 2 * j);
  if (j == 0) s += weight(0);
  return s;
}

DiffWeights diff_weights(int m) {
  check_order(m);
  DiffWeights d;
  d.order = m;
  d.weights.resize(static_cast<std::size_t>(2 * m + 1));
  // -(2 - D - D^-1)^m expanded; C(2m, m+p) is exact in double for m <= 20.
  for (int p = -m; p <= m; ++p) {
    const double c = binomial(2 * m, m + p);
    const int ap = p < 0 ? -p : p;
    d.weights[static_cast<std::size_t>(p + m)] = (ap == 0) ? -c : ((ap % 2 == 1) ? c : -c);
  }
  return d;
}

double central_diff_power(int m, double alpha) {
  check_order(m);
  if (!(alpha >= 0.0)) throw DomainError("central_diff_power: alpha must be >= 0");
  const double lead = std::pow(2.0, 1.0 + alpha) * ((m % 2 == 0) ? 1.0 : -1.0);
  if (is_integer(alpha) && alpha <= 200.0) {
    using boost::multiprecision::cpp_int;
    const auto e = static_cast<unsigned>(alpha);
    cpp_int sum = 0;
    for (int p = 1; p <= m; ++p) {
      cpp_int term = boost::multiprecision::pow(cpp_int(p), e) *
                     static_cast<long long>(binomial(2 * m, m + p));
      if (p % 2 == 1) sum -= term;
      else sum += term;
    }
    return lead * sum.convert_to<double>();
  }
  double sum = 0.0;
  for (int p = 1; p <= m; ++p) {
    const double term = binomial(2 * m, m + p) * std::pow(static_cast<double>(p), alpha);
    sum += (p % 2 == 1) ? -term : term;
  }
  return lead * sum;
}

double unit_sphere_moment(int n, double alpha) {
  check_dimension(n);
  if (!(alpha > -1.0)) throw DomainError("unit_sphere_moment: alpha must exceed -1");
  return 2.0 * std::pow(kPi, 0.5 * (n - 1)) * gamma(0.5 * (alpha + 1.0)) / gamma(0.5 * (alpha + n));
}

double unit_sphere_moment_special(int n, double alpha) {
  check_dimension(n);
  if (!(alpha > -1.0)) throw DomainError("unit_sphere_moment: alpha must exceed -1");
  switch (n) {
    case 1: return 2.0;
    case 2: return 2.0 * std::sqrt(kPi) * gamma(0.5 * (alpha + 1.0)) / gamma(1.0 + 0.5 * alpha);
    default: return 4.0 * kPi / (alpha + 1.0);
  }
}

double v_integral_closed(int m, double alpha) {
  check_order(m);
  check_window(m, alpha);
  if (is_even_integer(alpha, 0.0))
    throw DomainError("v_integral closed form is undetermined at even-integer alpha");
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m+1}
  return sign * kPi / (std::pow(2.0, alpha + 1.0) * gamma(alpha + 1.0) * sin_half_pi(alpha)) *
         central_diff_power(m, alpha);
}

double v_integral_quadrature(int m, double alpha, double tol) {
  check_order(m);
  check_window(m, alpha);
  return sine_power_moment(m, alpha, 1.0, tol);
}

double v_integral(int m, double alpha) {
  check_order(m);
  check_window(m, alpha);
  if (is_even_integer(alpha, 0.0)) return v_integral_quadrature(m, alpha);
  return v_integral_closed(m, alpha);
}

StandardConstant c_standard(int n, double alpha) {
  check_dimension(n);
  if (!(alpha >= 0.0)) throw DomainError("c_standard: alpha must be >= 0");
  StandardConstant c;
  const double s = sin_half_pi(alpha);
  if (s == 0.0) {
    c.distributional = true;
    return c;
  }
  c.value = gamma(0.5 * (alpha + n)) * gamma(alpha + 1.0) * s /
            (std::pow(kPi, 0.5 * (n + 1)) * gamma(0.5 * (alpha + 1.0)));
  return c;
}

double c_standard_levy(int n, double alpha) {
  check_dimension(n);
  if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("c_standard_levy: alpha outside (0, 2)");
  return std::pow(2.0, alpha - 1.0) * alpha * gamma(0.5 * (alpha + n)) /
         (std::pow(kPi, 0.5 * n) * gamma(1.0 - 0.5 * alpha));
}

NormConstants norm_constants(int m, int n, double alpha) {
  check_order(m);
  check_dimension(n);
  check_window(m, alpha);
  NormConstants c;
  c.m = m;
  c.n = n;
  c.alpha = alpha;
  c.U = unit_sphere_moment(n, alpha);
  c.V = v_integral(m, alpha);
  c.A = c.U * c.V;
  c.c_general = 1.0 / c.A;
  const StandardConstant cs = c_standard(n, alpha);
  c.c_standard = cs.value;
  c.distributional = cs.distributional;
  return c;
}

double a_delta(double delta, double h, double zeta) {
  if (!(delta > 0.0 && delta < 2.0)) throw DomainError("a_delta: delta outside (0, 2)");
  if (!(h > 0.0)) throw DomainError("a_delta: h must be positive");
  if (!(zeta > 0.0)) throw DomainError("a_delta: zeta must be positive");
  return std::pow(h, delta) / zeta * kPi / (gamma(delta + 1.0) * sin_half_pi(delta));
}

}  // namespace fraclap
