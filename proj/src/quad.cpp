#include "fraclap/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>

#include "fraclap/constants.hpp"
#include "fraclap/errors.hpp"

namespace fraclap {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod(const RealFn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double l1 = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[static_cast<std::size_t>(j)];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    kron += kWgk[static_cast<std::size_t>(j)] * (f1 + f2);
    l1 += kWgk[static_cast<std::size_t>(j)] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[static_cast<std::size_t>(j / 2)] * (f1 + f2);
  }
  Panel p{a, b, kron * h, std::abs((kron - gauss) * h), l1 * std::abs(h)};
  if (!std::isfinite(p.value) || !std::isfinite(p.error))
    throw ConvergenceError("integrate_adaptive: non-finite integrand on [" + std::to_string(a) + ", " +
                           std::to_string(b) + "]");
  return p;
}

QuadResult integrate_finite(const RealFn& f, std::span<const double> points, double abs_tol,
                            double rel_tol, int max_panels) {
  std::priority_queue<Panel> queue;
  double total = 0.0;
  double err = 0.0;
  double l1 = 0.0;
  std::vector<Panel> frozen;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i + 1] > points[i])) continue;
    Panel p = gauss_kronrod(f, points[i], points[i + 1]);
    total += p.value;
    err += p.error;
    l1 += p.l1;
    queue.push(p);
  }
  int panels = static_cast<int>(queue.size());
  auto target = [&] { return std::max(abs_tol, rel_tol * l1); };
  while (err > target() && !queue.empty()) {
    if (panels >= max_panels)
      throw ConvergenceError("integrate_adaptive: tolerance " + std::to_string(target()) +
                             " not met within " + std::to_string(max_panels) + " panels (error " +
                             std::to_string(err) + ")");
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) < 64.0 * std::numeric_limits<double>::epsilon() *
                                  std::max(std::abs(worst.a), std::abs(worst.b))) {
      // cannot split further; accept what the panel says
      frozen.push_back(worst);
      err -= worst.error;
      if (err < 0.0) err = 0.0;
      continue;
    }
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    queue.push(left);
    queue.push(right);
    ++panels;
  }
  // re-sum to shed accumulated cancellation from the running updates
  QuadResult r;
  r.panels = panels;
  double s = 0.0, e = 0.0, a1 = 0.0;
  while (!queue.empty()) {
    s += queue.top().value;
    e += queue.top().error;
    a1 += queue.top().l1;
    queue.pop();
  }
  for (const Panel& p : frozen) {
    s += p.value;
    e += p.error;
    a1 += p.l1;
  }
  r.value = s;
  r.error = e;
  r.l1 = a1;
  return r;
}

}  // namespace

QuadResult integrate_adaptive(const RealFn& f, std::span<const double> points, double abs_tol,
                              double rel_tol, int max_panels) {
  if (points.size() < 2) throw DomainError("integrate_adaptive: need at least two points");
  if (!(abs_tol > 0.0 || rel_tol > 0.0)) throw DomainError("integrate_adaptive: tolerance must be positive");
  const double lo = points.front();
  const double hi = points.back();
  if (!std::isfinite(lo)) throw DomainError("integrate_adaptive: lower limit must be finite");
  if (std::isfinite(hi)) return integrate_finite(f, points, abs_tol, rel_tol, max_panels);

  // x = lo + t / (1 - t)
  auto mapped = [&f, lo](double t) {
    const double s = 1.0 - t;
    // a convergent integrand vanishes at the mapped endpoint
    if (s <= 0.0) return 0.0;
    return f(lo + t / s) / (s * s);
  };
  std::vector<double> tpts;
  tpts.reserve(points.size());
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double d = points[i] - lo;
    tpts.push_back(d / (1.0 + d));
  }
  tpts.push_back(1.0);
  return integrate_finite(mapped, tpts, abs_tol, rel_tol, max_panels);
}

QuadResult integrate_adaptive(const RealFn& f, double lo, double hi, double abs_tol, double rel_tol,
                              int max_panels) {
  if (!(hi > lo)) {
    if (hi == lo) return {};
    throw DomainError("integrate_adaptive: upper limit below lower limit");
  }
  const std::array<double, 2> pts = {lo, hi};
  return integrate_adaptive(f, pts, abs_tol, rel_tol, max_panels);
}

std::complex<double> fourier_tail(double omega, double lo, double beta, double tol) {
  if (!(omega > 0.0 && lo > 0.0 && beta > 0.0))
    throw DomainError("fourier_tail: requires omega > 0, lo > 0, beta > 0");
  const std::complex<double> I(0.0, 1.0);
  // xi = lo + i s / omega
  auto integrand = [&](double s) { return std::exp(-s) * std::pow(std::complex<double>(lo, s / omega), -beta); };
  const double re = integrate_adaptive([&](double s) { return integrand(s).real(); }, 0.0,
                                       std::numeric_limits<double>::infinity(), 0.0, tol)
                        .value;
  const double im = integrate_adaptive([&](double s) { return integrand(s).imag(); }, 0.0,
                                       std::numeric_limits<double>::infinity(), 0.0, tol)
                        .value;
  return I * std::exp(I * (omega * lo)) * std::complex<double>(re, im) / omega;
}

double sine_power_moment(int m, double alpha, double q, double tol) {
  if (m < 1 || m > kMaxDifferenceOrder) throw DomainError("sine_power_moment: order out of range");
  if (!(alpha > 0.0 && alpha < 2.0 * m)) throw DomainError("sine_power_moment: alpha outside (0, 2m)");
  if (!(q > 0.0)) throw DomainError("sine_power_moment: q must be positive");

  const double R = 2.0 * kPi / q;
  const double gap = 2.0 * m - alpha;  // integrand ~ t^{gap-1} at the origin
  const double kappa = gap < 1.0 ? 2.0 / gap : 1.0;
  // t = R s^kappa, integrand written through (2 sin(x/2)/x)^{2m} so the origin is clean
  auto near = [&](double s) {
    if (s <= 0.0) return 0.0;
    const double x = q * R * std::pow(s, kappa);
    const double ratio = x < 1e-8 ? 1.0 - x * x / 24.0 : 2.0 * std::sin(0.5 * x) / x;
    return std::pow(ratio, 2 * m) * std::pow(q, 2 * m) * std::pow(R, gap) * kappa *
           std::pow(s, kappa * gap - 1.0);
  };
  const std::array<double, 5> pts = {0.0, 0.25, 0.5, 0.75, 1.0};
  const double inner = integrate_adaptive(near, pts, 0.0, tol).value;

  // (2 - 2 cos x)^m = C(2m, m) + sum_j 2 (-1)^j C(2m, m-j) cos(j x)
  double tail = binomial(2 * m, m) * std::pow(R, -alpha) / alpha;
  for (int j = 1; j <= m; ++j) {
    const double a = 2.0 * ((j % 2 == 0) ? 1.0 : -1.0) * binomial(2 * m, m - j);
    tail += a * fourier_tail(j * q, R, alpha + 1.0, 1e-15).real();
  }
  return inner + tail;
}

double reg_kernel(double xi, double alpha, double eps) {
  if (!(eps > 0.0)) throw DomainError("reg_kernel: eps must be positive");
  const double rho = std::hypot(eps, xi);
  const double theta = std::atan2(-xi, eps);
  return std::pow(rho, -alpha - 1.0) * std::cos((alpha + 1.0) * theta);
}

double reg_kernel_alt(double xi, double alpha, double eps) {
  if (!(eps > 0.0)) throw DomainError("reg_kernel: eps must be positive");
  const std::complex<double> phase = std::polar(1.0, 0.5 * kPi * (alpha + 1.0));
  return (phase * std::pow(std::complex<double>(xi, eps), -alpha - 1.0)).real();
}

double i_reg(double xi0, double alpha) {
  if (!(xi0 > 0.0)) throw DomainError("i_reg: xi0 must be positive");
  if (!(alpha >= 0.0)) throw DomainError("i_reg: alpha must be >= 0");
  if (alpha == 0.0) return 0.5 * kPi;
  return sin_half_pi(alpha) / alpha * std::pow(xi0, -alpha);
}

void QuadSpec::validate() const {
  if (!(tol > 0.0)) throw DomainError("QuadSpec: tolerance must be positive");
  if (eps0 < 0.0) throw DomainError("QuadSpec: eps0 must be positive");
  if (levels < 2) throw DomainError("QuadSpec: need at least J = 2 epsilon levels");
  if (order < 1 || order > levels) throw DomainError("QuadSpec: extrapolation order must lie in [1, J]");
  if (cutoff < 0.0) throw DomainError("QuadSpec: cutoff must be positive");
}

RegResult richardson_halving(std::span<const double> eps, std::span<const double> samples, int order) {
  const std::size_t n = samples.size();
  if (n < static_cast<std::size_t>(order) + 1 || eps.size() != n)
    throw DomainError("richardson_halving: not enough samples for the requested order");
  // table[j][k]: estimate from samples j-k..j with k powers of eps eliminated
  std::vector<std::vector<double>> table(n, std::vector<double>(static_cast<std::size_t>(order) + 1));
  for (std::size_t j = 0; j < n; ++j) {
    table[j][0] = samples[j];
    for (int k = 1; k <= order && static_cast<std::size_t>(k) <= j; ++k) {
      // Neville step towards eps = 0
      const double f = eps[j - static_cast<std::size_t>(k)] / eps[j];
      table[j][static_cast<std::size_t>(k)] =
          (f * table[j][static_cast<std::size_t>(k - 1)] - table[j - 1][static_cast<std::size_t>(k - 1)]) / (f - 1.0);
    }
  }
  RegResult r;
  r.eps.assign(eps.begin(), eps.end());
  r.samples.assign(samples.begin(), samples.end());
  const auto ord = static_cast<std::size_t>(order);
  r.value = table[n - 1][ord];
  r.error = (n >= ord + 2) ? std::abs(table[n - 1][ord] - table[n - 2][ord]) : std::abs(r.value);
  return r;
}

RegResult reg_halfline(const RadialProfile& profile, double alpha, const QuadSpec& spec) {
  spec.validate();
  if (!(alpha >= 0.0)) throw DomainError("reg_halfline: alpha must be >= 0");
  if (!profile.value) throw DomainError("reg_halfline: profile has no function");
  const double inf = std::numeric_limits<double>::infinity();

  // even Taylor terms with 2j < alpha are subtracted
  std::size_t nsub = 0;
  while (2.0 * static_cast<double>(nsub) < alpha) ++nsub;
  if (profile.even_taylor.size() < nsub) {
    if (alpha > 2.0)
      throw DomainError("reg_halfline: alpha = " + std::to_string(alpha) + " needs " + std::to_string(nsub) +
                        " even Taylor coefficients of the profile");
    nsub = 0;
  }
  const std::vector<double>& taylor = profile.even_taylor;
  const bool series = taylor.size() > nsub && profile.series_radius > 0.0;

  auto poly = [&](double xi) {
    double s = 0.0, x2 = xi * xi, pw = 1.0;
    for (std::size_t j = 0; j < nsub; ++j, pw *= x2) s += taylor[j] * pw;
    return s;
  };
  auto remainder = [&](double xi) {
    if (series && xi < profile.series_radius) {
      const double x2 = xi * xi;
      double pw = std::pow(x2, static_cast<double>(nsub));
      double s = 0.0;
      for (std::size_t j = nsub; j < taylor.size(); ++j, pw *= x2) s += taylor[j] * pw;
      return s;
    }
    return profile.value(xi) - poly(xi);
  };

  double R = spec.cutoff;
  if (R == 0.0) {
    if (std::isfinite(profile.support)) R = profile.support;
    else if (profile.tail) R = 8.0 * profile.scale;
    else R = inf;
  }
  const double eps0 = spec.eps0 > 0.0 ? spec.eps0 : 1e-2 * profile.scale;
  const double s = sin_half_pi(alpha);

  // epsilon-independent far part, taken at the eps -> 0 limit of the kernel
  double far = 0.0;
  if (std::isfinite(R)) {
    double ftail = 0.0;
    if (profile.tail) {
      ftail = profile.tail(R, alpha + 1.0);
    } else if (R < profile.support) {
      ftail = integrate_adaptive([&](double xi) { return profile.value(xi) * std::pow(xi, -alpha - 1.0); }, R,
                                 profile.support, 0.0, spec.tol)
                  .value;
    }
    double ptail = 0.0;
    for (std::size_t j = 0; j < nsub; ++j)
      ptail += taylor[j] * std::pow(R, 2.0 * static_cast<double>(j) - alpha) / (alpha - 2.0 * static_cast<double>(j));
    far = -s * (ftail - ptail);
  }

  std::vector<double> eps_seq;
  std::vector<double> samples;
  for (int j = 0; j <= spec.levels; ++j) {
    const double eps = eps0 * std::pow(2.0, -j);
    std::vector<double> pts = {0.0};
    for (double b = eps; b < R && b < 64.0 * profile.scale; b *= 4.0) pts.push_back(b);
    if (series && profile.series_radius < R) pts.push_back(profile.series_radius);
    for (double b : profile.breakpoints)
      if (b > 0.0 && b < R) pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (!std::isfinite(R) && pts.back() < profile.scale) pts.push_back(profile.scale);
    pts.push_back(R);
    auto integrand = [&](double xi) { return remainder(xi) * reg_kernel(xi, alpha, eps); };
    const QuadResult q = integrate_adaptive(integrand, pts, 1e-300, spec.tol, 20000);
    eps_seq.push_back(eps);
    samples.push_back(q.value + far);
  }

  RegResult r = richardson_halving(eps_seq, samples, spec.order);
  // contraction check on the last three extrapolants
  if (spec.levels >= spec.order + 2) {
    const auto n = samples.size();
    const RegResult prev = richardson_halving(std::span(eps_seq).first(n - 1), std::span(samples).first(n - 1), spec.order);
    double scale = 1.0;
    for (double v : samples) scale = std::max(scale, std::abs(v));
    const double floor = 1e3 * spec.tol * scale;
    if (r.error > floor && r.error > 1.5 * prev.error && prev.error > 0.0)
      throw ConvergenceError("reg_halfline: epsilon extrapolation is not contracting (" + std::to_string(prev.error) +
                             " -> " + std::to_string(r.error) + ")");
  }
  return r;
}

RegResult reg_halfline(const RealFn& f, double alpha, const QuadSpec& spec) {
  RadialProfile p;
  p.value = f;
  return reg_halfline(p, alpha, spec);
}

}  // namespace fraclap
