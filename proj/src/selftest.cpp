#include "fraclap/selftest.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <tuple>
#include <utility>

#include "fraclap/constants.hpp"
#include "fraclap/errors.hpp"
#include "fraclap/flcore.hpp"
#include "fraclap/lattice.hpp"
#include "fraclap/oracle.hpp"
#include "fraclap/potentials.hpp"
#include "fraclap/quad.hpp"

namespace fraclap {

namespace {

struct Check {
  const char* module;
  const char* name;
  std::function<std::string(bool)> run;  // returns "" on success, else what went wrong
};

std::string near(double got, double want, double rtol, double atol = 0.0) {
  const double err = std::abs(got - want);
  if (err <= std::max(atol, rtol * std::abs(want))) return {};
  char buf[160];
  std::snprintf(buf, sizeof buf, "got %.17g, want %.17g (diff %.3g)", got, want, err);
  return buf;
}

std::vector<Check> checks() {
  std::vector<Check> c;
  c.push_back({"constants", "gamma values", [](bool) {
                 std::string e = near(gamma(5.0), 24.0, 0.0);
                 if (e.empty()) e = near(gamma(0.5), std::sqrt(kPi), 1e-14);
                 if (e.empty()) e = near(gamma(-0.5), -2.0 * std::sqrt(kPi), 1e-14);
                 return e;
               }});
  c.push_back({"constants", "C(1,1) = 1/pi", [](bool fault) {
                 const double v = c_standard(1, 1.0).value * (fault ? 1.0 + 1e-6 : 1.0);
                 return near(v, 1.0 / kPi, 1e-12);
               }});
  c.push_back({"constants", "Levy and general C agree", [](bool) {
                 for (int n = 1; n <= 3; ++n)
                   for (double a = 0.1; a < 2.0; a += 0.1) {
                     const std::string e = near(c_standard(n, a).value, c_standard_levy(n, a), 1e-12);
                     if (!e.empty()) return e;
                   }
                 return std::string();
               }});
  c.push_back({"constants", "A = U V > 0 and A = 2/C at m = 1", [](bool) {
                 for (int n = 1; n <= 3; ++n)
                   for (double a : {0.3, 1.0, 1.7}) {
                     const NormConstants k = norm_constants(1, n, a);
                     if (!(k.A > 0.0)) return std::string("A not positive");
                     const std::string e = near(k.A, 2.0 / k.c_standard, 1e-12);
                     if (!e.empty()) return e;
                   }
                 return std::string();
               }});
  c.push_back({"constants", "V closed form vs quadrature", [](bool) {
                 for (auto [m, a] : {std::pair{1, 1.0}, {2, 2.5}, {3, 4.5}}) {
                   const std::string e = near(v_integral_closed(m, a), v_integral_quadrature(m, a), 1e-9);
                   if (!e.empty()) return e;
                 }
                 return std::string();
               }});
  c.push_back({"constants", "even-integer zeros of central differences", [](bool) {
                 for (int m = 2; m <= 6; ++m)
                   for (int q = 1; q < m; ++q)
                     if (central_diff_power(m, 2.0 * q) != 0.0) return std::string("nonzero at m=") + std::to_string(m);
                 return std::string();
               }});
  c.push_back({"quad", "kernel forms agree", [](bool) {
                 for (double xi : {-3.0, -0.1, 0.0, 0.5, 7.0})
                   for (double a : {0.0, 0.5, 1.5, 3.2}) {
                     const std::string e = near(reg_kernel(xi, a, 0.1), reg_kernel_alt(xi, a, 0.1), 1e-13,
                                                1e-13 * std::abs(reg_kernel(0.0, a, 0.1)));
                     if (!e.empty()) return e;
                   }
                 return std::string();
               }});
  c.push_back({"quad", "indicator integral matches I_reg", [](bool) {
                 RadialProfile p;
                 p.value = [](double x) { return x < 1.0 ? 1.0 : 0.0; };
                 p.even_taylor = {1.0};
                 p.support = 1.0;
                 return near(reg_halfline(p, 1.0).value, i_reg(1.0, 1.0), 1e-6);
               }});
  c.push_back({"quad", "constant integrates to zero", [](bool) {
                 RadialProfile p;
                 p.value = [](double) { return 1.0; };
                 p.even_taylor = {1.0};
                 return near(reg_halfline(p, 0.5).value, 0.0, 0.0, 1e-8);
               }});
  c.push_back({"lattice", "self-similarity of the dispersion", [](bool) {
                 SelfSimilarParams p;
                 p.delta = 1.05;
                 p.a = 1.5;
                 return near(wm_dispersion(1.5 * 0.7, p), std::pow(1.5, 1.05) * wm_dispersion(0.7, p), 1e-10);
               }});
  c.push_back({"lattice", "plane-wave eigenvalue", [](bool) {
                 SelfSimilarParams p;
                 p.delta = 1.5;
                 p.a = 2.0;
                 p.m = 2;
                 const TestField u = TestField::plane_wave(1, {0.8, 0.0, 0.0});
                 return near(selfsim_laplacian(u, 0.0, p).value, -wm_dispersion(0.8, p), 1e-10);
               }});
  c.push_back({"lattice", "continuum limit of sin^2", [](bool) {
                 const auto f = [](double t) { return 4.0 * std::sin(0.5 * t) * std::sin(0.5 * t); };
                 return near(fractional_continuum_limit(f, 1.0, 1.0, 1e-10, 2.0 * kPi), kPi, 1e-8);
               }});
  c.push_back({"flcore", "eigenvalues of the three representations", [](bool) {
                 for (auto [rep, a, m] : {std::tuple{Representation::Standard, 1.0, 1},
                                          {Representation::OrderM, 2.5, 2},
                                          {Representation::Regularized, 3.0, 0}}) {
                   const std::string e = near(fl_eigenvalue(rep, 1, a, m, 2.0), -std::pow(2.0, a), 1e-6);
                   if (!e.empty()) return e;
                 }
                 return std::string();
               }});
  c.push_back({"flcore", "representations agree on a Gaussian", [](bool) {
                 const TestField g = TestField::gaussian(1, 1.0);
                 const Point x{0.4, 0.0, 0.0};
                 const double r = fl_regularized(g, x, 1.3).value;
                 std::string e = near(fl_order_m(g, x, 1.3, 2).value, r, 1e-6);
                 if (e.empty()) e = near(fl_standard(g, x, 1.3).value, r, 1e-6);
                 return e;
               }});
  c.push_back({"flcore", "integer branch", [](bool) {
                 const TestField g = TestField::gaussian(1, 1.0);
                 return near(fl_regularized(g, {0.0, 0.0, 0.0}, 2.0).value, -2.0, 0.0, 1e-15);
               }});
  c.push_back({"oracle", "Parseval", [](bool) {
                 const GridField g = sample_gaussian(512, 16.0 / 512, 1.0, -8.0);
                 const double d = parseval_defect(g);
                 return d < 1e-12 ? std::string() : "defect " + std::to_string(d);
               }});
  c.push_back({"oracle", "cosine eigenfunction", [](bool) {
                 GridField g;
                 g.dx = 2.0 * kPi / 64;
                 for (int j = 0; j < 64; ++j) g.samples.push_back(std::cos(3.0 * j * g.dx));
                 const GridField f = dft_fl(g, 1.0);
                 for (int j = 0; j < 64; ++j) {
                   const std::string e = near(f.samples[static_cast<std::size_t>(j)], -3.0 * g.samples[static_cast<std::size_t>(j)], 0.0, 1e-12);
                   if (!e.empty()) return e;
                 }
                 return std::string();
               }});
  c.push_back({"oracle", "Gaussian references", [](bool) {
                 std::string e = near(gaussian_reference(0.0, 1.0, 0.0), -1.0, 0.0);
                 if (e.empty()) e = near(gaussian_reference(2.0, 1.0, 0.0), -2.0, 0.0);
                 if (e.empty()) e = near(gaussian_reference(4.0, 1.0, 0.0), -12.0, 0.0);
                 return e;
               }});
  c.push_back({"potentials", "two-site eigenvalue", [](bool) {
                 const StiffnessMatrix v = StiffnessMatrix::toeplitz({1.0, -1.0});
                 return near(potential_eigenvalue(v, 1, 1.0, 1.0), -kPi, 1e-12);
               }});
  c.push_back({"potentials", "validation", [](bool) {
                 if (!validate_stiffness(StiffnessMatrix::toeplitz({1.0, -1.0})).valid) return std::string("rejected valid");
                 if (validate_stiffness(StiffnessMatrix::toeplitz({1.0, 0.0})).valid) return std::string("accepted identity");
                 if (validate_stiffness(StiffnessMatrix::toeplitz({0.0, 0.0})).valid) return std::string("accepted zero");
                 return std::string();
               }});
  c.push_back({"potentials", "second-order potential matches the order-2m route", [](bool) {
                 const StiffnessMatrix v = StiffnessMatrix::difference_order(2);
                 const double a = 2.5;
                 const double want = -0.5 * norm_constants(2, 1, a).A;
                 return near(potential_eigenvalue(v, 1, a, 1.0), want, 1e-8);
               }});
  return c;
}

}  // namespace

std::vector<std::string> selftest_modules() {
  return {"constants", "quad", "lattice", "flcore", "oracle", "potentials"};
}

std::vector<CheckResult> run_selftest(const SelftestOptions& opt, const std::function<void(const CheckResult&)>& report) {
  if (!opt.filter.empty()) {
    bool known = false;
    for (const auto& m : selftest_modules()) known = known || m == opt.filter;
    if (!known) throw DomainError("unknown selftest filter '" + opt.filter + "'");
  }
  std::vector<CheckResult> out;
  for (const Check& c : checks()) {
    if (!opt.filter.empty() && opt.filter != c.module) continue;
    CheckResult r{c.module, c.name, false, {}};
    try {
      r.detail = c.run(opt.inject_fault);
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    if (report) report(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace fraclap
