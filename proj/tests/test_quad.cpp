#include <doctest.h>

#include <vector>

#include "fraclap/constants.hpp"
#include "fraclap/errors.hpp"
#include "fraclap/quad.hpp"
#include "oracles.hpp"

using namespace fraclap;

TEST_CASE("adaptive Gauss-Kronrod") {
  CHECK(integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-14).value ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  CHECK(integrate_adaptive([](double x) { return std::exp(-x); }, 0.0, INFINITY, 1e-14).value ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(integrate_adaptive([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, INFINITY, 1e-13).value ==
        doctest::Approx(0.5 * oracle::pi).epsilon(1e-12));
  const std::vector<double> pts = {0.0, 1.0, 3.0};
  CHECK(integrate_adaptive([](double x) { return std::abs(x - 1.0); }, pts, 1e-14).value == doctest::Approx(2.5));
  CHECK_THROWS_AS(integrate_adaptive([](double) { return NAN; }, 0.0, 1.0, 1e-10), ConvergenceError);
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::sin(1.0 / x) / x; }, 0.0, 1.0, 1e-14, 0.0, 50),
                  ConvergenceError);
}

TEST_CASE("oscillatory tail") {
  // int_1^inf e^{i xi} xi^{-2} = cos 1 - pi/2 + Si(1) + i (sin 1 - Ci(1))
  const double si1 = 0.94608307036718301494, ci1 = 0.33740392290096813466;
  const auto z = fourier_tail(1.0, 1.0, 2.0);
  CHECK(z.real() == doctest::Approx(std::cos(1.0) - 0.5 * oracle::pi + si1).epsilon(1e-13));
  CHECK(z.imag() == doctest::Approx(std::sin(1.0) - ci1).epsilon(1e-13));
  CHECK_THROWS_AS(fourier_tail(0.0, 1.0, 2.0), DomainError);
}

TEST_CASE("sine power moment scales as q^alpha") {
  for (int m = 1; m <= 3; ++m)
    for (double a : {0.3 * m, 1.1 * m, 1.9 * m})
      for (double q : {0.25, 1.0, 3.0})
        CHECK(oracle::rel(sine_power_moment(m, a, q), std::pow(q, a) * v_integral_closed(m, a)) < 1e-9);
}

TEST_CASE("the two kernel forms agree") {
  for (double xi = -20.0; xi <= 20.0; xi += 0.73)
    for (double a = 0.0; a <= 5.0; a += 0.35)
      for (double eps : {1e-3, 0.05, 0.7}) {
        const double k = reg_kernel(xi, a, eps);
        const double scale = std::pow(std::hypot(xi, eps), -a - 1.0);
        CHECK(std::abs(k - reg_kernel_alt(xi, a, eps)) <= 1e-13 * scale);
      }
  CHECK_THROWS_AS(reg_kernel(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("kernel error is first order in eps away from the origin") {
  for (double a : {0.5, 1.0, 1.5, 2.5, 3.5}) {
    double worst = 0.0;
    for (double eps : {1e-3, 1e-2, 1e-1})
      for (double xi = 10.0 * eps; xi < 1e3 * eps; xi *= 1.3) {
        const double limit = -sin_half_pi(a) * std::pow(xi, -a - 1.0);
        const double c = std::abs(reg_kernel(xi, a, eps) - limit) / ((eps / xi) * std::pow(xi, -a - 1.0));
        worst = std::max(worst, c);
      }
    CAPTURE(a);
    // leading term is (alpha + 1) |cos(pi alpha/2)| eps/xi, plus O((eps/xi)^2)
    CHECK(worst <= a + 1.5);
  }
}

TEST_CASE("I_reg") {
  CHECK(i_reg(1.0, 0.0) == doctest::Approx(0.5 * oracle::pi));
  CHECK(std::abs(i_reg(1.0, 1e-6) - 0.5 * oracle::pi) < 1e-6);
  CHECK(i_reg(2.0, 1.0) == doctest::Approx(0.5));
  CHECK(i_reg(1.0, 3.0) == doctest::Approx(-1.0 / 3.0));
}

TEST_CASE("indicator function under the regularized integral") {
  for (double a : {0.5, 1.0, 1.5}) {
    RadialProfile p;
    p.value = [](double x) { return x < 2.0 ? 1.0 : 0.0; };
    p.even_taylor = {1.0};
    p.support = 2.0;
    p.breakpoints = {2.0};
    const RegResult r = reg_halfline(p, a);
    CAPTURE(a);
    CHECK(std::abs(r.value - i_reg(2.0, a)) < 1e-6 * std::abs(i_reg(2.0, a)));
    // the raw samples approach the limit at least linearly in eps
    REQUIRE(r.samples.size() >= 3);
    for (std::size_t j = 2; j < r.samples.size(); ++j) {
      const double e1 = std::abs(r.samples[j - 1] - r.value);
      const double e2 = std::abs(r.samples[j] - r.value);
      if (e1 > 1e-12) CHECK(e2 <= 0.75 * e1);
    }
  }
}

TEST_CASE("constants integrate to zero") {
  for (double a : {0.5, 1.0, 1.5, 2.5}) {
    RadialProfile p;
    p.value = [](double) { return 1.0; };
    p.even_taylor = {1.0, 0.0};
    CAPTURE(a);
    CHECK(std::abs(reg_halfline(p, a).value) < 1e-8);
  }
}

TEST_CASE("regularized cosine transform of a Gaussian") {
  for (double a : {0.5, 1.3, 2.5, 3.3}) {
    RadialProfile p;
    p.value = [](double x) { return std::exp(-x * x); };
    // (-1)^j / j!, enough terms to be exact in double below the series radius
    for (double c = 1.0; p.even_taylor.size() < 8; c /= -static_cast<double>(p.even_taylor.size())) p.even_taylor.push_back(c);
    p.series_radius = 0.05;
    const double reg = reg_halfline(p, a).value;
    // sphere sum at the origin is 2 e^{-r^2}, U_1 = 2
    const double fl = -2.0 * std::tgamma(a + 1.0) / (2.0 * oracle::pi) * 2.0 * reg;
    CAPTURE(a);
    CHECK(oracle::rel(fl, oracle::gaussian_fl_center(1, a, 1.0)) < 1e-7);
  }
}

TEST_CASE("Richardson tableau is exact on polynomials in eps") {
  std::vector<double> eps, s;
  for (int j = 0; j < 6; ++j) {
    const double e = 0.1 * std::pow(0.5, j);
    eps.push_back(e);
    s.push_back(3.0 - 2.0 * e + 7.0 * e * e);
  }
  CHECK(richardson_halving(eps, s, 2).value == doctest::Approx(3.0).epsilon(1e-13));
  CHECK_THROWS_AS(richardson_halving(std::span(eps).first(2), std::span(s).first(2), 2), DomainError);
}

TEST_CASE("quadrature settings validation") {
  QuadSpec q;
  CHECK_NOTHROW(q.validate());
  q.levels = 1;
  CHECK_THROWS_AS(q.validate(), DomainError);
  q = {};
  q.tol = 0.0;
  CHECK_THROWS_AS(q.validate(), DomainError);
  q = {};
  q.order = 9;
  CHECK_THROWS_AS(q.validate(), DomainError);
}
