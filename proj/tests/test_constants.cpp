#include <doctest.h>

#include <random>

#include "fraclap/constants.hpp"
#include "fraclap/errors.hpp"
#include "oracles.hpp"

using namespace fraclap;

TEST_CASE("gamma against the C library") {
  for (double x = -4.75; x < 20.0; x += 0.37) CHECK(oracle::rel(fraclap::gamma(x), std::tgamma(x)) < 1e-13);
  double fact = 1.0;
  for (int k = 1; k <= 21; ++k) {
    CHECK(fraclap::gamma(k) == fact);
    fact *= k;
  }
  CHECK_THROWS_AS(fraclap::gamma(0.0), DomainError);
  CHECK_THROWS_AS(fraclap::gamma(-3.0), DomainError);
}

TEST_CASE("sin_half_pi is exactly zero at even integers") {
  for (int p = 0; p < 10; ++p) CHECK(sin_half_pi(2.0 * p) == 0.0);
  CHECK(sin_half_pi(1.0) == doctest::Approx(1.0));
  CHECK(sin_half_pi(3.0) == doctest::Approx(-1.0));
  CHECK(is_even_integer(4.0, 0.0));
  CHECK(is_even_integer(0.0, 0.0));
  CHECK_FALSE(is_even_integer(3.0));
  CHECK_FALSE(is_even_integer(2.0 + 1e-6));
}

TEST_CASE("binomials") {
  CHECK(binomial(40, 20) == 137846528820.0);
  CHECK(binomial(6, 7) == 0.0);
  CHECK(binomial(10, 3) == 120.0);
}

TEST_CASE("difference stencil reproduces (-1)^{m+1} (2m)! on x^{2m}") {
  for (int m = 1; m <= 8; ++m) {
    const DiffWeights w = diff_weights(m);
    double sum = 0.0, fact = 1.0;
    for (int p = -m; p <= m; ++p) sum += w.weight(p) * std::pow(p, 2 * m);
    for (int j = 2; j <= 2 * m; ++j) fact *= j;
    CHECK(sum == doctest::Approx((m % 2 ? 1.0 : -1.0) * fact).epsilon(1e-14));
    double total = 0.0;
    for (double v : w.weights) total += v;
    CHECK(total == 0.0);
    for (int j = 1; j < m; ++j) CHECK(w.even_moment(j) == 0.0);
  }
}

TEST_CASE("central differences vanish at even integers below 2m") {
  for (int m = 2; m <= 10; ++m)
    for (int q = 1; q < m; ++q) CHECK(central_diff_power(m, 2.0 * q) == 0.0);
  for (int m = 1; m <= 5; ++m)
    for (double a = 0.15; a < 2.0 * m; a += 0.4)
      if (!is_even_integer(a, 1e-9)) CHECK(central_diff_power(m, a) != 0.0);
}

TEST_CASE("central differences match the m = 1 closed form") {
  // (D - D^-1)^2 = D^2 - 2 + D^-2 on |lambda|^alpha at 0
  for (double a : {0.3, 1.0, 1.7}) CHECK(central_diff_power(1, a) == doctest::Approx(2.0 * std::pow(2.0, a)));
}

TEST_CASE("unit sphere moment") {
  for (double a : {0.0, 0.5, 1.0, 2.2, 3.7}) {
    CHECK(oracle::rel(unit_sphere_moment(3, a), 4.0 * oracle::pi / (a + 1.0)) < 1e-13);
    CHECK(unit_sphere_moment(1, a) == doctest::Approx(2.0));
    for (int n = 1; n <= 3; ++n) CHECK(oracle::rel(unit_sphere_moment(n, a), unit_sphere_moment_special(n, a)) < 1e-13);
  }
  SUBCASE("n = 2 against the polar integral") {
    for (double a : {0.5, 1.0, 1.5, 3.0}) {
      // 4 int_0^{pi/2} cos^a, substituted phi = pi/2 - t^2 to smooth the endpoint
      auto f = [a](double t) { return 2.0 * t * std::pow(std::sin(t * t), a); };
      const double q = 4.0 * oracle::simpson(f, 0.0, std::sqrt(0.5 * oracle::pi), 20000);
      CHECK(oracle::rel(unit_sphere_moment(2, a), q) < 1e-10);
    }
  }
  SUBCASE("n = 3 against the polar integral") {
    for (double a : {0.5, 1.0, 2.5}) {
      // 4 pi int_0^1 c^a dc with c = t^4
      auto f = [a](double t) { return 4.0 * t * t * t * std::pow(t, 4.0 * a); };
      const double q = 4.0 * oracle::pi * oracle::simpson(f, 0.0, 1.0, 20000);
      CHECK(oracle::rel(unit_sphere_moment(3, a), q) < 1e-10);
    }
  }
}

TEST_CASE("V integral") {
  CHECK(oracle::rel(v_integral(1, 1.0), oracle::pi) < 1e-13);
  for (double a : {0.2, 0.9, 1.3, 1.95}) CHECK(oracle::rel(v_integral(1, a), oracle::v_order_one(a)) < 1e-12);
  CHECK(oracle::rel(v_integral_quadrature(1, 1.0), oracle::pi) < 1e-8);
  // int (2 - 2 cos x)^2 / x^3 = 4 ln 2 (Frullani after two integrations by parts)
  CHECK(oracle::rel(v_integral(2, 2.0), 4.0 * std::log(2.0)) < 1e-10);

  SUBCASE("closed form vs quadrature on random fractional (m, alpha)") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> md(1, 5);
    std::uniform_real_distribution<double> u(0.02, 0.98);
    for (int i = 0; i < 20; ++i) {
      const int m = md(rng);
      double a = 2.0 * m * u(rng);
      if (is_even_integer(a, 1e-3)) a += 0.01;
      CAPTURE(m);
      CAPTURE(a);
      CHECK(oracle::rel(v_integral_closed(m, a), v_integral_quadrature(m, a)) < 1e-8);
    }
  }
  CHECK_THROWS_AS(v_integral(1, 2.0), DomainError);
  CHECK_THROWS_AS(v_integral(2, 0.0), DomainError);
  CHECK_THROWS_AS(v_integral_closed(2, 2.0), DomainError);
}

TEST_CASE("standard constant") {
  CHECK(std::abs(c_standard(1, 1.0).value - 1.0 / oracle::pi) < 1e-15);
  for (int n = 1; n <= 3; ++n)
    for (double a = 0.05; a < 2.0; a += 0.05) {
      CHECK(oracle::rel(c_standard(n, a).value, oracle::c_levy(n, a)) < 1e-12);
      CHECK(oracle::rel(c_standard_levy(n, a), oracle::c_levy(n, a)) < 1e-12);
    }
  for (double a : {0.0, 2.0, 4.0, 6.0}) {
    const StandardConstant c = c_standard(2, a);
    CHECK(c.value == 0.0);
    CHECK(c.distributional);
  }
  // sign alternates between the fractional windows
  CHECK(c_standard(1, 3.0).value < 0.0);
  CHECK(c_standard(1, 5.0).value > 0.0);
}

TEST_CASE("A = U V is positive on the fractional grid") {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int i = 1; i < 20 * m; ++i) {
        const double a = 0.1 * i;
        if (is_even_integer(a, 1e-9)) continue;
        const NormConstants k = norm_constants(m, n, a);
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(a);
        CHECK(k.A > 0.0);
        CHECK(oracle::rel(k.A, k.U * k.V) < 1e-10);
        CHECK(k.c_general * k.A == doctest::Approx(1.0));
      }
  // at m = 1 the two normalizations coincide: C_general = C_standard / 2
  for (double a : {0.4, 1.2, 1.8}) CHECK(oracle::rel(norm_constants(1, 2, a).c_general, 0.5 * c_standard(2, a).value) < 1e-12);
  CHECK_THROWS_AS(norm_constants(1, 1, 3.0), DomainError);
  CHECK_THROWS_AS(norm_constants(1, 4, 1.0), DomainError);
}

TEST_CASE("A_delta") {
  CHECK(oracle::rel(a_delta(1.0, 1.0, 1.0), oracle::pi) < 1e-14);
  CHECK(oracle::rel(a_delta(0.45, 2.0, std::log(1.5)), std::pow(2.0, 0.45) / std::log(1.5) * oracle::v_order_one(0.45)) < 1e-12);
  CHECK_THROWS_AS(a_delta(2.0, 1.0, 1.0), DomainError);
}
