#include <doctest.h>

#include "fraclap/constants.hpp"
#include "fraclap/errors.hpp"
#include "fraclap/flcore.hpp"
#include "oracles.hpp"

using namespace fraclap;

TEST_CASE("Hermite polynomials give the Gaussian derivatives") {
  auto g = [](double x) { return std::exp(-x * x); };
  for (int k = 0; k <= 4; ++k)
    for (double x : {-1.1, 0.0, 0.4, 1.7}) {
      const double want = oracle::nth_derivative(g, x, k, 1e-3);
      CHECK(std::abs((k % 2 ? -1.0 : 1.0) * hermite(k, x) * g(x) - want) < 5e-4);
    }
  CHECK(hermite(5, 0.5) == doctest::Approx(32 * std::pow(0.5, 5) - 160 * std::pow(0.5, 3) + 120 * 0.5));
}

TEST_CASE("Gaussian Laplacian powers") {
  const double s = 0.8;
  auto g1 = [s](double x) { return std::exp(-x * x / (s * s)); };
  for (double y : {0.0, 0.3, 1.2}) {
    CHECK(gaussian_laplacian_power(1, 1, s, {y, 0, 0}) == doctest::Approx(oracle::nth_derivative(g1, y, 2, 1e-4)).epsilon(1e-6));
    CHECK(gaussian_laplacian_power(1, 2, s, {y, 0, 0}) == doctest::Approx(oracle::nth_derivative(g1, y, 4, 2e-3)).epsilon(1e-3));
  }
  // Delta e^{-r^2} = (4 r^2 - 2n) e^{-r^2}
  const Point y{0.3, -0.2, 0.5};
  const double r2 = 0.09 + 0.04 + 0.25;
  CHECK(gaussian_laplacian_power(3, 1, 1.0, y) == doctest::Approx((4 * r2 - 6) * std::exp(-r2)));
  CHECK(gaussian_laplacian_power(2, 1, 1.0, y) == doctest::Approx((4 * 0.13 - 4) * std::exp(-0.13)));
}

TEST_CASE("angular rules carry the sphere area") {
  const double area[] = {2.0, 2.0 * oracle::pi, 4.0 * oracle::pi};
  for (int n = 1; n <= 3; ++n) {
    const AngularRule r = angular_rule(n, 32);
    double w = 0.0;
    for (double v : r.weights) w += v;
    CHECK(w == doctest::Approx(area[n - 1]));
    for (const Point& d : r.dirs) CHECK(d[0] * d[0] + d[1] * d[1] + d[2] * d[2] == doctest::Approx(1.0));
  }
}

TEST_CASE("sphere integrals") {
  for (int n = 1; n <= 3; ++n) {
    const TestField g = TestField::gaussian(n, 0.9, {0.2, -0.1, 0.3});
    const Point x{0.5, 0.4, -0.2};
    for (double r : {0.0, 0.3, 1.0, 2.5}) {
      CAPTURE(n);
      CAPTURE(r);
      CHECK(g.sphere_integral(x, r) == doctest::Approx(g.sphere_integral_quadrature(x, r, 96)).epsilon(1e-10));
    }
    // leading Taylor coefficient is the area times u(x)
    CHECK(g.sphere_taylor(x, 3)[0] == doctest::Approx(unit_sphere_moment(n, 0.0) * g(x)));
  }
  // 3D plane wave: 4 pi sin(k r)/(k r)
  const TestField w = TestField::plane_wave(3, {0.0, 1.5, 0.0});
  CHECK(w.sphere_integral({0, 0, 0}, 2.0) == doctest::Approx(4.0 * oracle::pi * std::sin(3.0) / 3.0));
}

TEST_CASE("eigenvalue contract") {
  for (double k : {0.5, 1.0, 2.0}) {
    for (int n = 1; n <= 3; ++n) {
      for (double a : {0.5, 1.0, 1.5}) CHECK(oracle::rel(-fl_eigenvalue(Representation::Standard, n, a, 1, k), std::pow(k, a)) < 1e-6);
      for (auto [m, a] : {std::pair{2, 2.5}, {3, 4.5}, {2, 0.7}})
        CHECK(oracle::rel(-fl_eigenvalue(Representation::OrderM, n, a, m, k), std::pow(k, a)) < 1e-6);
      for (double a : {0.5, 1.0, 1.5, 2.5, 3.0, 3.5})
        CHECK(oracle::rel(-fl_eigenvalue(Representation::Regularized, n, a, 0, k), std::pow(k, a)) < 1e-6);
    }
  }
}

TEST_CASE("eigenvalues scale as k^alpha") {
  for (auto rep : {Representation::Standard, Representation::OrderM, Representation::Regularized})
    for (double lam : {0.3, 2.5}) {
      const double a = 1.3;
      const double e1 = fl_eigenvalue(rep, 2, a, 2, 0.8);
      CHECK(oracle::rel(fl_eigenvalue(rep, 2, a, 2, lam * 0.8), std::pow(lam, a) * e1) < 1e-8);
    }
}

TEST_CASE("Gaussian against the Fourier-side integral") {
  const TestField g = TestField::gaussian(1, 1.0);
  for (double a : {0.5, 1.0, 1.5, 2.5, 3.0})
    for (double x : {0.0, 0.5, 1.3, 2.4}) {
      CAPTURE(a);
      CAPTURE(x);
      CHECK(std::abs(fl_regularized(g, {x, 0, 0}, a).value - oracle::gaussian_fl_1d(a, 1.0, x)) < 1e-8);
    }
  for (int n = 1; n <= 3; ++n)
    for (double a : {0.6, 1.4, 2.7}) {
      const TestField gn = TestField::gaussian(n, 1.3);
      CAPTURE(n);
      CAPTURE(a);
      CHECK(oracle::rel(fl_regularized(gn, {0, 0, 0}, a).value, oracle::gaussian_fl_center(n, a, 1.3)) < 1e-7);
    }
}

TEST_CASE("representations agree for fractional alpha in (0, 2)") {
  for (int n = 1; n <= 2; ++n) {
    const TestField g = TestField::gaussian(n, 1.0);
    for (double a : {0.3, 0.9, 1.6})
      for (double x : {0.0, 0.7, 1.9}) {
        const Point p{x, 0.2 * x, 0.0};
        const double r = fl_regularized(g, p, a).value;
        CAPTURE(n);
        CAPTURE(a);
        CAPTURE(x);
        CHECK(oracle::rel(fl_standard(g, p, a).value, r) < 1e-6);
        for (int m = 1; m <= 3; ++m) CHECK(oracle::rel(fl_order_m(g, p, a, m).value, r) < 1e-6);
      }
  }
}

TEST_CASE("integer exponents collapse to local operators") {
  const TestField g = TestField::gaussian(1, 1.0);
  for (double x : {0.0, 0.6, 1.5}) {
    const Point p{x, 0, 0};
    const FLResult r0 = fl_regularized(g, p, 0.0);
    CHECK(r0.integer_branch);
    CHECK(r0.value == -g(p));
    CHECK(fl_regularized(g, p, 2.0).value == gaussian_laplacian_power(1, 1, 1.0, p));
    CHECK(fl_regularized(g, p, 4.0).value == -gaussian_laplacian_power(1, 2, 1.0, p));
  }
}

TEST_CASE("continuity across alpha = 2") {
  const TestField g = TestField::gaussian(1, 1.0);
  for (double x : {0.0, 0.5, 1.0}) {
    const Point p{x, 0, 0};
    const double at = fl_regularized(g, p, 2.0).value;
    const FLResult lo = fl_regularized(g, p, 2.0 - 1e-3);
    const FLResult hi = fl_regularized(g, p, 2.0 + 1e-3);
    CHECK(lo.ill_conditioned);
    CHECK(hi.ill_conditioned);
    CHECK(std::min(lo.value, hi.value) <= at);
    CHECK(std::max(lo.value, hi.value) >= at);
    CHECK(oracle::rel(lo.value, at) < 1e-2);
    CHECK(oracle::rel(hi.value, at) < 1e-2);
  }
}

TEST_CASE("radial Gaussians give radial results") {
  for (int n = 2; n <= 3; ++n) {
    const TestField g = TestField::gaussian(n, 1.0, {0.1, 0.2, 0.0});
    const double r = 0.9;
    const double v1 = fl_regularized(g, {0.1 + r, 0.2, 0.0}, 1.2).value;
    const double v2 = fl_regularized(g, {0.1 - 0.6 * r, 0.2 + 0.8 * r, 0.0}, 1.2).value;
    CHECK(oracle::rel(v1, v2) < 1e-9);
  }
}

TEST_CASE("callable fields") {
  const TestField c = TestField::callable(
      1, [](const Point& x) { return std::exp(-x[0] * x[0]); }, 1.0, Decay{},
      [](int p, const Point& x) { return gaussian_laplacian_power(1, p, 1.0, x); });
  const TestField g = TestField::gaussian(1, 1.0);
  for (double a : {0.7, 2.3}) CHECK(oracle::rel(fl_regularized(c, {0.4, 0, 0}, a).value, fl_regularized(g, {0.4, 0, 0}, a).value) < 1e-7);
  const TestField bare = TestField::callable(1, [](const Point& x) { return std::exp(-x[0] * x[0]); }, 1.0, Decay{});
  CHECK(oracle::rel(fl_standard(bare, {0.4, 0, 0}, 0.7).value, fl_standard(g, {0.4, 0, 0}, 0.7).value) < 1e-7);
  CHECK_THROWS_AS(fl_regularized(bare, {0.4, 0, 0}, 3.3), DomainError);
}

TEST_CASE("domain windows") {
  const TestField g = TestField::gaussian(1, 1.0);
  CHECK_THROWS_AS(fl_standard(g, {0, 0, 0}, 2.5), DomainError);
  CHECK_THROWS_AS(fl_standard(g, {0, 0, 0}, 0.0), DomainError);
  CHECK_THROWS_AS(fl_order_m(g, {0, 0, 0}, 4.0, 2), DomainError);
  CHECK_THROWS_AS(fl_regularized(g, {0, 0, 0}, -0.5), DomainError);
  CHECK(parse_representation("order-m") == Representation::OrderM);
  CHECK(std::string(representation_name(Representation::Regularized)) == "regularized");
  CHECK_THROWS_AS(parse_representation("spectral"), DomainError);
}

TEST_CASE("physical normalization carries h^alpha / (2 zeta) A") {
  FLOptions opt;
  opt.norm = Normalization::Physical;
  opt.h = 0.5;
  opt.zeta = std::log(1.5);
  for (auto [m, a] : {std::pair{1, 1.2}, {2, 2.5}}) {
    const double want = -std::pow(opt.h, a) / (2.0 * opt.zeta) * norm_constants(m, 1, a).A * std::pow(1.3, a);
    CHECK(oracle::rel(fl_eigenvalue(Representation::OrderM, 1, a, m, 1.3, opt), want) < 1e-8);
  }
}
