#include <doctest.h>

#include "fraclap/errors.hpp"
#include "fraclap/oracle.hpp"
#include "oracles.hpp"

using namespace fraclap;

TEST_CASE("FFT matches the naive DFT") {
  std::vector<double> x(64);
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = std::sin(0.37 * j * j) + 0.1 * j;
  std::vector<std::complex<double>> a(x.begin(), x.end());
  fft(a, false);
  const auto ref = oracle::naive_dft(x);
  for (std::size_t k = 0; k < x.size(); ++k) CHECK(std::abs(a[k] - ref[k]) < 1e-11);
  fft(a, true);
  for (std::size_t j = 0; j < x.size(); ++j) CHECK(std::abs(a[j].real() - x[j]) < 1e-13);
}

TEST_CASE("Parseval on several grids") {
  for (std::size_t N : {16u, 256u, 4096u}) {
    const GridField g = sample_gaussian(N, 20.0 / N, 1.3, -10.0, 0.4);
    CHECK(parseval_defect(g) < 1e-12);
  }
}

TEST_CASE("alpha = 0 is minus the identity") {
  const GridField g = sample_gaussian(128, 0.1, 1.0, -6.4);
  const GridField f = dft_fl(g, 0.0);
  for (std::size_t j = 0; j < g.size(); ++j) CHECK(std::abs(f.samples[j] + g.samples[j]) < 1e-15);
}

TEST_CASE("multipliers compose") {
  // band-limited: a few cosines on the period
  GridField g;
  g.dx = 2.0 * oracle::pi / 128;
  for (int j = 0; j < 128; ++j) g.samples.push_back(std::cos(j * g.dx) + 0.5 * std::cos(5 * j * g.dx) - 0.2 * std::sin(9 * j * g.dx));
  for (auto [a, b] : {std::pair{0.5, 1.0}, {1.3, 2.2}}) {
    const GridField twice = dft_fl(dft_fl(g, a), b);
    const GridField once = dft_fl(g, a + b);
    for (std::size_t j = 0; j < g.size(); ++j) CHECK(std::abs(twice.samples[j] + once.samples[j]) < 1e-14 * std::pow(9.0, a + b));
  }
}

TEST_CASE("large grid reproduces the Gaussian integrals") {
  const GridField g = sample_gaussian(65536, 0.125, 1.0, -4096.0);
  for (double a : {0.5, 1.5, 2.0, 3.0})
    for (double x : {0.0, 0.8}) {
      CAPTURE(a);
      CHECK(std::abs(dft_fl_at(g, a, x + 4096.0) - oracle::gaussian_fl_1d(a, 1.0, x)) < 1e-5);
    }
}

TEST_CASE("interpolation reproduces grid values") {
  const GridField g = sample_gaussian(256, 0.0625, 1.0, -8.0);
  const GridField f = dft_fl(g, 1.2);
  for (std::size_t j : {0u, 17u, 128u}) CHECK(std::abs(dft_fl_at(g, 1.2, j * g.dx) - f.samples[j]) < 1e-12);
}

TEST_CASE("Gaussian references") {
  auto g = [](double x) { return std::exp(-x * x / 0.49); };
  for (double x : {0.0, 0.35, 1.0}) {
    CHECK(gaussian_reference(0.0, 0.7, x) == -g(x));
    CHECK(gaussian_reference(2.0, 0.7, x) == doctest::Approx(oracle::nth_derivative(g, x, 2, 1e-4)).epsilon(1e-6));
    CHECK(gaussian_reference(4.0, 0.7, x) == doctest::Approx(-oracle::nth_derivative(g, x, 4, 5e-3)).epsilon(1e-3));
  }
  CHECK_THROWS_AS(gaussian_reference(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("grid validation") {
  GridField g;
  g.samples.assign(100, 0.0);
  CHECK_THROWS_AS(g.validate(), DomainError);
  g.samples.assign(8, 0.0);
  CHECK_THROWS_AS(g.validate(), DomainError);
  g.samples.assign(16, 0.0);
  g.dx = 0.0;
  CHECK_THROWS_AS(g.validate(), DomainError);
  CHECK(mode_wave_number(3, 16, 2.0 * oracle::pi) == 3.0);
  CHECK(mode_wave_number(15, 16, 2.0 * oracle::pi) == -1.0);
  CHECK(mode_wave_number(8, 16, 2.0 * oracle::pi) == 8.0);
}
