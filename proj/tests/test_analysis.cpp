#include <stdexcept>

#include "doctest.h"

#include <cmath>
#include <random>

#include "dtc/analysis.hpp"

using namespace dtc;

TEST_CASE("power-law fit is exact on exact data") {
  std::vector<double> xs, ys;
  for (int i = 1; i <= 10; ++i) {
    xs.push_back(i);
    ys.push_back(double(i) * double(i));
  }
  const FitResult fit = fit_power_law(xs, ys);
  CHECK(fit.exponent == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(fit.exponent_stderr < 1e-12);
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fit.prefactor == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.n_points == 10);
  CHECK(fit.window_min == 1.0);
  CHECK(fit.window_max == 10.0);
}

TEST_CASE("power-law fit tolerates multiplicative noise") {
  std::mt19937_64 rng(42);
  std::vector<double> xs, ys;
  for (int i = 1; i <= 40; ++i) {
    const double u = double(rng() >> 11) * 0x1.0p-53;
    xs.push_back(i);
    ys.push_back(3.0 * std::pow(double(i), 1.5) * (1.0 + 0.01 * (2.0 * u - 1.0)));
  }
  const FitResult fit = fit_power_law(xs, ys);
  CHECK(std::abs(fit.exponent - 1.5) < 0.05);
  CHECK(std::abs(fit.prefactor - 3.0) < 0.15);
  CHECK(fit.r_squared > 0.999);
}

TEST_CASE("power-law fit preconditions") {
  CHECK_THROWS_AS(fit_power_law({1, 2}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(fit_power_law({1, 2, 3}, {1, -2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(fit_power_law({0, 2, 3}, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(fit_power_law({2, 2, 2}, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(fit_power_law({1, 2, 3}, {1, 2}), std::invalid_argument);
}

TEST_CASE("affine power fit recovers scale, exponent and offset") {
  std::vector<double> xs, ys;
  for (int i = 1; i <= 12; ++i) {
    xs.push_back(0.25 * i);
    ys.push_back(2.0 * std::pow(0.25 * i, 1.3) + 5.0);
  }
  const AffinePowerFit fit = fit_affine_power(xs, ys);
  CHECK(std::abs(fit.exponent - 1.3) < 2e-3);
  CHECK(std::abs(fit.scale - 2.0) < 1e-2);
  CHECK(std::abs(fit.offset - 5.0) < 1e-2);
  CHECK(fit.sse < 1e-4);
  CHECK(fit.n_points == 12);
}

TEST_CASE("affine power fit with the offset pinned to zero") {
  std::vector<double> xs, ys;
  for (int i = 1; i <= 8; ++i) {
    xs.push_back(i);
    ys.push_back(1.7 * std::pow(double(i), 0.8));
  }
  const AffinePowerFit fit = fit_affine_power(xs, ys, /*pin_offset=*/true);
  CHECK(fit.offset == 0.0);
  CHECK(std::abs(fit.exponent - 0.8) < 2e-3);
  CHECK(std::abs(fit.scale - 1.7) < 1e-2);
}

TEST_CASE("affine power fit refuses to report a boundary optimum") {
  std::vector<double> xs, ys;
  for (int i = 1; i <= 8; ++i) {
    xs.push_back(i);
    ys.push_back(std::pow(double(i), 5.0));  // true exponent beyond the search grid
  }
  CHECK_THROWS_AS(fit_affine_power(xs, ys), std::runtime_error);
  CHECK_THROWS_AS(fit_affine_power({1, 2, 3}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("plateau detector walks out to the last compliant point") {
  const std::vector<double> omegas = {0.0, 0.01, 0.02, 0.03, 0.04};
  const std::vector<double> ys = {1.0, 1.01, 0.995, 1.3, 2.0};
  const TransitionEstimate est = detect_omega_c(omegas, ys, 0.02);
  CHECK(est.omega_c == 0.02);
  CHECK(est.grid_resolution == doctest::Approx(0.01));
  CHECK(!est.first_point_violates);
  CHECK(est.tau == 0.02);
}

TEST_CASE("plateau detector flags an immediate violation") {
  const TransitionEstimate est = detect_omega_c({0.0, 0.01, 0.02}, {1.0, 2.0, 3.0}, 0.02);
  CHECK(est.omega_c == 0.0);
  CHECK(est.first_point_violates);
}

TEST_CASE("plateau spanning the whole grid reports the last point") {
  const TransitionEstimate est = detect_omega_c({0.0, 0.1, 0.2}, {1.0, 1.0, 1.0}, 0.02);
  CHECK(est.omega_c == 0.2);
  CHECK(!est.first_point_violates);
  CHECK(est.grid_resolution == doctest::Approx(0.1));
}

TEST_CASE("detected plateau grows monotonically with the tolerance") {
  std::mt19937_64 rng(7);
  std::vector<double> omegas, ys;
  for (int i = 0; i < 40; ++i) {
    const double u = double(rng() >> 11) * 0x1.0p-53;
    omegas.push_back(0.005 * i);
    ys.push_back(1.0 + 0.002 * i * i * u);
  }
  double prev = -1.0;
  for (double tau : {0.005, 0.01, 0.02, 0.05, 0.1, 0.5}) {
    const double oc = detect_omega_c(omegas, ys, tau).omega_c;
    CHECK(oc >= prev);
    prev = oc;
  }
}

TEST_CASE("plateau detector preconditions") {
  CHECK_THROWS_AS(detect_omega_c({0.0}, {1.0}, 0.02), std::invalid_argument);
  CHECK_THROWS_AS(detect_omega_c({0.0, 0.0}, {1.0, 1.0}, 0.02), std::invalid_argument);
  CHECK_THROWS_AS(detect_omega_c({0.0, 0.1}, {1.0, 1.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(detect_omega_c({0.0, 0.1}, {1.0}, 0.02), std::invalid_argument);
}

TEST_CASE("windowed time fit ignores points outside the window") {
  std::vector<double> ns, ys;
  for (int n = 1; n <= 50; ++n) {
    ns.push_back(n);
    // clean square law inside [4, 40], garbage outside
    ys.push_back((n >= 4 && n <= 40) ? double(n) * double(n) : 1e6);
  }
  const FitResult fit = fit_time_scaling(ns, ys, 4.0, 40.0);
  CHECK(fit.exponent == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.window_min == 4.0);
  CHECK(fit.window_max == 40.0);
  CHECK(fit.n_points == 37);
  CHECK_THROWS_AS(fit_time_scaling(ns, ys, 100.0, 200.0), std::invalid_argument);
  CHECK_THROWS_AS(fit_time_scaling(ns, ys, 40.0, 4.0), std::invalid_argument);
}
