#include <stdexcept>

#include "doctest.h"

#include <cmath>
#include <numbers>

#include "dtc/observables.hpp"
#include "dtc/oracles.hpp"

using namespace dtc;

TEST_CASE("perfect drive: fidelity alternates 1, 0 exactly") {
  const DriveParams drive = make_drive(make_chain(6, 0.5), 0.0, 0.015);
  const ObservableSeries fid = fidelity_series(neel_state(6), drive, 12);
  REQUIRE(fid.ys.size() == 12);
  for (int n = 0; n < 12; ++n) {
    if (n % 2 == 0)
      CHECK(std::abs(fid.ys[n] - 1.0) < 1e-12);
    else
      CHECK(fid.ys[n] < 1e-12);
  }
  CHECK(fid.xs.front() == 0.0);
  CHECK(fid.xs.back() == 11.0);
}

TEST_CASE("fidelity is the squared return amplitude") {
  const DriveParams drive = make_drive(make_chain(5, 1.0), 0.04, 0.01);
  const config_t x = 0b10110;
  const ObservableSeries fid = fidelity_series(x, drive, 9);
  for (int n = 0; n < 9; ++n) {
    const state_t psi = brute_force_evolve(x, drive, n);
    CHECK(fid.ys[n] == doctest::Approx(std::norm(psi[x])).epsilon(1e-10));
  }
}

TEST_CASE("state-averaged fidelity uses the plain magnitude, not its square") {
  const DriveParams drive = make_drive(make_chain(4, 0.7), 0.05, 0.0);
  const ObservableSeries avg = averaged_fidelity_series(drive, 6);
  CHECK(avg.metadata.at("average_mode") == "exact");
  for (int n = 0; n < 6; ++n) {
    double acc = 0.0;
    for (config_t x = 0; x < 16; ++x) {
      const state_t psi = brute_force_evolve(x, drive, n);
      acc += std::abs(psi[x]);
    }
    CHECK(avg.ys[n] == doctest::Approx(acc / 16.0).epsilon(1e-10));
  }
}

TEST_CASE("sampled average stays within three sigma of the exact average") {
  const DriveParams drive = make_drive(make_chain(6, 0.5), 0.03, 0.01);
  const int n_count = 10, samples = 2000;
  const ObservableSeries exact = averaged_fidelity_series(drive, n_count);
  const ObservableSeries mc =
      averaged_fidelity_series(drive, n_count, /*max_exact_length=*/4, samples, 2024);
  CHECK(mc.metadata.at("average_mode") == "sampled");
  for (int n = 1; n < n_count; ++n) {
    // magnitudes live in [0,1]: bound the sample deviation by the worst-case variance
    const double sigma = 0.5 / std::sqrt(double(samples));
    CHECK(std::abs(mc.ys[n] - exact.ys[n]) < 3.0 * sigma + 0.02);
  }
}

TEST_CASE("spectrum of a pure alternation peaks at pi with unit magnitude") {
  ObservableSeries series;
  for (int n = 0; n < 64; ++n) {
    series.xs.push_back(n);
    series.ys.push_back(n % 2 == 0 ? 1.0 : 0.0);
  }
  const SpectrumResult spec = series_spectrum(series);
  CHECK(spec.peak_frequency == doctest::Approx(std::numbers::pi).epsilon(1e-14));
  CHECK(spec.peak_magnitude == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(spec.frequencies.front() == 0.0);
  CHECK(spec.frequencies.back() < 2.0 * std::numbers::pi);
}

TEST_CASE("spectrum of a constant series reports no peak") {
  ObservableSeries series;
  for (int n = 0; n < 32; ++n) {
    series.xs.push_back(n);
    series.ys.push_back(0.75);
  }
  const SpectrumResult spec = series_spectrum(series);
  CHECK(spec.peak_magnitude == 0.0);
  CHECK(spec.peak_frequency == 0.0);
}

TEST_CASE("spectrum recovers the amplitude of a pure tone") {
  ObservableSeries series;
  const int N = 64, k0 = 8;
  for (int n = 0; n < N; ++n) {
    series.xs.push_back(n);
    series.ys.push_back(0.3 * std::cos(2.0 * std::numbers::pi * k0 * n / N) + 2.0);
  }
  const SpectrumResult spec = series_spectrum(series);
  // the mirror bin N - k0 carries the same magnitude; either may win the argmax
  const double folded = std::min(spec.peak_frequency, 2.0 * std::numbers::pi - spec.peak_frequency);
  CHECK(folded == doctest::Approx(2.0 * std::numbers::pi * k0 / N).epsilon(1e-14));
  CHECK(spec.peak_magnitude == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(spec.magnitudes[k0] == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("stored energy at the ideal drive") {
  const DriveParams drive = make_drive(make_chain(6, 1.0), 0.0, 0.0, KickMask::EvenSites);
  // even periods return to the initial configuration, odd ones to the charged state
  CHECK(std::abs(stored_energy(neel_state(6), drive, 2)) < 1e-12);
  CHECK(stored_energy(neel_state(6), drive, 1) ==
        doctest::Approx(2.0 * coupling_sum(drive.spec)).epsilon(1e-13));
}

TEST_CASE("QFI vanishes for the perfect drive from a basis state") {
  const DriveParams drive = make_drive(make_chain(4, 0.5), 0.0, 0.01);
  CHECK(qfi(neel_state(4), drive, 8) < 1e-12);
}

TEST_CASE("QFI series endpoint equals the direct evaluation") {
  const DriveParams drive = make_drive(make_chain(5, 1.5), 0.02, 0.003);
  const std::vector<double> series = qfi_series(0b00101, drive, 7);
  REQUIRE(series.size() == 7);
  CHECK(series.back() == doctest::Approx(qfi(0b00101, drive, 7)).epsilon(1e-12));
  CHECK(series.front() == doctest::Approx(qfi(0b00101, drive, 1)).epsilon(1e-12));
}

TEST_CASE("sweeps agree with the scalar entry points") {
  const DriveParams base = make_drive(make_chain(4, 1.0), 0.01, 0.0, KickMask::EvenSites);
  const std::vector<double> omegas = {0.0, 0.01};
  const std::vector<int> ns = {1, 3};
  const std::vector<int> ls = {4, 6};

  const auto de_points = battery_sweep(base, omegas, ns, ls);
  REQUIRE(de_points.size() == 8);
  for (const SweepPoint& p : de_points) {
    DriveParams drive = base;
    drive.spec = make_chain(p.length, base.spec.alpha);
    drive.omega = p.omega;
    CHECK(p.value ==
          doctest::Approx(stored_energy(neel_state(p.length), drive, p.periods)).epsilon(1e-12));
  }

  const DriveParams qbase = make_drive(make_chain(4, 0.5), 0.02, 0.0, KickMask::AllSites);
  const auto fq_points = qfi_sweep(qbase, omegas, ns, ls);
  for (const SweepPoint& p : fq_points) {
    DriveParams drive = qbase;
    drive.spec = make_chain(p.length, qbase.spec.alpha);
    drive.omega = p.omega;
    CHECK(p.value ==
          doctest::Approx(qfi(neel_state(p.length), drive, p.periods)).epsilon(1e-12));
  }
}

TEST_CASE("observable preconditions") {
  const DriveParams drive = make_drive(make_chain(4, 0.5), 0.0, 0.0);
  CHECK_THROWS_AS(fidelity_series(0, drive, 1), std::invalid_argument);
  CHECK_THROWS_AS(qfi_series(0, drive, 0), std::invalid_argument);
  ObservableSeries tiny;
  tiny.xs = {0, 1, 2};
  tiny.ys = {1, 0, 1};
  CHECK_THROWS_AS(series_spectrum(tiny), std::invalid_argument);
  CHECK_THROWS_AS(battery_sweep(drive, {}, {1}, {4}), std::invalid_argument);
}
