#include <stdexcept>

#include "doctest.h"

#include <cmath>
#include <numbers>

#include "dtc/quasienergy.hpp"

using namespace dtc;

TEST_CASE("eigenphases are sorted, complete, and on the principal branch") {
  const DriveParams drive = make_drive(make_chain(5, 0.8), 0.05, 0.01);
  const EigenphaseSet set = eigenphases(drive);
  REQUIRE(set.phases.size() == 32);
  for (std::size_t i = 1; i < set.phases.size(); ++i) CHECK(set.phases[i] >= set.phases[i - 1]);
  for (double p : set.phases) {
    CHECK(p > -std::numbers::pi);
    CHECK(p <= std::numbers::pi);
  }
}

TEST_CASE("eigenvalue sum reproduces the operator trace") {
  const DriveParams drive = make_drive(make_chain(4, 1.2), 0.07, 0.004);
  const EigenphaseSet set = eigenphases(drive);
  cd sum(0.0, 0.0);
  for (double p : set.phases) sum += std::polar(1.0, p);
  const auto columns = dense_floquet_matrix(drive);
  cd trace(0.0, 0.0);
  for (std::size_t x = 0; x < columns.size(); ++x) trace += columns[x][x];
  CHECK(std::abs(sum - trace) < 1e-10);
}

TEST_CASE("perfect drive: every quasienergy has a partner exactly pi away") {
  for (int length : {4, 6}) {
    const DriveParams drive = make_drive(make_chain(length, 0.5), 0.0, 0.0);
    const PairingReport report = pi_pairing(eigenphases(drive));
    CHECK(report.unpaired == 0);
    CHECK(int(report.pairs.size()) == (1 << length) / 2);
    CHECK(report.max_deviation < 1e-8);
  }
}

TEST_CASE("imperfect drive: deviation is reported, not asserted away") {
  const DriveParams drive = make_drive(make_chain(4, 0.5), 0.05, 0.0);
  const PairingReport report = pi_pairing(eigenphases(drive));
  CHECK(report.max_deviation > 0.0);
  CHECK(report.max_deviation < 0.5);  // still inside the matching window
}

TEST_CASE("greedy pairing on synthetic phase sets") {
  constexpr double pi = std::numbers::pi;
  {
    EigenphaseSet set{{0.0, pi}};
    const PairingReport r = pi_pairing(set);
    REQUIRE(r.pairs.size() == 1);
    CHECK(r.pairs[0].deviation == 0.0);
    CHECK(r.unpaired == 0);
  }
  {
    EigenphaseSet set{{0.0, pi - 0.1}};
    const PairingReport r = pi_pairing(set);
    REQUIRE(r.pairs.size() == 1);
    CHECK(r.pairs[0].deviation == doctest::Approx(0.1).epsilon(1e-12));
    // a tighter window refuses the same pair
    CHECK(pi_pairing(set, 0.05).unpaired == 2);
  }
  {
    EigenphaseSet set{{0.0, 0.1, pi}};
    const PairingReport r = pi_pairing(set);
    REQUIRE(r.pairs.size() == 1);
    CHECK(r.pairs[0].i == 0);
    CHECK(r.pairs[0].j == 2);
    CHECK(r.unpaired == 1);
  }
  CHECK_THROWS_AS(pi_pairing(EigenphaseSet{{0.0}}, 0.0), std::invalid_argument);
}

TEST_CASE("cat states are exact eigenvectors of the ideal drive") {
  for (int length : {4, 6}) {
    const DriveParams drive = make_drive(make_chain(length, 0.5), 0.0, 0.0);
    for (config_t c = 0; c < (config_t(1) << length); ++c)
      CHECK(cat_state_check(c, drive) < 1e-12);
  }
  // the closed form also holds away from the resonant period
  const DriveParams detuned = make_drive(make_chain(4, 1.5), 0.0, 0.09);
  CHECK(cat_state_check(0b0011, detuned) < 1e-12);
}

TEST_CASE("cat-state check rejects drives it was not derived for") {
  const ChainSpec spec = make_chain(4, 0.5);
  CHECK_THROWS_AS(cat_state_check(0, make_drive(spec, 0.01, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(cat_state_check(0, make_drive(spec, 0.0, 0.0, KickMask::EvenSites)),
                  std::invalid_argument);
}

TEST_CASE("dense diagonalization refuses oversized chains") {
  CHECK_THROWS_AS(eigenphases(make_drive(make_chain(11, 0.5), 0.0, 0.0)),
                  std::invalid_argument);
}
