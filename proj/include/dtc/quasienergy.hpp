#pragma once
// Floquet eigenphases from the dense operator, the pi-pairing diagnostic, and
// the closed-form cat-state eigenvectors of the ideal (e = 0) drive.

#include <vector>

#include "dtc/floquet.hpp"

namespace dtc {

struct EigenphaseSet {
  std::vector<double> phases;  // sorted ascending, each in (-pi, pi]
};

// dense diagonalization (general complex eigensolver), L <= 10
EigenphaseSet eigenphases(const DriveParams& drive);

struct PairingEntry {
  int i = 0;
  int j = 0;
  double deviation = 0.0;  // | |phase gap| - pi |
};
struct PairingReport {
  std::vector<PairingEntry> pairs;
  double max_deviation = 0.0;
  int unpaired = 0;  // phases with no partner within the tolerance window
};
// greedy nearest-partner matching at distance pi (mod 2 pi); any conflict is
// reported via `unpaired` rather than silently resolved
PairingReport pi_pairing(const EigenphaseSet& set, double window = 0.5);

// Builds both cat states (|x> +- |-x>) / sqrt(2) with their diagonal phases,
// applies one Floquet step, and returns the worse eigen-residual
//   || U_F |phi+-> - lambda+- |phi+-> ||.
// The exact eigenvalue carries a (-i)^L prefactor: every kicked site
// contributes a factor -i at the ideal angle.  Requires e = 0, AllSites.
double cat_state_check(config_t c, const DriveParams& drive);

}  // namespace dtc
