#pragma once
// Static chain H_B = sum_j J_j sigma^z_j sigma^z_{j+1} with power-law bonds
// J_j = j^alpha on an open chain of L spin-1/2 sites.
//
// Basis encoding (frozen; defines state-vector layout and all file output):
//   site j (1-based) <-> bit j-1, bit set = spin up (s = +1).

#include <cstdint>
#include <vector>

namespace dtc {

using config_t = std::uint32_t;

struct ChainSpec {
  int length = 2;                  // L >= 2
  double alpha = 1.0;              // coupling exponent, >= 0
  std::vector<double> couplings;   // cached J_j, entry j-1 for bond (j, j+1)
};

ChainSpec make_chain(int length, double alpha);

// sum of all bond couplings; equals the maximal configuration energy
double coupling_sum(const ChainSpec& spec);

// rejects configurations with bits at or above `length`
void check_config(config_t c, int length);

double energy_of(config_t c, const ChainSpec& spec);

// energies of all 2^L configurations, indexed by bit pattern
std::vector<double> full_spectrum(const ChainSpec& spec, int length_cap = 20);

config_t neel_state(int length);   // |up down up down ...>, site 1 up
config_t max_state(int length);    // all spins up

config_t global_flip(config_t c, int length);
// flips sites 2, 4, ..., L; anticommutes with H_B on an even chain
config_t sublattice_flip(config_t c, int length);

}  // namespace dtc
