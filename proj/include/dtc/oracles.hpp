#pragma once
// Independent analytic references used to cross-validate the engine: the
// two-period return amplitude (combinatorial sum over flip ensembles), the
// L = 4 second-order battery formula, and dense-matrix powering.

#include <vector>

#include "dtc/floquet.hpp"

namespace dtc {

// all configurations at Hamming distance n_f from `ref`
std::vector<config_t> flip_ensemble(config_t ref, int length, int n_f);

// <x|U_F^2|x> evaluated as
//   (-1)^L e^{-i E_x T} sum_{n_f} cos(phi)^{2(L-n_f)} (i sin phi)^{2 n_f}
//                       sum_{c at distance n_f from -x} e^{-i E_c T}
// with phi = e pi/2.  AllSites mask only; L <= 12.
cd two_period_amplitude(config_t x, const DriveParams& drive);

// Stored energy after n = 2m-1 periods of the even-site drive at L = 4,
// second order in the kick imperfection.  Two single-flip channels
// A = |up down up up>, B = |up up up down> grow linearly in m on top of the
// charged state; unitarity depletes the charged amplitude by the same weight,
// so each channel contributes (E_channel - E_max):
//   dE = (E_max - E_min) + phi^2 [ K_A (E_A - E_max) + K_B (E_B - E_max) ],
//   K_A = m^2 + (m-1)^2 + 2 m (m-1) cos((E_max + E_B) T),
//   K_B = m^2 + (m-1)^2 + 2 m (m-1) cos((E_max + E_A) T),  phi = e pi/2.
double battery_l4_delta_e(int m, const DriveParams& drive);

// dense-matrix powering reference, L <= 10
state_t brute_force_evolve(config_t x, const DriveParams& drive, int n);

}  // namespace dtc
