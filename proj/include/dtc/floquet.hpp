#pragma once
// State-vector propagation under the Floquet operator
//   U_F = exp(-i Phi sum_masked sigma_x) * exp(-i T H_B)
// (diagonal phase first, kick second).  The kick is applied as one in-place
// pairwise butterfly per masked bit, O(L 2^L) per period; this is the
// performance core of the whole artifact.

#include <complex>
#include <vector>

#include "dtc/drive.hpp"

namespace dtc {

using cd = std::complex<double>;
using state_t = std::vector<cd>;

state_t init_product_state(config_t c, int length);

cd overlap(const state_t& a, const state_t& b);  // <a|b>
double norm(const state_t& a);

void apply_kick(state_t& psi, config_t mask_bits, double phi);
void apply_diagonal(state_t& psi, const std::vector<double>& energies, double time);

// Precomputed per-drive tables: configuration energies and the cached
// diagonal phases exp(-i T E_x).  Rebuild whenever omega changes.
struct FloquetContext {
  explicit FloquetContext(const DriveParams& drive);

  DriveParams drive;
  std::vector<double> energies;
  std::vector<cd> diag_phase;
  config_t kick_bits;
  double phi;

  void step(state_t& psi) const;
  // product-rule propagation of (psi, dpsi = d psi / d omega); omega enters
  // only through the diagonal factor, so d/domega exp(-i T E) = -i E exp(-i T E)
  void step_tangent(state_t& psi, state_t& dpsi) const;
};

state_t evolve(config_t c, const DriveParams& drive, int n);
state_t evolve(state_t psi, const DriveParams& drive, int n);
// trajectory of overlaps <psi_0|psi_k>, k = 0..n
std::vector<cd> evolve_overlaps(config_t c, const DriveParams& drive, int n);

struct TangentPair {
  state_t psi;
  state_t dpsi;  // unnormalized derivative d psi / d omega
};
TangentPair evolve_with_tangent(config_t c, const DriveParams& drive, int n);
TangentPair evolve_with_tangent(state_t psi0, const DriveParams& drive, int n);

// dense 2^L x 2^L operator, column x = U_F |x>; brute-force reference, L <= 12
std::vector<state_t> dense_floquet_matrix(const DriveParams& drive);
state_t dense_apply(const std::vector<state_t>& columns, const state_t& v);

}  // namespace dtc
