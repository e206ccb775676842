#include "dtc/oracles.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dtc/chain.hpp"

namespace dtc {

std::vector<config_t> flip_ensemble(config_t ref, int length, int n_f) {
  check_config(ref, length);
  if (n_f < 0 || n_f > length) throw std::invalid_argument("flip count out of range");
  std::vector<config_t> out;
  const config_t top = config_t(1) << length;
  for (config_t mask = 0; mask < top; ++mask)
    if (std::popcount(mask) == n_f) out.push_back(ref ^ mask);
  return out;
}

cd two_period_amplitude(config_t x, const DriveParams& drive) {
  const int length = drive.spec.length;
  if (length > 12) throw std::invalid_argument("two-period amplitude limited to length <= 12");
  if (drive.mask != KickMask::AllSites)
    throw std::invalid_argument("two-period amplitude derived for the full kick only");
  check_config(x, length);

  const double T = drive.period();
  const double phi = drive.e * std::numbers::pi / 2.0;  // deviation from the ideal angle
  const double c2 = std::cos(phi) * std::cos(phi);
  const double s2 = std::sin(phi) * std::sin(phi);
  const config_t ref = global_flip(x, length);

  cd sum(0.0, 0.0);
  for (int n_f = 0; n_f <= length; ++n_f) {
    // cos(phi)^{2(L-n_f)} (i sin phi)^{2 n_f} is real: (-1)^{n_f} absorbs the i^2
    double weight = (n_f % 2 == 0) ? 1.0 : -1.0;
    for (int k = 0; k < length - n_f; ++k) weight *= c2;
    for (int k = 0; k < n_f; ++k) weight *= s2;
    cd inner(0.0, 0.0);
    for (config_t c : flip_ensemble(ref, length, n_f))
      inner += std::polar(1.0, -energy_of(c, drive.spec) * T);
    sum += weight * inner;
  }
  const double parity = (length % 2 == 0) ? 1.0 : -1.0;
  return parity * std::polar(1.0, -energy_of(x, drive.spec) * T) * sum;
}

double battery_l4_delta_e(int m, const DriveParams& drive) {
  if (drive.spec.length != 4) throw std::invalid_argument("closed form derived at length 4");
  if (drive.mask != KickMask::EvenSites)
    throw std::invalid_argument("closed form derived for the even-site kick");
  if (m < 1) throw std::invalid_argument("m must be >= 1 (n = 2m - 1 periods)");
  if (std::abs(drive.e) > 0.05)
    throw std::invalid_argument("second-order expansion only trusted for |e| <= 0.05");

  const double T = drive.period();
  const double phi = drive.e * std::numbers::pi / 2.0;
  const double e_min = energy_of(0b0101, drive.spec);  // alternating ground configuration
  const double e_max = energy_of(0b1111, drive.spec);
  const double e_a = energy_of(0b1101, drive.spec);  // site-2 flip off the charged state
  const double e_b = energy_of(0b0111, drive.spec);  // site-4 flip off the charged state

  const double md = double(m);
  const double base = md * md + (md - 1.0) * (md - 1.0);
  const double cross = 2.0 * md * (md - 1.0);
  const double k_a = base + cross * std::cos((e_max + e_b) * T);
  const double k_b = base + cross * std::cos((e_max + e_a) * T);
  return (e_max - e_min) + phi * phi * (k_a * (e_a - e_max) + k_b * (e_b - e_max));
}

state_t brute_force_evolve(config_t x, const DriveParams& drive, int n) {
  const int length = drive.spec.length;
  if (length > 10) throw std::invalid_argument("dense powering limited to length <= 10");
  check_config(x, length);
  if (n < 0) throw std::invalid_argument("period count must be >= 0");
  const std::vector<state_t> columns = dense_floquet_matrix(drive);
  state_t psi = init_product_state(x, length);
  for (int k = 0; k < n; ++k) psi = dense_apply(columns, psi);
  return psi;
}

}  // namespace dtc
