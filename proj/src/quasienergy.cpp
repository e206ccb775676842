#include "dtc/quasienergy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "dtc/chain.hpp"

namespace dtc {

EigenphaseSet eigenphases(const DriveParams& drive) {
  const int length = drive.spec.length;
  if (length > 10) throw std::invalid_argument("dense eigenphases limited to length <= 10");
  const std::size_t dim = std::size_t(1) << length;

  // zgeev destroys its input, so assemble the operator into a flat buffer
  const std::vector<state_t> columns = dense_floquet_matrix(drive);
  std::vector<cd> a(dim * dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) a[j * dim + i] = columns[j][i];

  std::vector<cd> w(dim);
  const lapack_int n = static_cast<lapack_int>(dim);
  const lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, a.data(), n,
                                        w.data(), nullptr, 1, nullptr, 1);
  if (info != 0) throw std::runtime_error("zgeev failed to converge");

  constexpr double pi = std::numbers::pi;
  EigenphaseSet set;
  set.phases.reserve(dim);
  for (const cd& lambda : w) {
    if (std::abs(std::abs(lambda) - 1.0) > 1e-8)
      throw std::runtime_error("eigenvalue left the unit circle; operator not unitary");
    double phase = std::atan2(lambda.imag(), lambda.real());
    if (phase <= -pi) phase += 2.0 * pi;  // land in (-pi, pi]
    set.phases.push_back(phase);
  }
  std::sort(set.phases.begin(), set.phases.end());
  return set;
}

namespace {

// circular gap folded to [0, pi]
double phase_gap(double a, double b) {
  constexpr double pi = std::numbers::pi;
  double g = std::abs(a - b);
  if (g > pi) g = 2.0 * pi - g;
  return g;
}

}  // namespace

PairingReport pi_pairing(const EigenphaseSet& set, double window) {
  constexpr double pi = std::numbers::pi;
  if (window <= 0.0 || window > pi) throw std::invalid_argument("pairing window must lie in (0, pi]");
  const int n = static_cast<int>(set.phases.size());
  PairingReport report;
  std::vector<char> used(n, 0);
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    used[i] = 1;
    int best = -1;
    double best_dev = window;
    for (int j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      const double dev = pi - phase_gap(set.phases[i], set.phases[j]);
      if (dev <= best_dev) {  // ties resolve to the later (larger) phase
        best_dev = dev;
        best = j;
      }
    }
    if (best < 0) {
      ++report.unpaired;
      continue;
    }
    used[best] = 1;
    report.pairs.push_back({i, best, best_dev});
    if (best_dev > report.max_deviation) report.max_deviation = best_dev;
  }
  return report;
}

double cat_state_check(config_t c, const DriveParams& drive) {
  if (drive.e != 0.0) throw std::invalid_argument("cat states are exact only at e = 0");
  if (drive.mask != KickMask::AllSites)
    throw std::invalid_argument("cat states require the full kick");
  const int length = drive.spec.length;
  check_config(c, length);
  const config_t d = global_flip(c, length);
  const double T = drive.period();

  const FloquetContext ctx(drive);
  const double ec = ctx.energies[c];
  const double ed = ctx.energies[d];

  cd prefactor(1.0, 0.0);  // (-i)^L: each kicked site contributes -i at the ideal angle
  for (int k = 0; k < length; ++k) prefactor *= cd(0.0, -1.0);

  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  double worst = 0.0;
  for (int sign : {+1, -1}) {
    state_t phi(std::size_t(1) << length, cd(0.0, 0.0));
    phi[c] = inv_sqrt2 * std::polar(1.0, -ed * T / 2.0);
    phi[d] = double(sign) * inv_sqrt2 * std::polar(1.0, -ec * T / 2.0);
    const cd lambda = double(sign) * prefactor * std::polar(1.0, -(ec + ed) * T / 2.0);

    state_t out = phi;
    ctx.step(out);
    double residual_sq = 0.0;
    for (std::size_t x = 0; x < out.size(); ++x) residual_sq += std::norm(out[x] - lambda * phi[x]);
    worst = std::max(worst, std::sqrt(residual_sq));
  }
  return worst;
}

}  // namespace dtc
