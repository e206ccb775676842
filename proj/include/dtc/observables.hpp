#pragma once
// Measured quantities: stroboscopic fidelity series (single-state and
// state-averaged), their Fourier spectra, stored battery energy, and the
// pure-state quantum Fisher information for the period deviation omega.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dtc/floquet.hpp"

namespace dtc {

struct ObservableSeries {
  std::string label;
  std::vector<double> xs;  // n or omega, strictly increasing
  std::vector<double> ys;
  std::map<std::string, std::string> metadata;
};

// F_n = |<psi_0|U_F^n|psi_0>|^2 for n = 0..N-1 (note: squared)
ObservableSeries fidelity_series(config_t c, const DriveParams& drive, int n_count);

// (1/2^L) sum_x |<x|U_F^n|x>| (not squared).  Exact enumeration up to
// max_exact_length; beyond that a seeded Monte-Carlo estimate over `samples`
// basis states, with sample count and seed echoed in the metadata.
ObservableSeries averaged_fidelity_series(const DriveParams& drive, int n_count,
                                          int max_exact_length = 12,
                                          int samples = 512,
                                          std::uint64_t seed = 12345);

struct SpectrumResult {
  std::vector<double> frequencies;  // 2 pi k / N, k = 0..N-1
  std::vector<double> magnitudes;   // |DFT of mean-subtracted ys| / (N/2)
  double peak_frequency = 0.0;      // argmax over k >= 1 (DC excluded)
  double peak_magnitude = 0.0;
};
SpectrumResult series_spectrum(const ObservableSeries& series);

// battery charge Tr[rho(nT) H_B] - E_c
double stored_energy(config_t c, const DriveParams& drive, int n);

// F_Q = 4 (<d psi|d psi> - |<psi|d psi>|^2), pure-state form
double qfi(config_t c, const DriveParams& drive, int n);
double qfi_from_pair(const TangentPair& pair);
std::vector<double> qfi_series(config_t c, const DriveParams& drive, int n_max);  // n = 1..n_max

// sweep tables; each point evolves the Neel state of the given length under
// the base drive with (omega, n, L) substituted
struct SweepPoint {
  int length = 0;
  int periods = 0;
  double omega = 0.0;
  double value = 0.0;
};
std::vector<SweepPoint> battery_sweep(const DriveParams& base,
                                      const std::vector<double>& omegas,
                                      const std::vector<int>& period_list,
                                      const std::vector<int>& lengths);
std::vector<SweepPoint> qfi_sweep(const DriveParams& base,
                                  const std::vector<double>& omegas,
                                  const std::vector<int>& period_list,
                                  const std::vector<int>& lengths);

}  // namespace dtc
