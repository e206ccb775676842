#include "dtc/observables.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "dtc/output.hpp"
#include "dtc/parallel.hpp"

namespace dtc {

static Metadata drive_metadata(const DriveParams& drive) {
  Metadata m;
  m["sites"] = std::to_string(drive.spec.length);
  m["alpha"] = format_double(drive.spec.alpha);
  m["e"] = format_double(drive.e);
  m["omega"] = format_double(drive.omega);
  m["kick"] = mask_name(drive);
  return m;
}

ObservableSeries fidelity_series(config_t c, const DriveParams& drive, int n_count) {
  if (n_count < 2) throw std::invalid_argument("fidelity series needs at least 2 periods");
  const std::vector<cd> ov = evolve_overlaps(c, drive, n_count - 1);
  ObservableSeries series;
  series.label = "fidelity";
  series.metadata = drive_metadata(drive);
  series.metadata["initial"] = std::to_string(c);
  series.xs.reserve(n_count);
  series.ys.reserve(n_count);
  for (int n = 0; n < n_count; ++n) {
    series.xs.push_back(n);
    series.ys.push_back(std::norm(ov[n]));  // squared overlap
  }
  return series;
}

ObservableSeries averaged_fidelity_series(const DriveParams& drive, int n_count,
                                          int max_exact_length, int samples,
                                          std::uint64_t seed) {
  if (n_count < 2) throw std::invalid_argument("fidelity series needs at least 2 periods");
  const int length = drive.spec.length;
  const std::size_t dim = std::size_t(1) << length;
  const bool exact = length <= max_exact_length;

  std::vector<config_t> initial;
  if (exact) {
    initial.resize(dim);
    for (std::size_t x = 0; x < dim; ++x) initial[x] = static_cast<config_t>(x);
  } else {
    std::mt19937_64 rng(seed);
    initial.resize(samples);
    for (int s = 0; s < samples; ++s) {
      const double u = double(rng() >> 11) * 0x1.0p-53;  // avoid distribution portability traps
      initial[s] = static_cast<config_t>(u * double(dim));
    }
  }

  const FloquetContext ctx(drive);
  std::vector<std::vector<double>> rows(initial.size());
  parallel_for(initial.size(), [&](std::size_t t) {
    const config_t x = initial[t];
    state_t psi = init_product_state(x, length);
    std::vector<double> row(n_count);
    row[0] = 1.0;
    for (int n = 1; n < n_count; ++n) {
      ctx.step(psi);
      row[n] = std::abs(psi[x]);  // |<x|psi_n>|, not squared
    }
    rows[t] = std::move(row);
  });

  ObservableSeries series;
  series.label = "fidelity_avg";
  series.metadata = drive_metadata(drive);
  series.metadata["average_mode"] = exact ? "exact" : "sampled";
  series.metadata["samples"] = std::to_string(initial.size());
  if (!exact) series.metadata["seed"] = std::to_string(seed);
  series.xs.resize(n_count);
  series.ys.assign(n_count, 0.0);
  for (int n = 0; n < n_count; ++n) series.xs[n] = n;
  for (const auto& row : rows)
    for (int n = 0; n < n_count; ++n) series.ys[n] += row[n];
  for (double& y : series.ys) y /= double(initial.size());
  return series;
}

SpectrumResult series_spectrum(const ObservableSeries& series) {
  const std::size_t N = series.ys.size();
  if (N < 8) throw std::invalid_argument("spectrum needs a series of at least 8 points");
  double mean = 0.0;
  for (double y : series.ys) mean += y;
  mean /= double(N);

  SpectrumResult result;
  result.frequencies.resize(N);
  result.magnitudes.resize(N);
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t k = 0; k < N; ++k) {
    double re = 0.0, im = 0.0;
    for (std::size_t n = 0; n < N; ++n) {
      const double z = series.ys[n] - mean;
      const double arg = -two_pi * double(k) * double(n) / double(N);
      re += z * std::cos(arg);
      im += z * std::sin(arg);
    }
    result.frequencies[k] = two_pi * double(k) / double(N);
    result.magnitudes[k] = std::hypot(re, im) / (double(N) / 2.0);
  }

  std::size_t peak = 1;
  for (std::size_t k = 2; k < N; ++k)
    if (result.magnitudes[k] > result.magnitudes[peak]) peak = k;
  if (result.magnitudes[peak] < 1e-14) {  // flat series: no peak to report
    result.peak_frequency = 0.0;
    result.peak_magnitude = 0.0;
  } else {
    result.peak_frequency = result.frequencies[peak];
    result.peak_magnitude = result.magnitudes[peak];
  }
  return result;
}

double stored_energy(config_t c, const DriveParams& drive, int n) {
  const FloquetContext ctx(drive);
  state_t psi = init_product_state(c, drive.spec.length);
  for (int k = 0; k < n; ++k) ctx.step(psi);
  double mean_energy = 0.0;
  for (std::size_t x = 0; x < psi.size(); ++x) mean_energy += std::norm(psi[x]) * ctx.energies[x];
  return mean_energy - ctx.energies[c];
}

double qfi_from_pair(const TangentPair& pair) {
  const double dd = std::real(overlap(pair.dpsi, pair.dpsi));
  const cd pd = overlap(pair.psi, pair.dpsi);
  return 4.0 * (dd - std::norm(pd));
}

double qfi(config_t c, const DriveParams& drive, int n) {
  return qfi_from_pair(evolve_with_tangent(c, drive, n));
}

std::vector<double> qfi_series(config_t c, const DriveParams& drive, int n_max) {
  if (n_max < 1) throw std::invalid_argument("QFI series needs n_max >= 1");
  const FloquetContext ctx(drive);
  TangentPair pair{init_product_state(c, drive.spec.length),
                   state_t(std::size_t(1) << drive.spec.length, cd(0.0, 0.0))};
  std::vector<double> out;
  out.reserve(n_max);
  for (int k = 0; k < n_max; ++k) {
    ctx.step_tangent(pair.psi, pair.dpsi);
    out.push_back(qfi_from_pair(pair));
  }
  return out;
}

namespace {

// one evolution per (length, omega) pair, recording every requested period
template <typename Record>
void sweep_impl(const DriveParams& base, const std::vector<double>& omegas,
                const std::vector<int>& period_list, const std::vector<int>& lengths,
                std::vector<SweepPoint>& points, const Record& record) {
  if (omegas.empty() || period_list.empty() || lengths.empty())
    throw std::invalid_argument("sweep grids must be non-empty");
  int max_n = 0;
  for (int n : period_list) {
    if (n < 0) throw std::invalid_argument("period counts must be >= 0");
    if (n > max_n) max_n = n;
  }

  points.resize(lengths.size() * omegas.size() * period_list.size());
  parallel_for(lengths.size() * omegas.size(), [&](std::size_t task) {
    const std::size_t li = task / omegas.size();
    const std::size_t wi = task % omegas.size();
    const int length = lengths[li];
    DriveParams drive = base;
    drive.spec = make_chain(length, base.spec.alpha);
    drive.omega = omegas[wi];
    const std::size_t slot0 = (li * omegas.size() + wi) * period_list.size();
    record(drive, period_list, max_n, &points[slot0]);
    for (std::size_t pi = 0; pi < period_list.size(); ++pi) {
      points[slot0 + pi].length = length;
      points[slot0 + pi].periods = period_list[pi];
      points[slot0 + pi].omega = omegas[wi];
    }
  });
}

}  // namespace

std::vector<SweepPoint> battery_sweep(const DriveParams& base,
                                      const std::vector<double>& omegas,
                                      const std::vector<int>& period_list,
                                      const std::vector<int>& lengths) {
  std::vector<SweepPoint> points;
  sweep_impl(base, omegas, period_list, lengths, points,
             [](const DriveParams& drive, const std::vector<int>& ns, int max_n, SweepPoint* out) {
               const FloquetContext ctx(drive);
               const config_t c = neel_state(drive.spec.length);
               state_t psi = init_product_state(c, drive.spec.length);
               std::vector<double> de_at(max_n + 1);
               double mean0 = ctx.energies[c];
               de_at[0] = 0.0;
               for (int k = 1; k <= max_n; ++k) {
                 ctx.step(psi);
                 double mean_energy = 0.0;
                 for (std::size_t x = 0; x < psi.size(); ++x)
                   mean_energy += std::norm(psi[x]) * ctx.energies[x];
                 de_at[k] = mean_energy - mean0;
               }
               for (std::size_t pi = 0; pi < ns.size(); ++pi) out[pi].value = de_at[ns[pi]];
             });
  return points;
}

std::vector<SweepPoint> qfi_sweep(const DriveParams& base,
                                  const std::vector<double>& omegas,
                                  const std::vector<int>& period_list,
                                  const std::vector<int>& lengths) {
  std::vector<SweepPoint> points;
  sweep_impl(base, omegas, period_list, lengths, points,
             [](const DriveParams& drive, const std::vector<int>& ns, int max_n, SweepPoint* out) {
               const FloquetContext ctx(drive);
               const config_t c = neel_state(drive.spec.length);
               TangentPair pair{init_product_state(c, drive.spec.length),
                                state_t(std::size_t(1) << drive.spec.length, cd(0.0, 0.0))};
               std::vector<double> fq_at(max_n + 1, 0.0);
               for (int k = 1; k <= max_n; ++k) {
                 ctx.step_tangent(pair.psi, pair.dpsi);
                 fq_at[k] = qfi_from_pair(pair);
               }
               for (std::size_t pi = 0; pi < ns.size(); ++pi) out[pi].value = fq_at[ns[pi]];
             });
  return points;
}

}  // namespace dtc
