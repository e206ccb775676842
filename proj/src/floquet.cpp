#include "dtc/floquet.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace dtc {

config_t DriveParams::mask_bits() const {
  const config_t all = (config_t(1) << spec.length) - 1u;
  switch (mask) {
    case KickMask::AllSites:
      return all;
    case KickMask::EvenSites: {
      config_t bits = 0;
      for (int b = 1; b < spec.length; b += 2) bits |= config_t(1) << b;
      return bits;
    }
    case KickMask::Custom:
      if (custom_bits & ~all)
        throw std::invalid_argument("custom kick mask has bits above the chain length");
      return custom_bits;
  }
  return 0;
}

DriveParams make_drive(const ChainSpec& spec, double e, double omega,
                       KickMask mask, config_t custom_bits) {
  DriveParams d;
  d.spec = spec;
  d.e = e;
  d.omega = omega;
  d.mask = mask;
  d.custom_bits = custom_bits;
  if (d.period() <= 0.0) throw std::invalid_argument("drive period must be positive");
  d.mask_bits();  // validates a custom mask eagerly
  return d;
}

state_t init_product_state(config_t c, int length) {
  if (c >> length) throw std::invalid_argument("configuration has bits above the chain length");
  state_t psi(std::size_t(1) << length, cd(0.0, 0.0));
  psi[c] = cd(1.0, 0.0);
  return psi;
}

cd overlap(const state_t& a, const state_t& b) {
  cd s(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const state_t& a) {
  double s = 0.0;
  for (const cd& v : a) s += std::norm(v);
  return std::sqrt(s);
}

void apply_kick(state_t& psi, config_t mask_bits, double phi) {
  const double c = std::cos(phi);
  const cd ms(0.0, -std::sin(phi));  // -i sin(phi)
  const std::size_t dim = psi.size();
  for (config_t bits = mask_bits; bits; bits &= bits - 1) {
    const std::size_t stride = std::size_t(1) << std::countr_zero(bits);
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t i = base; i < base + stride; ++i) {
        const cd a0 = psi[i];
        const cd a1 = psi[i + stride];
        psi[i] = c * a0 + ms * a1;
        psi[i + stride] = c * a1 + ms * a0;
      }
    }
  }
}

void apply_diagonal(state_t& psi, const std::vector<double>& energies, double time) {
  for (std::size_t i = 0; i < psi.size(); ++i)
    psi[i] *= std::polar(1.0, -time * energies[i]);
}

FloquetContext::FloquetContext(const DriveParams& d) : drive(d) {
  energies = full_spectrum(d.spec, 31);
  const double T = d.period();
  diag_phase.resize(energies.size());
  for (std::size_t i = 0; i < energies.size(); ++i)
    diag_phase[i] = std::polar(1.0, -T * energies[i]);
  kick_bits = d.mask_bits();
  phi = d.kick_angle();
}

void FloquetContext::step(state_t& psi) const {
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] *= diag_phase[i];
  apply_kick(psi, kick_bits, phi);
}

void FloquetContext::step_tangent(state_t& psi, state_t& dpsi) const {
  for (std::size_t i = 0; i < psi.size(); ++i) {
    psi[i] *= diag_phase[i];
    dpsi[i] = dpsi[i] * diag_phase[i] + cd(0.0, -energies[i]) * psi[i];
  }
  apply_kick(psi, kick_bits, phi);
  apply_kick(dpsi, kick_bits, phi);
}

state_t evolve(config_t c, const DriveParams& drive, int n) {
  return evolve(init_product_state(c, drive.spec.length), drive, n);
}

state_t evolve(state_t psi, const DriveParams& drive, int n) {
  if (n < 0) throw std::invalid_argument("period count must be >= 0");
  const FloquetContext ctx(drive);
  for (int k = 0; k < n; ++k) ctx.step(psi);
  return psi;
}

std::vector<cd> evolve_overlaps(config_t c, const DriveParams& drive, int n) {
  if (n < 0) throw std::invalid_argument("period count must be >= 0");
  const FloquetContext ctx(drive);
  state_t psi = init_product_state(c, drive.spec.length);
  std::vector<cd> overlaps;
  overlaps.reserve(n + 1);
  overlaps.emplace_back(1.0, 0.0);
  for (int k = 0; k < n; ++k) {
    ctx.step(psi);
    overlaps.push_back(psi[c]);  // <c|psi_k>, initial state is the basis vector
  }
  return overlaps;
}

TangentPair evolve_with_tangent(config_t c, const DriveParams& drive, int n) {
  return evolve_with_tangent(init_product_state(c, drive.spec.length), drive, n);
}

TangentPair evolve_with_tangent(state_t psi0, const DriveParams& drive, int n) {
  if (n < 1) throw std::invalid_argument("tangent propagation needs n >= 1");
  const FloquetContext ctx(drive);
  TangentPair pair{std::move(psi0), state_t(std::size_t(1) << drive.spec.length, cd(0.0, 0.0))};
  for (int k = 0; k < n; ++k) ctx.step_tangent(pair.psi, pair.dpsi);
  return pair;
}

std::vector<state_t> dense_floquet_matrix(const DriveParams& drive) {
  if (drive.spec.length > 12)
    throw std::invalid_argument("dense Floquet matrix is capped at 12 sites");
  const FloquetContext ctx(drive);
  const std::size_t dim = std::size_t(1) << drive.spec.length;
  std::vector<state_t> columns(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    columns[x] = init_product_state(static_cast<config_t>(x), drive.spec.length);
    ctx.step(columns[x]);
  }
  return columns;
}

state_t dense_apply(const std::vector<state_t>& columns, const state_t& v) {
  const std::size_t dim = columns.size();
  state_t out(dim, cd(0.0, 0.0));
  for (std::size_t x = 0; x < dim; ++x) {
    const cd vx = v[x];
    if (vx == cd(0.0, 0.0)) continue;
    const state_t& col = columns[x];
    for (std::size_t r = 0; r < dim; ++r) out[r] += col[r] * vx;
  }
  return out;
}

std::string mask_name(const DriveParams& drive) {
  switch (drive.mask) {
    case KickMask::AllSites: return "all";
    case KickMask::EvenSites: return "even";
    case KickMask::Custom: {
      char buf[16];
      const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), drive.custom_bits, 16);
      return "custom:" + std::string(buf, ptr);
    }
  }
  throw std::invalid_argument("unknown kick mask");
}

}  // namespace dtc
