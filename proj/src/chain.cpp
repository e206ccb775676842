#include "dtc/chain.hpp"

#include <cmath>
#include <stdexcept>

namespace dtc {

ChainSpec make_chain(int length, double alpha) {
  if (length < 2) throw std::invalid_argument("chain length must be >= 2");
  if (length > 31) throw std::invalid_argument("chain length exceeds the 32-bit encoding");
  if (alpha < 0.0) throw std::invalid_argument("coupling exponent must be >= 0");
  ChainSpec spec;
  spec.length = length;
  spec.alpha = alpha;
  spec.couplings.resize(length - 1);
  for (int j = 1; j < length; ++j)
    spec.couplings[j - 1] = std::pow(static_cast<double>(j), alpha);
  return spec;
}

double coupling_sum(const ChainSpec& spec) {
  double s = 0.0;
  for (double j : spec.couplings) s += j;
  return s;
}

void check_config(config_t c, int length) {
  if (length >= 32) return;
  if (c >> length)
    throw std::invalid_argument("configuration has bits above the chain length");
}

double energy_of(config_t c, const ChainSpec& spec) {
  check_config(c, spec.length);
  double e = 0.0;
  for (int j = 0; j + 1 < spec.length; ++j) {
    const double sj = (c >> j) & 1u ? 1.0 : -1.0;
    const double sj1 = (c >> (j + 1)) & 1u ? 1.0 : -1.0;
    e += spec.couplings[j] * sj * sj1;
  }
  return e;
}

std::vector<double> full_spectrum(const ChainSpec& spec, int length_cap) {
  if (spec.length > length_cap)
    throw std::invalid_argument("chain length exceeds the spectrum enumeration cap");
  const std::size_t dim = std::size_t(1) << spec.length;
  std::vector<double> energies(dim);
  for (std::size_t c = 0; c < dim; ++c)
    energies[c] = energy_of(static_cast<config_t>(c), spec);
  return energies;
}

config_t neel_state(int length) {
  if (length < 2 || length % 2 != 0)
    throw std::invalid_argument("Neel state requires an even chain");
  config_t c = 0;
  for (int b = 0; b < length; b += 2) c |= config_t(1) << b;
  return c;
}

config_t max_state(int length) {
  if (length < 2 || length % 2 != 0)
    throw std::invalid_argument("polarized reference state requires an even chain");
  return (config_t(1) << length) - 1u;
}

config_t global_flip(config_t c, int length) {
  check_config(c, length);
  return c ^ ((config_t(1) << length) - 1u);
}

config_t sublattice_flip(config_t c, int length) {
  if (length % 2 != 0)
    throw std::invalid_argument("sublattice flip is defined only for even chains");
  check_config(c, length);
  config_t mask = 0;
  for (int b = 1; b < length; b += 2) mask |= config_t(1) << b;  // sites 2, 4, ..., L
  return c ^ mask;
}

}  // namespace dtc
