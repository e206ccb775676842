#pragma once
// Drive parameters for one Floquet cycle: free evolution under H_B for time
// T = pi/(2L) + omega, then a simultaneous x-rotation by Phi = (pi/2)(1-e)
// on the masked sites.

#include <numbers>
#include <string>

#include "dtc/chain.hpp"

namespace dtc {

enum class KickMask { AllSites, EvenSites, Custom };

struct DriveParams {
  ChainSpec spec;
  double e = 0.0;              // kick imperfection
  double omega = 0.0;          // period deviation (the sensed parameter)
  KickMask mask = KickMask::AllSites;
  config_t custom_bits = 0;    // used when mask == Custom

  double period() const { return std::numbers::pi / (2.0 * spec.length) + omega; }
  double kick_angle() const { return 0.5 * std::numbers::pi * (1.0 - e); }
  config_t mask_bits() const;
};

DriveParams make_drive(const ChainSpec& spec, double e, double omega,
                       KickMask mask = KickMask::AllSites, config_t custom_bits = 0);

// "all", "even", or "custom:<hex>"
std::string mask_name(const DriveParams& drive);

}  // namespace dtc
