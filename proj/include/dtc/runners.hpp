#pragma once
// Batch pipelines behind the CLI subcommands.  Each runner computes
// everything first and only then writes its files, so a failure never leaves
// partial output behind.

#include "dtc/config.hpp"

namespace dtc {

int run_timecrystal(const RunConfig& cfg);
int run_battery(const RunConfig& cfg);
int run_sense(const RunConfig& cfg);
int run_quasienergy(const RunConfig& cfg);
int run_sweep(const RunConfig& cfg);

int run_command(const RunConfig& cfg);

}  // namespace dtc
