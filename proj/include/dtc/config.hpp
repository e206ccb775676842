#pragma once
// Run configuration shared by the CLI and the batch runners.  Config files
// are flat `key = value` text with comma-separated lists; precedence is
// CLI flag > config file > default.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dtc/drive.hpp"

namespace dtc {

enum class Command { Timecrystal, Battery, Sense, Quasienergy, Sweep };
enum class OutFormat { Csv, Json };

struct OmegaGridSpec {
  double min = 0.0;
  double max = 0.0;
  int count = 1;
  bool geometric = false;
  bool operator==(const OmegaGridSpec&) const = default;
};

struct RunConfig {
  Command command = Command::Timecrystal;
  int sites = 8;
  double alpha = 0.5;
  double e = 0.01;
  double omega = 0.0;
  std::string kick;  // "", "all", "even", or "custom:<hex>"; "" = command default
  std::optional<OmegaGridSpec> omega_grid;
  int periods = 200;
  std::vector<int> period_list;
  std::vector<int> size_list;
  std::vector<double> alpha_list;
  double tolerance_tau = 0.02;
  std::uint64_t seed = 12345;
  std::string out_dir = "out";
  OutFormat format = OutFormat::Csv;

  bool operator==(const RunConfig&) const = default;
};

std::string command_name(Command c);
Command parse_command(const std::string& name);
std::string format_name(OutFormat f);
OutFormat parse_format(const std::string& name);

OmegaGridSpec parse_omega_grid(const std::string& text);  // "min:max:count[:geometric]"
std::string emit_omega_grid(const OmegaGridSpec& g);

// `count` strictly increasing values from min to max: uniform spacing by
// default, log-uniform when `geometric` is set (a min of zero is kept as the
// first point, with the ladder starting at max * 1e-4)
std::vector<double> build_omega_grid(const OmegaGridSpec& g);

RunConfig parse_config_text(const std::string& text, RunConfig base = {});
std::string emit_config(const RunConfig& cfg);
RunConfig load_config_file(const std::string& path, RunConfig base = {});

// maps cfg.kick to a mask, falling back to the command default
// (battery -> EvenSites, everything else -> AllSites)
KickMask resolve_mask(const RunConfig& cfg, config_t* custom_bits);

}  // namespace dtc
