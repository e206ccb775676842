// dtc — driven spin-chain batch runner.  See README for column semantics.
#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dtc/config.hpp"
#include "dtc/runners.hpp"

namespace {

// raw flag values for one subcommand; CLI11 option pointers let us apply only
// the flags the user actually passed, preserving CLI > config > default
struct Flags {
  int sites = 0;
  double alpha = 0.0, e = 0.0, omega = 0.0, tau = 0.0;
  std::uint64_t seed = 0;
  int periods = 0;
  std::string kick, grid, out, format, config;
  std::vector<int> period_list, size_list;
  std::vector<double> alpha_list;

  CLI::Option* o_sites = nullptr;
  CLI::Option* o_alpha = nullptr;
  CLI::Option* o_e = nullptr;
  CLI::Option* o_omega = nullptr;
  CLI::Option* o_tau = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_periods = nullptr;
  CLI::Option* o_kick = nullptr;
  CLI::Option* o_grid = nullptr;
  CLI::Option* o_out = nullptr;
  CLI::Option* o_format = nullptr;
  CLI::Option* o_config = nullptr;
  CLI::Option* o_period_list = nullptr;
  CLI::Option* o_size_list = nullptr;
  CLI::Option* o_alpha_list = nullptr;
};

void attach(CLI::App* sub, Flags& f, bool with_alpha_list) {
  f.o_sites = sub->add_option("--sites", f.sites, "chain length L");
  f.o_alpha = sub->add_option("--alpha", f.alpha, "coupling growth exponent");
  f.o_e = sub->add_option("--e", f.e, "kick imperfection");
  f.o_omega = sub->add_option("--omega", f.omega, "period deviation");
  f.o_kick = sub->add_option("--kick", f.kick, "kick mask: all, even, or custom:<hex>");
  f.o_grid = sub->add_option("--omega-grid", f.grid, "min:max:count[:geometric]");
  f.o_periods = sub->add_option("--periods", f.periods, "number of drive periods");
  f.o_period_list =
      sub->add_option("--period-list", f.period_list, "period counts for sweeps")->delimiter(',');
  f.o_size_list =
      sub->add_option("--size-list", f.size_list, "chain lengths for sweeps")->delimiter(',');
  if (with_alpha_list)
    f.o_alpha_list =
        sub->add_option("--alpha-list", f.alpha_list, "alpha values for sweeps")->delimiter(',');
  f.o_tau = sub->add_option("--tolerance-tau", f.tau, "plateau tolerance");
  f.o_seed = sub->add_option("--seed", f.seed, "sampling seed");
  f.o_out = sub->add_option("--out", f.out, "output directory");
  f.o_format = sub->add_option("--format", f.format, "csv or json")
                   ->check(CLI::IsMember({"csv", "json"}));
  f.o_config = sub->add_option("--config", f.config, "key = value config file")
                   ->check(CLI::ExistingFile);
}

dtc::RunConfig assemble(dtc::Command command, const Flags& f) {
  dtc::RunConfig cfg;
  if (f.o_config->count()) cfg = dtc::load_config_file(f.config, cfg);
  cfg.command = command;  // the subcommand always wins over a config-file key
  if (f.o_sites->count()) cfg.sites = f.sites;
  if (f.o_alpha->count()) cfg.alpha = f.alpha;
  if (f.o_e->count()) cfg.e = f.e;
  if (f.o_omega->count()) cfg.omega = f.omega;
  if (f.o_kick->count()) cfg.kick = f.kick;
  if (f.o_grid->count()) cfg.omega_grid = dtc::parse_omega_grid(f.grid);
  if (f.o_periods->count()) cfg.periods = f.periods;
  if (f.o_period_list->count()) cfg.period_list = f.period_list;
  if (f.o_size_list->count()) cfg.size_list = f.size_list;
  if (f.o_alpha_list && f.o_alpha_list->count()) cfg.alpha_list = f.alpha_list;
  if (f.o_tau->count()) cfg.tolerance_tau = f.tau;
  if (f.o_seed->count()) cfg.seed = f.seed;
  if (f.o_out->count()) cfg.out_dir = f.out;
  if (f.o_format->count()) cfg.format = dtc::parse_format(f.format);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"periodically kicked power-law spin chain: simulation and analysis"};
  app.require_subcommand(1);

  const std::vector<std::pair<dtc::Command, const char*>> commands = {
      {dtc::Command::Timecrystal, "fidelity time series and its spectrum"},
      {dtc::Command::Battery, "stored energy sweeps and size scaling"},
      {dtc::Command::Sense, "quantum Fisher information sweeps"},
      {dtc::Command::Quasienergy, "dense eigenphases and pi-pairing"},
      {dtc::Command::Sweep, "combined delta-E / QFI grid sweep"},
  };

  std::vector<Flags> flags(commands.size());
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    CLI::App* sub = app.add_subcommand(dtc::command_name(commands[i].first), commands[i].second);
    attach(sub, flags[i], commands[i].first == dtc::Command::Sweep);
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (std::size_t i = 0; i < commands.size(); ++i)
      if (subs[i]->parsed()) return dtc::run_command(assemble(commands[i].first, flags[i]));
    std::cerr << "error: no subcommand selected\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
