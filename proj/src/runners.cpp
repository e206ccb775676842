#include "dtc/runners.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <tuple>

#include "json.hpp"

#include "dtc/analysis.hpp"
#include "dtc/observables.hpp"
#include "dtc/output.hpp"
#include "dtc/parallel.hpp"
#include "dtc/quasienergy.hpp"

namespace dtc {

namespace {

using nlohmann::json;

DriveParams drive_from(const RunConfig& cfg) {
  config_t custom = 0;
  const KickMask mask = resolve_mask(cfg, &custom);
  return make_drive(make_chain(cfg.sites, cfg.alpha), cfg.e, cfg.omega, mask, custom);
}

// alternating product state starting spin-up at site 1 (the H_B ground
// configuration); defined for every length, unlike the even-only neel helper
config_t alternating_state(int length) {
  config_t c = 0;
  for (int j = 0; j < length; j += 2) c |= config_t(1) << j;
  return c;
}

Metadata echo_parameters(const RunConfig& cfg, const DriveParams& drive) {
  Metadata m;
  m["command"] = command_name(cfg.command);
  m["sites"] = std::to_string(cfg.sites);
  m["alpha"] = format_double(cfg.alpha);
  m["e"] = format_double(cfg.e);
  m["omega"] = format_double(cfg.omega);
  m["kick"] = mask_name(drive);
  m["periods"] = std::to_string(cfg.periods);
  m["tolerance_tau"] = format_double(cfg.tolerance_tau);
  m["seed"] = std::to_string(cfg.seed);
  m["format"] = format_name(cfg.format);
  if (cfg.omega_grid) m["omega_grid"] = emit_omega_grid(*cfg.omega_grid);
  return m;
}

json json_params(const Metadata& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

json json_fit(const FitResult& fit) {
  return json{{"exponent", fit.exponent},
              {"prefactor", fit.prefactor},
              {"exponent_stderr", fit.exponent_stderr},
              {"r_squared", fit.r_squared},
              {"n_points", fit.n_points},
              {"window_min", fit.window_min},
              {"window_max", fit.window_max}};
}

json json_transition(const TransitionEstimate& est) {
  return json{{"omega_c", est.omega_c},
              {"tau", est.tau},
              {"grid_resolution", est.grid_resolution},
              {"first_point_violates", est.first_point_violates}};
}

std::vector<double> grid_for(const RunConfig& cfg, const OmegaGridSpec& fallback) {
  return build_omega_grid(cfg.omega_grid ? *cfg.omega_grid : fallback);
}

Table sweep_table(const std::vector<SweepPoint>& points, const std::string& value_column) {
  std::vector<SweepPoint> sorted = points;
  std::sort(sorted.begin(), sorted.end(), [](const SweepPoint& a, const SweepPoint& b) {
    return std::tie(a.length, a.periods, a.omega) < std::tie(b.length, b.periods, b.omega);
  });
  Table t;
  t.columns = {"sites", "n", "omega", value_column};
  for (const SweepPoint& p : sorted)
    t.rows.push_back({double(p.length), double(p.periods), p.omega, p.value});
  return t;
}

// the (omega, value) profile at fixed (length, n), in grid order
void profile_at(const std::vector<SweepPoint>& points, int length, int n,
                std::vector<double>& omegas, std::vector<double>& ys) {
  std::vector<SweepPoint> sel;
  for (const SweepPoint& p : points)
    if (p.length == length && p.periods == n) sel.push_back(p);
  std::sort(sel.begin(), sel.end(),
            [](const SweepPoint& a, const SweepPoint& b) { return a.omega < b.omega; });
  omegas.clear();
  ys.clear();
  for (const SweepPoint& p : sel) {
    omegas.push_back(p.omega);
    ys.push_back(p.value);
  }
}

void write_summary(const RunConfig& cfg, const json& summary) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);
  write_text_file((fs::path(cfg.out_dir) / "summary.json").string(), summary.dump(2) + "\n");
}

}  // namespace

int run_timecrystal(const RunConfig& cfg) {
  const DriveParams drive = drive_from(cfg);
  const config_t initial = alternating_state(cfg.sites);
  std::cerr << "timecrystal: L=" << cfg.sites << " N=" << cfg.periods << "\n";

  const ObservableSeries fid = fidelity_series(initial, drive, cfg.periods);
  const ObservableSeries avg = averaged_fidelity_series(drive, cfg.periods);
  const SpectrumResult spec_fid = series_spectrum(fid);
  const SpectrumResult spec_avg = series_spectrum(avg);

  const Metadata params = echo_parameters(cfg, drive);

  Table fid_table;
  fid_table.columns = {"n", "fidelity"};
  for (std::size_t i = 0; i < fid.xs.size(); ++i)
    fid_table.rows.push_back({fid.xs[i], fid.ys[i]});

  Table avg_table;
  avg_table.columns = {"n", "fidelity_avg"};
  for (std::size_t i = 0; i < avg.xs.size(); ++i)
    avg_table.rows.push_back({avg.xs[i], avg.ys[i]});

  Table spec_table;
  spec_table.columns = {"omega_k", "magnitude", "magnitude_avg"};
  for (std::size_t k = 0; k < spec_fid.frequencies.size(); ++k)
    spec_table.rows.push_back(
        {spec_fid.frequencies[k], spec_fid.magnitudes[k], spec_avg.magnitudes[k]});

  Metadata fid_meta = params;
  fid_meta["initial"] = std::to_string(initial);
  Metadata avg_meta = params;
  avg_meta["average_mode"] = avg.metadata.at("average_mode");
  avg_meta["samples"] = avg.metadata.at("samples");

  json summary;
  summary["parameters"] = json_params(params);
  summary["initial"] = initial;
  summary["peak"] = {{"frequency", spec_fid.peak_frequency},
                     {"magnitude", spec_fid.peak_magnitude}};
  summary["peak_avg"] = {{"frequency", spec_avg.peak_frequency},
                         {"magnitude", spec_avg.peak_magnitude}};

  std::cerr << "wrote " << write_table(cfg.out_dir, "fidelity", fid_table, fid_meta, cfg.format)
            << "\n";
  std::cerr << "wrote "
            << write_table(cfg.out_dir, "fidelity_avg", avg_table, avg_meta, cfg.format) << "\n";
  std::cerr << "wrote " << write_table(cfg.out_dir, "spectrum", spec_table, params, cfg.format)
            << "\n";
  write_summary(cfg, summary);
  return 0;
}

int run_battery(const RunConfig& cfg) {
  const DriveParams base = drive_from(cfg);
  const std::vector<int> period_list =
      cfg.period_list.empty() ? std::vector<int>{5, 31, 51, 81} : cfg.period_list;
  const std::vector<int> sizes =
      cfg.size_list.empty() ? std::vector<int>{cfg.sites} : cfg.size_list;
  const std::vector<double> omegas = grid_for(cfg, {0.0, 0.05, 11, false});
  std::cerr << "battery: " << sizes.size() * omegas.size() * period_list.size()
            << " sweep points\n";

  const std::vector<SweepPoint> points = battery_sweep(base, omegas, period_list, sizes);

  // reference protocol time for the size-scaling fit
  const bool has51 = std::find(period_list.begin(), period_list.end(), 51) != period_list.end();
  const int n_scaling = has51 ? 51 : *std::max_element(period_list.begin(), period_list.end());
  const int l_detect = *std::max_element(sizes.begin(), sizes.end());

  Table scaling;
  scaling.columns = {"sites", "n", "delta_e"};
  std::vector<double> fit_ls, fit_des;
  for (int length : sizes)
    for (const SweepPoint& p : points)
      if (p.length == length && p.periods == n_scaling && p.omega == omegas.front()) {
        scaling.rows.push_back({double(length), double(n_scaling), p.value});
        fit_ls.push_back(double(length));
        fit_des.push_back(p.value);
      }

  const Metadata params = echo_parameters(cfg, base);
  json summary;
  summary["parameters"] = json_params(params);
  summary["scaling_n"] = n_scaling;
  summary["scaling_omega"] = omegas.front();
  if (fit_ls.size() >= 3) {
    try {
      summary["beta"] = json_fit(fit_power_law(fit_ls, fit_des));
    } catch (const std::exception& ex) {
      summary["beta_note"] = ex.what();
    }
  } else {
    summary["beta_note"] = "size scaling fit needs at least 3 sizes in --size-list";
  }

  std::vector<double> prof_w, prof_y;
  profile_at(points, l_detect, n_scaling, prof_w, prof_y);
  if (prof_w.size() >= 2) {
    summary["transition"] = json_transition(detect_omega_c(prof_w, prof_y, cfg.tolerance_tau));
    summary["transition_sites"] = l_detect;
  } else {
    summary["transition_note"] = "omega_c detection needs at least 2 grid points";
  }

  Metadata scaling_meta = params;
  scaling_meta["scaling_n"] = std::to_string(n_scaling);
  scaling_meta["scaling_omega"] = format_double(omegas.front());

  std::cerr << "wrote "
            << write_table(cfg.out_dir, "delta_e_vs_omega", sweep_table(points, "delta_e"),
                           params, cfg.format)
            << "\n";
  std::cerr << "wrote " << write_table(cfg.out_dir, "scaling", scaling, scaling_meta, cfg.format)
            << "\n";
  write_summary(cfg, summary);
  return 0;
}

int run_sense(const RunConfig& cfg) {
  const DriveParams base = drive_from(cfg);
  const std::vector<int> period_list =
      cfg.period_list.empty() ? std::vector<int>{4, 10, 20, 30, 40} : cfg.period_list;
  const std::vector<int> sizes =
      cfg.size_list.empty() ? std::vector<int>{cfg.sites} : cfg.size_list;
  const std::vector<double> omegas = grid_for(cfg, {0.0, 0.3, 60, true});
  std::cerr << "sense: " << sizes.size() * omegas.size() * period_list.size()
            << " sweep points + time series\n";

  const std::vector<SweepPoint> points = qfi_sweep(base, omegas, period_list, sizes);
  const std::vector<double> fq_n = qfi_series(alternating_state(cfg.sites), base, cfg.periods);

  const bool has4 = std::find(period_list.begin(), period_list.end(), 4) != period_list.end();
  const int n_scaling = has4 ? 4 : *std::min_element(period_list.begin(), period_list.end());

  Table qfi_n_table;
  qfi_n_table.columns = {"n", "qfi"};
  std::vector<double> ns(fq_n.size());
  for (std::size_t i = 0; i < fq_n.size(); ++i) {
    ns[i] = double(i + 1);
    qfi_n_table.rows.push_back({ns[i], fq_n[i]});
  }

  Table scaling;
  scaling.columns = {"sites", "n", "qfi"};
  std::vector<double> fit_ls, fit_fq;
  for (int length : sizes)
    for (const SweepPoint& p : points)
      if (p.length == length && p.periods == n_scaling && p.omega == omegas.front()) {
        scaling.rows.push_back({double(length), double(n_scaling), p.value});
        fit_ls.push_back(double(length));
        fit_fq.push_back(p.value);
      }

  const Metadata params = echo_parameters(cfg, base);
  json summary;
  summary["parameters"] = json_params(params);
  summary["scaling_n"] = n_scaling;
  summary["scaling_omega"] = omegas.front();

  try {
    summary["time_exponent"] = json_fit(fit_time_scaling(ns, fq_n, 4.0, 40.0));
    summary["time_window"] = {4.0, 40.0};
  } catch (const std::exception& ex) {
    summary["time_exponent_note"] = ex.what();
  }

  if (fit_ls.size() >= 3) {
    try {
      summary["beta_s"] = json_fit(fit_power_law(fit_ls, fit_fq));
    } catch (const std::exception& ex) {
      summary["beta_s_note"] = ex.what();
    }
  } else {
    summary["beta_s_note"] = "size scaling fit needs at least 3 sizes in --size-list";
  }

  std::vector<double> prof_w, prof_y;
  profile_at(points, cfg.sites, n_scaling, prof_w, prof_y);
  if (prof_w.size() >= 2) {
    summary["transition"] = json_transition(detect_omega_c(prof_w, prof_y, cfg.tolerance_tau));
    summary["transition_sites"] = cfg.sites;
  } else {
    summary["transition_note"] = "omega_c detection needs at least 2 grid points";
  }

  Metadata scaling_meta = params;
  scaling_meta["scaling_n"] = std::to_string(n_scaling);
  scaling_meta["scaling_omega"] = format_double(omegas.front());

  std::cerr << "wrote "
            << write_table(cfg.out_dir, "qfi_vs_omega", sweep_table(points, "qfi"), params,
                           cfg.format)
            << "\n";
  std::cerr << "wrote " << write_table(cfg.out_dir, "qfi_vs_n", qfi_n_table, params, cfg.format)
            << "\n";
  std::cerr << "wrote " << write_table(cfg.out_dir, "scaling", scaling, scaling_meta, cfg.format)
            << "\n";
  write_summary(cfg, summary);
  return 0;
}

int run_quasienergy(const RunConfig& cfg) {
  const DriveParams drive = drive_from(cfg);
  std::cerr << "quasienergy: dense spectrum at L=" << cfg.sites << "\n";
  const EigenphaseSet set = eigenphases(drive);
  const PairingReport report = pi_pairing(set);

  Table phases;
  phases.columns = {"index", "phase"};
  for (std::size_t i = 0; i < set.phases.size(); ++i)
    phases.rows.push_back({double(i), set.phases[i]});

  const Metadata params = echo_parameters(cfg, drive);
  json pairing;
  pairing["parameters"] = json_params(params);
  pairing["max_deviation"] = report.max_deviation;
  pairing["unpaired"] = report.unpaired;
  auto& pairs = pairing["pairs"] = json::array();
  for (const PairingEntry& p : report.pairs)
    pairs.push_back({{"i", p.i}, {"j", p.j}, {"deviation", p.deviation}});

  std::cerr << "wrote " << write_table(cfg.out_dir, "phases", phases, params, cfg.format) << "\n";
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);
  const std::string pairing_path = (fs::path(cfg.out_dir) / "pairing.json").string();
  write_text_file(pairing_path, pairing.dump(2) + "\n");
  std::cerr << "wrote " << pairing_path << "\n";
  return 0;
}

int run_sweep(const RunConfig& cfg) {
  const DriveParams base = drive_from(cfg);
  const std::vector<double> alphas =
      cfg.alpha_list.empty() ? std::vector<double>{cfg.alpha} : cfg.alpha_list;
  const std::vector<int> period_list =
      cfg.period_list.empty() ? std::vector<int>{cfg.periods} : cfg.period_list;
  const std::vector<int> sizes =
      cfg.size_list.empty() ? std::vector<int>{cfg.sites} : cfg.size_list;
  const std::vector<double> omegas = grid_for(cfg, {cfg.omega, cfg.omega, 1, false});

  for (int n : period_list)
    if (n < 0) throw std::invalid_argument("period counts must be >= 0");
  int max_n = *std::max_element(period_list.begin(), period_list.end());
  std::cerr << "sweep: " << alphas.size() * sizes.size() * omegas.size() * period_list.size()
            << " points\n";

  // one tangent evolution per (alpha, L, omega) yields both observables
  struct Row {
    double alpha, length, n, omega, delta_e, qfi;
  };
  std::vector<Row> rows(alphas.size() * sizes.size() * omegas.size() * period_list.size());
  const std::size_t tasks = alphas.size() * sizes.size() * omegas.size();
  parallel_for(tasks, [&](std::size_t task) {
    const std::size_t ai = task / (sizes.size() * omegas.size());
    const std::size_t li = (task / omegas.size()) % sizes.size();
    const std::size_t wi = task % omegas.size();
    DriveParams drive = base;
    drive.spec = make_chain(sizes[li], alphas[ai]);
    drive.omega = omegas[wi];
    const FloquetContext ctx(drive);
    const config_t c = alternating_state(sizes[li]);
    TangentPair pair{init_product_state(c, sizes[li]),
                     state_t(std::size_t(1) << sizes[li], cd(0.0, 0.0))};
    std::vector<double> de_at(max_n + 1, 0.0), fq_at(max_n + 1, 0.0);
    const double e0 = ctx.energies[c];
    for (int k = 1; k <= max_n; ++k) {
      ctx.step_tangent(pair.psi, pair.dpsi);
      double mean_energy = 0.0;
      for (std::size_t x = 0; x < pair.psi.size(); ++x)
        mean_energy += std::norm(pair.psi[x]) * ctx.energies[x];
      de_at[k] = mean_energy - e0;
      fq_at[k] = qfi_from_pair(pair);
    }
    for (std::size_t pi = 0; pi < period_list.size(); ++pi) {
      Row& row = rows[task * period_list.size() + pi];
      row.alpha = alphas[ai];
      row.length = double(sizes[li]);
      row.n = double(period_list[pi]);
      row.omega = omegas[wi];
      row.delta_e = de_at[period_list[pi]];
      row.qfi = fq_at[period_list[pi]];
    }
  });

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.alpha, a.length, a.n, a.omega) < std::tie(b.alpha, b.length, b.n, b.omega);
  });

  Table table;
  table.columns = {"alpha", "sites", "n", "omega", "delta_e", "qfi"};
  for (const Row& r : rows)
    table.rows.push_back({r.alpha, r.length, r.n, r.omega, r.delta_e, r.qfi});

  const Metadata params = echo_parameters(cfg, base);
  json summary;
  summary["parameters"] = json_params(params);
  summary["points"] = rows.size();

  std::cerr << "wrote " << write_table(cfg.out_dir, "sweep", table, params, cfg.format) << "\n";
  write_summary(cfg, summary);
  return 0;
}

int run_command(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Timecrystal: return run_timecrystal(cfg);
    case Command::Battery: return run_battery(cfg);
    case Command::Sense: return run_sense(cfg);
    case Command::Quasienergy: return run_quasienergy(cfg);
    case Command::Sweep: return run_sweep(cfg);
  }
  throw std::invalid_argument("unknown command");
}

}  // namespace dtc
