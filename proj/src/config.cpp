#include "dtc/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dtc/output.hpp"

namespace dtc {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double_strict(const std::string& s) {
  double v = 0.0;
  const char* begin = s.data();
  const char* end = begin + s.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("bad number: '" + s + "'");
  return v;
}

long long parse_int_strict(const std::string& s) {
  long long v = 0;
  const char* begin = s.data();
  const char* end = begin + s.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("bad integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const std::string& item : split(s, ','))
    out.push_back(static_cast<int>(parse_int_strict(item)));
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  for (const std::string& item : split(s, ',')) out.push_back(parse_double_strict(item));
  return out;
}

template <typename T, typename Fmt>
std::string join(const std::vector<T>& v, const Fmt& fmt) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += fmt(v[i]);
  }
  return out;
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::Timecrystal: return "timecrystal";
    case Command::Battery: return "battery";
    case Command::Sense: return "sense";
    case Command::Quasienergy: return "quasienergy";
    case Command::Sweep: return "sweep";
  }
  throw std::invalid_argument("unknown command");
}

Command parse_command(const std::string& name) {
  if (name == "timecrystal") return Command::Timecrystal;
  if (name == "battery") return Command::Battery;
  if (name == "sense") return Command::Sense;
  if (name == "quasienergy") return Command::Quasienergy;
  if (name == "sweep") return Command::Sweep;
  throw std::invalid_argument("unknown command: '" + name + "'");
}

std::string format_name(OutFormat f) { return f == OutFormat::Csv ? "csv" : "json"; }

OutFormat parse_format(const std::string& name) {
  if (name == "csv") return OutFormat::Csv;
  if (name == "json") return OutFormat::Json;
  throw std::invalid_argument("unknown output format: '" + name + "'");
}

OmegaGridSpec parse_omega_grid(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() != 3 && parts.size() != 4)
    throw std::invalid_argument("omega grid must be min:max:count[:geometric]");
  OmegaGridSpec g;
  g.min = parse_double_strict(parts[0]);
  g.max = parse_double_strict(parts[1]);
  g.count = static_cast<int>(parse_int_strict(parts[2]));
  if (parts.size() == 4) {
    if (parts[3] != "geometric")
      throw std::invalid_argument("omega grid spacing must be 'geometric' when given");
    g.geometric = true;
  }
  build_omega_grid(g);  // validate eagerly
  return g;
}

std::string emit_omega_grid(const OmegaGridSpec& g) {
  std::string out = format_double(g.min) + ":" + format_double(g.max) + ":" +
                    std::to_string(g.count);
  if (g.geometric) out += ":geometric";
  return out;
}

std::vector<double> build_omega_grid(const OmegaGridSpec& g) {
  if (g.count < 1) throw std::invalid_argument("omega grid count must be >= 1");
  if (g.min < 0.0) throw std::invalid_argument("omega grid min must be >= 0");
  if (g.count == 1) {
    if (g.max != g.min) throw std::invalid_argument("single-point omega grid needs min == max");
    return {g.min};
  }
  if (!(g.max > g.min)) throw std::invalid_argument("omega grid needs max > min");

  std::vector<double> out;
  out.reserve(g.count);
  if (!g.geometric) {
    for (int k = 0; k < g.count; ++k)
      out.push_back(g.min + (g.max - g.min) * double(k) / double(g.count - 1));
    out.back() = g.max;
    return out;
  }

  double lo = g.min;
  int ladder = g.count;
  if (g.min == 0.0) {
    out.push_back(0.0);
    lo = g.max * 1e-4;
    ladder = g.count - 1;
  }
  if (ladder == 1) {
    out.push_back(g.max);
    return out;
  }
  const double ratio = std::log(g.max / lo);
  for (int k = 0; k < ladder; ++k)
    out.push_back(lo * std::exp(ratio * double(k) / double(ladder - 1)));
  out.back() = g.max;
  return out;
}

RunConfig parse_config_text(const std::string& text, RunConfig base) {
  RunConfig cfg = base;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line.substr(0, line.find('#')));
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key == "command") cfg.command = parse_command(value);
    else if (key == "sites") cfg.sites = static_cast<int>(parse_int_strict(value));
    else if (key == "alpha") cfg.alpha = parse_double_strict(value);
    else if (key == "e") cfg.e = parse_double_strict(value);
    else if (key == "omega") cfg.omega = parse_double_strict(value);
    else if (key == "kick") cfg.kick = value;
    else if (key == "omega_grid") cfg.omega_grid = parse_omega_grid(value);
    else if (key == "periods") cfg.periods = static_cast<int>(parse_int_strict(value));
    else if (key == "period_list") cfg.period_list = parse_int_list(value);
    else if (key == "size_list") cfg.size_list = parse_int_list(value);
    else if (key == "alpha_list") cfg.alpha_list = parse_double_list(value);
    else if (key == "tolerance_tau") cfg.tolerance_tau = parse_double_strict(value);
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_int_strict(value));
    else if (key == "out") cfg.out_dir = value;
    else if (key == "format") cfg.format = parse_format(value);
    else
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": unknown key '" + key + "'");
  }
  return cfg;
}

std::string emit_config(const RunConfig& cfg) {
  std::string out;
  out += "command = " + command_name(cfg.command) + "\n";
  out += "sites = " + std::to_string(cfg.sites) + "\n";
  out += "alpha = " + format_double(cfg.alpha) + "\n";
  out += "e = " + format_double(cfg.e) + "\n";
  out += "omega = " + format_double(cfg.omega) + "\n";
  if (!cfg.kick.empty()) out += "kick = " + cfg.kick + "\n";
  if (cfg.omega_grid) out += "omega_grid = " + emit_omega_grid(*cfg.omega_grid) + "\n";
  out += "periods = " + std::to_string(cfg.periods) + "\n";
  if (!cfg.period_list.empty())
    out += "period_list = " + join(cfg.period_list, [](int v) { return std::to_string(v); }) + "\n";
  if (!cfg.size_list.empty())
    out += "size_list = " + join(cfg.size_list, [](int v) { return std::to_string(v); }) + "\n";
  if (!cfg.alpha_list.empty())
    out += "alpha_list = " + join(cfg.alpha_list, [](double v) { return format_double(v); }) + "\n";
  out += "tolerance_tau = " + format_double(cfg.tolerance_tau) + "\n";
  out += "seed = " + std::to_string(cfg.seed) + "\n";
  out += "out = " + cfg.out_dir + "\n";
  out += "format = " + format_name(cfg.format) + "\n";
  return out;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), base);
}

KickMask resolve_mask(const RunConfig& cfg, config_t* custom_bits) {
  if (custom_bits) *custom_bits = 0;
  if (cfg.kick.empty())
    return cfg.command == Command::Battery ? KickMask::EvenSites : KickMask::AllSites;
  if (cfg.kick == "all") return KickMask::AllSites;
  if (cfg.kick == "even") return KickMask::EvenSites;
  if (cfg.kick.rfind("custom:", 0) == 0) {
    const std::string hex = cfg.kick.substr(7);
    if (hex.empty()) throw std::invalid_argument("custom kick mask needs hex bits: custom:<hex>");
    config_t bits = 0;
    const char* begin = hex.data();
    const char* end = begin + hex.size();
    const auto [ptr, ec] = std::from_chars(begin, end, bits, 16);
    if (ec != std::errc() || ptr != end)
      throw std::invalid_argument("bad custom kick mask: '" + hex + "'");
    if (custom_bits) *custom_bits = bits;
    return KickMask::Custom;
  }
  throw std::invalid_argument("kick must be all, even, or custom:<hex>, got '" + cfg.kick + "'");
}

}  // namespace dtc
