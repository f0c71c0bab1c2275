#include "config.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <optional>

namespace qxcli {

namespace {

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys{
      "mode", "Jz",  "r1",    "r2",   "B1",     "B2",          "T",    "Jx",
      "Jy",   "Dz",  "Gz",    "var",  "from",   "to",          "points", "out",
      "format", "plot-script", "jobs", "T0", "seed", "count"};
  return keys;
}

bool is_known(const std::string& key) {
  for (const auto& k : known_keys())
    if (k == key) return true;
  return false;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last)
    throw ConfigError(kExitConfig, "malformed number for " + key + ": '" + text + "'");
  return v;
}

template <class Int>
Int parse_integer(const std::string& key, const std::string& text) {
  Int v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last)
    throw ConfigError(kExitConfig, "malformed integer for " + key + ": '" + text + "'");
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw ConfigError(kExitConfig, "malformed boolean for " + key + ": '" + text + "'");
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(kExitIo, "cannot read config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(kExitConfig,
                        path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!is_known(key))
      throw ConfigError(kExitConfig,
                        path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    out[key] = value;
  }
  return out;
}

RunConfig build_config(const std::map<std::string, std::string>& settings) {
  RunConfig cfg;
  auto get = [&](const char* key) -> std::optional<std::string> {
    const auto it = settings.find(key);
    if (it == settings.end()) return std::nullopt;
    return it->second;
  };
  auto number = [&](const char* key, double fallback) {
    const auto v = get(key);
    return v ? parse_number(key, *v) : fallback;
  };

  const auto mode = get("mode");
  if (!mode) throw ConfigError(kExitUsage, "missing --mode");
  if (*mode == "eval")
    cfg.mode = Mode::eval;
  else if (*mode == "sweep")
    cfg.mode = Mode::sweep;
  else if (*mode == "transitions")
    cfg.mode = Mode::transitions;
  else if (*mode == "selftest")
    cfg.mode = Mode::selftest;
  else
    throw ConfigError(kExitUsage, "unknown mode '" + *mode + "'");

  const bool reduced = get("r1") || get("r2");
  const bool full = get("Jx") || get("Jy") || get("Dz") || get("Gz");
  if (reduced && full)
    throw ConfigError(kExitConfig,
                      "r1/r2 cannot be combined with Jx/Jy/Dz/Gz; choose one parameter set");
  cfg.full = full;
  cfg.T = number("T", 1.0);
  const double Jz = number("Jz", 0.0);
  const double B1 = number("B1", 0.0);
  const double B2 = number("B2", 0.0);
  if (full) {
    cfg.hamiltonian = {number("Jx", 0.0), number("Jy", 0.0), Jz, number("Dz", 0.0),
                       number("Gz", 0.0), B1, B2};
  } else {
    cfg.reduced = {Jz, number("r1", 0.0), number("r2", 0.0), B1, B2, cfg.T};
  }
  if (const auto v = get("T0")) cfg.zero_t = parse_bool("T0", *v);

  if (const auto v = get("var")) {
    if (qx_parse_sweep_variable(v->c_str(), &cfg.variable) != QX_OK)
      throw ConfigError(kExitConfig, "unknown sweep variable '" + *v + "'");
  }
  if (cfg.mode == Mode::sweep || cfg.mode == Mode::transitions) {
    if (!get("from") || !get("to"))
      throw ConfigError(kExitUsage, "sweep and transitions need --from and --to");
  }
  cfg.from = number("from", 0.0);
  cfg.to = number("to", 0.0);
  if (const auto v = get("points")) cfg.points = parse_integer<int>("points", *v);
  if (const auto v = get("jobs")) {
    cfg.jobs = parse_integer<unsigned>("jobs", *v);
    if (cfg.jobs == 0) throw ConfigError(kExitConfig, "jobs must be at least 1");
  }
  if (const auto v = get("out")) cfg.out = *v;
  if (const auto v = get("format")) {
    if (*v == "csv")
      cfg.format = Format::csv;
    else if (*v == "tsv")
      cfg.format = Format::tsv;
    else
      throw ConfigError(kExitConfig, "unknown format '" + *v + "'");
  }
  if (const auto v = get("plot-script")) cfg.plot_script = parse_bool("plot-script", *v);
  if (cfg.plot_script && cfg.out.empty())
    throw ConfigError(kExitUsage, "--plot-script needs --out");
  if (const auto v = get("seed")) cfg.seed = parse_integer<std::uint64_t>("seed", *v);
  if (const auto v = get("count")) {
    cfg.count = parse_integer<int>("count", *v);
    if (cfg.count < 1) throw ConfigError(kExitConfig, "count must be at least 1");
  }
  return cfg;
}

bool parse_config(int argc, const char* const* argv, RunConfig& out, std::string& help) {
  CLI::App app{"Local quantum Fisher information and local quantum uncertainty of "
               "thermal two-qubit X states",
               "qxcorr"};
  std::map<std::string, std::string> flags;
  std::string config_path;
  bool plot = false;
  bool zero_t = false;

  auto string_option = [&](const std::string& key, const std::string& description) {
    app.add_option_function<std::string>(
        "--" + key, [&flags, key](const std::string& v) { flags[key] = v; }, description);
  };
  string_option("mode", "eval | sweep | transitions | selftest");
  string_option("Jz", "zz coupling");
  string_option("r1", "radius of the |00>,|11> block coupling");
  string_option("r2", "radius of the |01>,|10> block coupling");
  string_option("B1", "field on spin 1");
  string_option("B2", "field on spin 2");
  string_option("T", "temperature (>= 1e-6)");
  string_option("Jx", "xx coupling (full Hamiltonian)");
  string_option("Jy", "yy coupling (full Hamiltonian)");
  string_option("Dz", "DM coupling (full Hamiltonian)");
  string_option("Gz", "KSEA coupling (full Hamiltonian)");
  string_option("var", "swept variable: T, B1, B2, r1, r2, Jz");
  string_option("from", "sweep start");
  string_option("to", "sweep end");
  string_option("points", "grid points (default 1000)");
  string_option("out", "output file (default stdout)");
  string_option("format", "csv | tsv");
  string_option("jobs", "worker threads for grids");
  string_option("seed", "selftest seed");
  string_option("count", "selftest states (default 100)");
  app.add_option("--config", config_path, "key = value file; flags take precedence");
  app.add_flag("--plot-script", plot, "also write a gnuplot script next to --out");
  app.add_flag("--T0", zero_t, "eval: zero-temperature limits instead of finite T");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    help = app.help();
    return false;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(kExitUsage, e.what());
  }
  if (plot) flags["plot-script"] = "true";
  if (zero_t) flags["T0"] = "true";

  std::map<std::string, std::string> settings;
  if (!config_path.empty()) settings = read_config_file(config_path);
  for (const auto& [k, v] : flags) settings[k] = v;
  out = build_config(settings);
  return true;
}

}  // namespace qxcli
