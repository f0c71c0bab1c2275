#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qxcorr/qxcorr.h"

namespace qxcli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitConfig = 3,
  kExitDomain = 4,
  kExitIo = 5,
  kExitSelftest = 6,
};

enum class Mode { eval, sweep, transitions, selftest };
enum class Format { csv, tsv };

inline constexpr double kMinTemperature = 1e-6;
inline constexpr double kSelftestTolerance = 1e-9;
inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct RunConfig {
  Mode mode = Mode::eval;
  bool full = false;  // parameters given as a full Hamiltonian
  qx_hamiltonian hamiltonian{};
  qx_reduced_params reduced{0.0, 0.0, 0.0, 0.0, 0.0, 1.0};
  double T = 1.0;
  bool zero_t = false;

  qx_sweep_variable variable = QX_VAR_T;
  double from = 0.0;
  double to = 0.0;
  int points = 1000;

  std::string out;
  Format format = Format::csv;
  bool plot_script = false;
  unsigned jobs = 1;

  std::uint64_t seed = kDefaultSeed;
  int count = 100;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

/// `key = value` lines, `#` starts a comment. Unknown keys and lines
/// without `=` are config errors; an unreadable file is an I/O error.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Builds the configuration from already-merged settings.
RunConfig build_config(const std::map<std::string, std::string>& settings);

/// Command line plus optional --config file; flags override the file.
/// Throws ConfigError. Returns false when only help was requested.
bool parse_config(int argc, const char* const* argv, RunConfig& out, std::string& help);

}  // namespace qxcli
