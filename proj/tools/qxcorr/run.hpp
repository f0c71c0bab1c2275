#pragma once

#include <iosfwd>
#include <string>

#include "config.hpp"

namespace qxcli {

/// Shortest round-trip-free fixed precision: 12 significant digits, dot
/// decimal separator, independent of the locale.
std::string format_number(double v);

/// Executes the configured mode. Tables go to `out` unless cfg.out names a
/// file; diagnostics go to `err`. Returns the process exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace qxcli
