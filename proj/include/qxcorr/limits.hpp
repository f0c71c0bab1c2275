#pragma once

// Asymptotics of the four thermal branches: the printed high-temperature
// expansions and the zero-temperature limits.

#include <optional>

#include "qxcorr/xmodel.hpp"

namespace qxcorr {

enum class BranchId { F0, F1, U0, U1 };

struct SeriesValue {
  double value = 0.0;
  int order = 0;  // highest power of 1/T included
};

/// F0 and U0 through 1/T^4, F1 and U1 through 1/T^3.
SeriesValue high_t_series(const XStateParams& p, BranchId which);

/// Hypersurface R1 = R2 + 2 Jz is detected within this tolerance.
inline constexpr double kZeroTDegeneracy = 1e-12;

/// T = 0 value of F0, U0 or U1 (p.T is ignored). std::nullopt marks the
/// indeterminate hypersurface R1 = R2 + 2 Jz; F0 and U0 still return a
/// value there when both one-sided limits coincide. F1 has no zero-T form
/// and throws std::invalid_argument.
std::optional<double> zero_t_limit(const XStateParams& p, BranchId which);

}  // namespace qxcorr
