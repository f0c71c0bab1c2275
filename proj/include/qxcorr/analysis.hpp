#pragma once

// Parameter sweeps of the thermal closed forms, sudden-transition
// (branch-crossing) location and the Bell-diagonal boundary check.

#include <span>
#include <string_view>
#include <vector>

#include "qxcorr/correlations.hpp"
#include "qxcorr/xmodel.hpp"

namespace qxcorr {

enum class SweepVariable { T, B1, B2, r1, r2, Jz };

std::string_view to_string(SweepVariable v);
/// Throws std::invalid_argument for an unknown name.
SweepVariable parse_sweep_variable(std::string_view name);

struct SweepSpec {
  XStateParams base;
  SweepVariable variable = SweepVariable::T;
  double from = 0.0;
  double to = 1.0;
  int points = 1000;

  /// from < to, points >= 2, and the whole range stays in the domain of the
  /// swept variable (T > 0, r >= 0). std::invalid_argument otherwise.
  void validate() const;

  /// i-th grid abscissa; the last one is exactly `to`.
  double abscissa(int i) const noexcept;
};

/// base with the swept variable replaced by `value`.
XStateParams at(const SweepSpec& spec, double value);

struct SweepRow {
  double x = 0.0;
  double F0 = 0.0, F1 = 0.0, F = 0.0;
  Branch F_branch = Branch::boundary;
  double U0 = 0.0, U1 = 0.0, U = 0.0;
  Branch U_branch = Branch::boundary;
};

/// One row per grid point, ordered by x. `jobs` worker threads; the result
/// does not depend on it.
std::vector<SweepRow> sweep(const SweepSpec& spec, unsigned jobs = 1);

inline constexpr double kBracketWidth = 1e-8;
inline constexpr double kCrossingResidual = 1e-10;

struct TransitionPoint {
  Measure measure = Measure::lqfi;
  double location = 0.0;
  double lo = 0.0;  // final bracket
  double hi = 0.0;
  double residual = 0.0;  // |branch0 - branch1| at location
};

/// Sign changes of branch0 - branch1 between adjacent grid points, each
/// bisected. Sorted by location. Tangential contacts are not reported.
std::vector<TransitionPoint> find_transitions(const SweepSpec& spec,
                                              unsigned jobs = 1);

enum class BoundarySide { below, on_boundary, above };
std::string_view to_string(BoundarySide s);

struct BellDiagonalReport {
  BoundarySide side = BoundarySide::on_boundary;
  Branch lqfi_branch = Branch::boundary;  // at the first sampled T
  Branch lqu_branch = Branch::boundary;
  bool temperature_independent = true;    // labels equal at every sampled T
};

inline constexpr double kDefaultBoundaryTemperatures[] = {0.05, 0.5, 5.0,
                                                          50.0};

/// Position of (r1, r2) relative to r1 + r2 = 2|Jz| for a field-free state,
/// with the active branches sampled over `temperatures`. Nonzero fields
/// throw std::invalid_argument.
BellDiagonalReport bell_diagonal_boundary(
    const XStateParams& p,
    std::span<const double> temperatures = kDefaultBoundaryTemperatures);

}  // namespace qxcorr
