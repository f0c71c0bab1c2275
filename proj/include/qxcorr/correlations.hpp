#pragma once

// Local quantum Fisher information (LQFI) and local quantum uncertainty
// (LQU) of two-qubit X states, measured on qubit A.
//
// Both measures are 1 - max{K_xx, K_zz} for a diagonal 3x3 matrix K
// (K = M for LQFI, K = W for LQU). The "0-branch" is 1 - K_zz and the
// "1-branch" is 1 - K_xx.

#include <string_view>

#include "qxcorr/xalgebra.hpp"
#include "qxcorr/xmodel.hpp"

namespace qxcorr {

enum class Measure { lqfi, lqu };
enum class Branch { zero, one, boundary };

std::string_view to_string(Measure m);
std::string_view to_string(Branch b);

/// Relative gap between the branch complements below which the active
/// branch is reported as `boundary`.
inline constexpr double kBoundaryTolerance = 1e-10;

/// Ratio-denominator threshold in the simplified W and M entries.
inline constexpr double kRatioDenominator = 1e-14;
inline constexpr double kRatioNumerator = 1e-12;

struct BranchPair {
  double branch0 = 0.0;
  double branch1 = 0.0;
  double value = 0.0;  // min(branch0, branch1)
  Branch active = Branch::boundary;
  // log(1 - branch0), log(1 - branch1): K_zz and K_xx on a log scale,
  // accurate even when both branches round to 1.
  double log_complement0 = 0.0;
  double log_complement1 = 0.0;

  /// log K_xx - log K_zz; same sign as branch0 - branch1.
  double crossing_function() const noexcept {
    return log_complement1 - log_complement0;
  }
};

/// Assembles a BranchPair and labels it from the complements.
BranchPair make_branch_pair(double branch0, double branch1, double log_c0,
                            double log_c1);

/// Label rule alone, for callers that only carry complements.
Branch classify_branch(double log_c0, double log_c1);

struct MEigenvalues {
  double Mxx = 0.0;
  double Myy = 0.0;
  double Mzz = 0.0;
};

struct WEigenvalues {
  double Wxx = 0.0;
  double Wyy = 0.0;
  double Wzz = 0.0;
};

/// Simplified closed forms. x must be dephased, s = spectrum(x). Falls back
/// to m_eigenvalues_raw when a cross-pair population sum vanishes.
MEigenvalues m_eigenvalues(const XMatrix& x, const XSpectrum& s);

/// Spectral-sum forms expressed through the block rotation cosines.
MEigenvalues m_eigenvalues_raw(const XMatrix& x, const XSpectrum& s);

/// Simplified closed forms; degenerate ratios follow the zero-limit rule and
/// anything else with a vanishing denominator goes to the oracle.
WEigenvalues w_eigenvalues(const XMatrix& x, const XSpectrum& s);
WEigenvalues w_eigenvalues_raw(const XMatrix& x, const XSpectrum& s);

/// Any valid X matrix; it is dephased first.
BranchPair lqfi_x(const XMatrix& x);
BranchPair lqu_x(const XMatrix& x);

/// All four thermal branches from the closed temperature forms.
struct ThermalBranches {
  BranchPair lqfi;
  BranchPair lqu;
};

/// Throws std::domain_error for T <= 0 and std::invalid_argument for
/// otherwise invalid parameters.
ThermalBranches thermal_branches(const XStateParams& p);
BranchPair lqfi_thermal(const XStateParams& p);
BranchPair lqu_thermal(const XStateParams& p);

}  // namespace qxcorr
