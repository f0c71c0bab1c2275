#pragma once

// Thermal two-qubit X states of the Heisenberg XYZ model with DM and KSEA
// couplings in an inhomogeneous longitudinal field.

#include <array>
#include <complex>

#include "qxcorr/linalg.hpp"

namespace qxcorr {

/// Tolerance used when validating X matrices that may come from files.
inline constexpr double kXMatrixTolerance = 1e-9;

/// Couplings of H = Jx sx sx + Jy sy sy + Jz sz sz + Dz (sx sy - sy sx)
///                  + Gz (sx sy + sy sx) + B1 sz.1 + B2 1.sz.
struct HamiltonianParams {
  double Jx = 0.0;
  double Jy = 0.0;
  double Jz = 0.0;
  double Dz = 0.0;
  double Gz = 0.0;
  double B1 = 0.0;
  double B2 = 0.0;

  /// Throws std::invalid_argument if any coupling is not finite.
  void validate() const;
};

/// Internal radii r1, r2 and full radii R1, R2 of the two 2x2 blocks.
struct DerivedRadii {
  double r1 = 0.0;
  double r2 = 0.0;
  double R1 = 0.0;
  double R2 = 0.0;
};

DerivedRadii radii(const HamiltonianParams& h);

/// Two-qubit density matrix with nonzero entries only on the diagonal
/// (a, b, c, d) and anti-diagonal (u at (0,3), v at (1,2)).
struct XMatrix {
  double a = 0.25;
  double b = 0.25;
  double c = 0.25;
  double d = 0.25;
  std::complex<double> u{};
  std::complex<double> v{};

  /// Nonnegative populations, unit trace, ad >= |u|^2 and bc >= |v|^2, all
  /// within `tol`. Throws std::invalid_argument otherwise.
  void validate(double tol = kXMatrixTolerance) const;

  /// True when u and v are real and nonnegative.
  bool is_dephased() const noexcept;
};

/// Reduced parameterization: the correlations depend only on these.
struct XStateParams {
  double Jz = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double B1 = 0.0;
  double B2 = 0.0;
  double T = 1.0;

  /// r1, r2 >= 0, T > 0, everything finite.
  void validate() const;

  /// The Gz = Dz = 0 realization: Jx = (r2 + r1) / 2, Jy = (r2 - r1) / 2.
  HamiltonianParams realize() const;

  DerivedRadii radii() const;

  /// Reduced view of a full Hamiltonian at temperature T.
  static XStateParams from(const HamiltonianParams& h, double T);
};

/// (Jz + R1, Jz - R1, -Jz + R2, -Jz - R2).
std::array<double, 4> energy_levels(const HamiltonianParams& h);

/// Z = sum_n exp(-E_n / T). Overflows to +inf once the ground-state energy
/// dominates beyond double range; use log_partition_function there.
double partition_function(const HamiltonianParams& h, double T);
double log_partition_function(const HamiltonianParams& h, double T);

/// exp(-H/T)/Z in X form, evaluated with the ground energy factored out so
/// it stays finite for any T > 0. Throws std::domain_error for T <= 0.
XMatrix gibbs_xstate(const HamiltonianParams& h, double T);

/// Replaces u, v by |u|, |v| (a local-unitary equivalent state).
XMatrix dephase(const XMatrix& x) noexcept;

/// Open 4x4 form of the Hamiltonian in the computational basis
/// |00>, |01>, |10>, |11>.
linalg::Mat4c hamiltonian_matrix(const HamiltonianParams& h);

linalg::Mat4c to_dense(const XMatrix& x);

}  // namespace qxcorr
