#pragma once

// Brute-force path: generic spectral evaluation of the M and W matrices
// from their definitions, direct minimization over local observables on
// qubit A, and a dense Gibbs state. Shares nothing with the closed forms
// beyond the input matrix.

#include <cstdint>
#include <random>
#include <vector>

#include "qxcorr/correlations.hpp"
#include "qxcorr/linalg.hpp"
#include "qxcorr/xmodel.hpp"

namespace qxcorr::oracle {

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kPairCutoff = 1e-14;

class DensityMatrix {
 public:
  /// Hermitian, unit trace and eigenvalues >= -1e-12, or
  /// std::invalid_argument.
  explicit DensityMatrix(const linalg::Mat4c& m);
  static DensityMatrix from_x(const XMatrix& x);

  const linalg::Mat4c& matrix() const noexcept { return m_; }
  const linalg::HermitianEigen& eigen() const noexcept { return eig_; }

 private:
  linalg::Mat4c m_;
  linalg::HermitianEigen eig_;
};

/// M_{mu nu} = sum_{p_m + p_n > 1e-14} 2 p_m p_n / (p_m + p_n)
///             <m|s_mu|n><n|s_nu|m>
linalg::Mat3 m_matrix(const DensityMatrix& rho);

/// W_{mu nu} = tr{rho^1/2 s_mu rho^1/2 s_nu}
linalg::Mat3 w_matrix(const DensityMatrix& rho);

/// 1 - lambda_max(K), with lambda_max from the Jacobi route.
double measure(const DensityMatrix& rho, Measure which);

struct Minimum {
  double grid_value = 0.0;     // best over the Fibonacci grid
  double refined_value = 0.0;  // after Nelder-Mead polish
  linalg::Vec3 direction;      // unit Bloch vector of the observable
};

/// Minimizes 1 - n^T K n over unit n. Grid ties resolve to the lowest index.
Minimum minimize_over_observables(const DensityMatrix& rho, Measure which,
                                  int grid_points = 2000);

/// Spherical Fibonacci points, deterministic.
std::vector<linalg::Vec3> fibonacci_sphere(int n);

/// Dense Hamiltonian assembled from Pauli tensor products.
linalg::Mat4c pauli_hamiltonian(const HamiltonianParams& h);

/// exp(-H/T)/Z through eigendecomposition of H.
linalg::Mat4c gibbs_matrix(const linalg::Mat4c& H, double T);

/// Random valid X state: Dirichlet-like populations, coherences uniform in
/// the positivity disc with random phases.
XMatrix random_xstate(std::mt19937_64& rng);

struct EquivalenceReport {
  int states = 0;
  double max_lqfi_deviation = 0.0;
  double max_lqu_deviation = 0.0;
  double max_offdiagonal = 0.0;  // of M and W for the dephased inputs
  double max_deviation() const noexcept {
    return max_lqfi_deviation > max_lqu_deviation ? max_lqfi_deviation
                                                  : max_lqu_deviation;
  }
};

/// Closed form vs brute force over `count` random X states.
EquivalenceReport equivalence_suite(std::uint64_t seed, int count);

}  // namespace qxcorr::oracle
