#pragma once

// Small fixed-size dense linear algebra: Pauli algebra on two qubits and
// the eigensolvers used by the brute-force verification path.

#include <Eigen/Dense>

#include <complex>

namespace qxcorr::linalg {

using cplx = std::complex<double>;
using Mat2c = Eigen::Matrix<cplx, 2, 2, Eigen::RowMajor>;
using Mat4c = Eigen::Matrix<cplx, 4, 4, Eigen::RowMajor>;
using Mat4 = Eigen::Matrix<double, 4, 4, Eigen::RowMajor>;
using Mat3 = Eigen::Matrix<double, 3, 3, Eigen::RowMajor>;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;

enum class Axis { x = 0, y = 1, z = 2 };

Mat2c pauli(Axis axis);
Mat4c kron(const Mat2c& lhs, const Mat2c& rhs);

/// sigma_axis (x) I, the local spin on qubit A.
Mat4c local_spin(Axis axis);

struct HermitianEigen {
  Vec4 values;   // ascending
  Mat4c vectors; // columns are eigenvectors
  int sweeps = 0;
};

/// Cyclic complex Jacobi for 4x4 Hermitian matrices. Iterates until the
/// off-diagonal Frobenius norm drops below `tol` times the matrix norm
/// (or below `tol` for the zero matrix).
HermitianEigen jacobi_eigen(const Mat4c& a, double tol = 1e-14);

struct SymmetricEigen3 {
  Vec3 values;  // ascending
  Mat3 vectors; // columns
};

/// Real symmetric 3x3 Jacobi.
SymmetricEigen3 jacobi_eigen3(const Mat3& a, double tol = 1e-15);

/// Largest eigenvalue of a real symmetric 3x3 matrix from the
/// characteristic cubic (trigonometric solution).
double lambda_max_cubic(const Mat3& a);

/// Largest eigenvalue via jacobi_eigen3.
double lambda_max_jacobi(const Mat3& a);

/// Sum of |a_ij|^2 over i != j.
double offdiag_norm2(const Mat4c& a);
double offdiag_max(const Mat3& a);

}  // namespace qxcorr::linalg
