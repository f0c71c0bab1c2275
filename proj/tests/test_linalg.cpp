#include <doctest.h>

#include <random>

#include "qxcorr/linalg.hpp"

using namespace qxcorr::linalg;

namespace {

Mat4c random_hermitian(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat4c a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = cplx(g(rng), g(rng));
  return 0.5 * (a + a.adjoint());
}

Mat3 random_symmetric(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat3 a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = g(rng);
  return 0.5 * (a + a.transpose());
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("pauli algebra") {
    const Mat2c x = pauli(Axis::x), y = pauli(Axis::y), z = pauli(Axis::z);
    const Mat2c id = Mat2c::Identity();
    CHECK((x * x - id).norm() == 0.0);
    CHECK((y * y - id).norm() == 0.0);
    CHECK((z * z - id).norm() == 0.0);
    CHECK((x * y - cplx(0, 1) * z).norm() == 0.0);
    CHECK((y * z - cplx(0, 1) * x).norm() == 0.0);
  }

  TEST_CASE("kron and local spin") {
    const Mat4c sz = local_spin(Axis::z);
    CHECK(sz(0, 0) == cplx(1));
    CHECK(sz(1, 1) == cplx(1));
    CHECK(sz(2, 2) == cplx(-1));
    CHECK(sz(3, 3) == cplx(-1));
    const Mat4c xx = kron(pauli(Axis::x), pauli(Axis::x));
    CHECK(xx(0, 3) == cplx(1));
    CHECK(xx(1, 2) == cplx(1));
    CHECK(offdiag_norm2(sz) == 0.0);
    for (int mu = 0; mu < 3; ++mu) {
      const Mat4c s = local_spin(static_cast<Axis>(mu));
      CHECK((s * s).trace().real() == doctest::Approx(4.0));
    }
  }

  TEST_CASE("jacobi agrees with Eigen on random Hermitian matrices") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
      const Mat4c a = random_hermitian(rng);
      const HermitianEigen e = jacobi_eigen(a);
      Eigen::SelfAdjointEigenSolver<Mat4c> ref(a);
      for (int i = 0; i < 4; ++i) CHECK(std::abs(e.values(i) - ref.eigenvalues()(i)) < 1e-12);
      const Mat4c back = e.vectors * e.values.cast<cplx>().asDiagonal() * e.vectors.adjoint();
      CHECK((back - a).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((e.vectors.adjoint() * e.vectors - Mat4c::Identity()).cwiseAbs().maxCoeff() <
            1e-13);
    }
  }

  TEST_CASE("jacobi on a diagonal matrix needs no sweeps") {
    Mat4c a = Mat4c::Zero();
    a(0, 0) = 3.0;
    a(1, 1) = -1.0;
    a(2, 2) = 2.0;
    a(3, 3) = 0.5;
    const HermitianEigen e = jacobi_eigen(a);
    CHECK(e.sweeps == 0);
    CHECK(e.values(0) == -1.0);
    CHECK(e.values(3) == 3.0);
  }

  TEST_CASE("jacobi handles degenerate spectra") {
    const HermitianEigen e = jacobi_eigen(local_spin(Axis::x));
    CHECK(e.values(0) == doctest::Approx(-1.0));
    CHECK(e.values(1) == doctest::Approx(-1.0));
    CHECK(e.values(2) == doctest::Approx(1.0));
    CHECK(e.values(3) == doctest::Approx(1.0));
    const HermitianEigen z = jacobi_eigen(Mat4c::Zero());
    CHECK(z.values.norm() == 0.0);
  }

  TEST_CASE("cubic and Jacobi routes to lambda_max agree") {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 500; ++k) {
      const Mat3 a = random_symmetric(rng);
      CHECK(std::abs(lambda_max_cubic(a) - lambda_max_jacobi(a)) < 1e-12);
    }
    Mat3 d = Mat3::Zero();
    d(0, 0) = 1.0;
    d(1, 1) = 1.0;
    CHECK(lambda_max_cubic(d) == doctest::Approx(1.0));
    CHECK(lambda_max_cubic(Mat3::Identity()) == doctest::Approx(1.0));
    CHECK(lambda_max_cubic(Mat3::Zero()) == 0.0);
    Mat3 rank1 = Eigen::Vector3d(1, 2, 2).normalized() * Eigen::Vector3d(1, 2, 2).normalized().transpose();
    CHECK(std::abs(lambda_max_cubic(rank1) - 1.0) < 1e-12);
    CHECK(std::abs(lambda_max_jacobi(rank1) - 1.0) < 1e-12);
  }

  TEST_CASE("symmetric 3x3 Jacobi reconstructs the matrix") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 100; ++k) {
      const Mat3 a = random_symmetric(rng);
      const SymmetricEigen3 e = jacobi_eigen3(a);
      CHECK(e.values(0) <= e.values(1));
      CHECK(e.values(1) <= e.values(2));
      const Mat3 back = e.vectors * e.values.asDiagonal() * e.vectors.transpose();
      CHECK((back - a).cwiseAbs().maxCoeff() < 1e-13);
      CHECK(offdiag_max(e.vectors.transpose() * a * e.vectors) < 1e-12);
    }
  }
}
