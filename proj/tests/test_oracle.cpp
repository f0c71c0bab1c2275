#include <doctest.h>

#include <cmath>
#include <random>

#include "qxcorr/correlations.hpp"
#include "qxcorr/oracle.hpp"
#include "qxcorr/xalgebra.hpp"
#include "support.hpp"

using namespace qxcorr;
using namespace qxcorr::oracle;
using linalg::cplx;
using linalg::Mat4c;

namespace {

Mat4c random_density(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat4c a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = cplx(g(rng), g(rng));
  Mat4c rho = a * a.adjoint();
  return rho / rho.trace();
}

Mat4c bell_matrix() {
  XMatrix x;
  x.a = 0.5;
  x.b = 0.0;
  x.c = 0.0;
  x.d = 0.5;
  x.u = 0.5;
  return to_dense(x);
}

// exp(i phi sigma_z / 2) on each qubit.
Mat4c local_phases(double phi_a, double phi_b) {
  linalg::Mat2c a = linalg::Mat2c::Zero(), b = linalg::Mat2c::Zero();
  a(0, 0) = std::polar(1.0, phi_a / 2);
  a(1, 1) = std::polar(1.0, -phi_a / 2);
  b(0, 0) = std::polar(1.0, phi_b / 2);
  b(1, 1) = std::polar(1.0, -phi_b / 2);
  return linalg::kron(a, b);
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("density matrix validation") {
    Mat4c m = Mat4c::Identity() / 4.0;
    CHECK_NOTHROW(DensityMatrix{m});
    Mat4c h = m;
    h(0, 1) = 0.1;
    CHECK_THROWS_AS(DensityMatrix{h}, std::invalid_argument);
    CHECK_THROWS_AS(DensityMatrix{Mat4c(m * 2.0)}, std::invalid_argument);
    Mat4c neg = Mat4c::Zero();
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix{neg}, std::invalid_argument);
  }

  TEST_CASE("maximally mixed") {
    const DensityMatrix rho(Mat4c::Identity() / 4.0);
    CHECK((m_matrix(rho) - linalg::Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((w_matrix(rho) - linalg::Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    for (Measure which : {Measure::lqfi, Measure::lqu}) {
      CHECK(std::abs(measure(rho, which)) < 1e-14);
      CHECK(std::abs(minimize_over_observables(rho, which).refined_value) < 1e-14);
    }
  }

  TEST_CASE("Bell state") {
    const DensityMatrix rho(bell_matrix());
    for (Measure which : {Measure::lqfi, Measure::lqu}) {
      CHECK(measure(rho, which) == doctest::Approx(1.0));
      CHECK(minimize_over_observables(rho, which).refined_value == doctest::Approx(1.0));
    }
  }

  TEST_CASE("pure state square root is the state itself") {
    std::mt19937_64 rng(61);
    std::normal_distribution<double> g;
    Eigen::Matrix<cplx, 4, 1> psi;
    for (int i = 0; i < 4; ++i) psi(i) = cplx(g(rng), g(rng));
    psi.normalize();
    const Mat4c p = psi * psi.adjoint();
    const DensityMatrix rho(p);
    const linalg::Mat3 w = w_matrix(rho);
    for (int mu = 0; mu < 3; ++mu)
      for (int nu = 0; nu < 3; ++nu) {
        const Mat4c smu = linalg::local_spin(static_cast<linalg::Axis>(mu));
        const Mat4c snu = linalg::local_spin(static_cast<linalg::Axis>(nu));
        const double direct = (p * smu * p * snu).trace().real();
        // Zero eigenvalues come back as ~1e-16 and their square roots as ~1e-8.
        CHECK(std::abs(w(mu, nu) - 0.5 * (direct + (p * snu * p * smu).trace().real())) < 1e-7);
      }
  }

  TEST_CASE("dephased X states give diagonal matrices matching the closed forms") {
    std::mt19937_64 rng(62);
    for (int k = 0; k < 300; ++k) {
      const XMatrix x = dephase(random_xstate(rng));
      const DensityMatrix rho = DensityMatrix::from_x(x);
      const linalg::Mat3 m = m_matrix(rho);
      const linalg::Mat3 w = w_matrix(rho);
      CHECK(linalg::offdiag_max(m) < 1e-12);
      CHECK(linalg::offdiag_max(w) < 1e-12);
      const XSpectrum s = spectrum(x);
      const MEigenvalues me = m_eigenvalues(x, s);
      const WEigenvalues we = w_eigenvalues(x, s);
      CHECK(std::abs(m(0, 0) - me.Mxx) < 1e-10);
      CHECK(std::abs(m(2, 2) - me.Mzz) < 1e-10);
      CHECK(std::abs(w(0, 0) - we.Wxx) < 1e-10);
      CHECK(std::abs(w(2, 2) - we.Wzz) < 1e-10);
    }
  }

  TEST_CASE("random X states agree with the closed forms") {
    std::mt19937_64 rng(63);
    for (int k = 0; k < 300; ++k) {
      const XMatrix x = random_xstate(rng);
      const DensityMatrix rho = DensityMatrix::from_x(x);
      CHECK(std::abs(measure(rho, Measure::lqfi) - lqfi_x(x).value) < 1e-9);
      CHECK(std::abs(measure(rho, Measure::lqu) - lqu_x(x).value) < 1e-9);
    }
  }

  TEST_CASE("cubic lambda_max on oracle matrices") {
    std::mt19937_64 rng(64);
    for (int k = 0; k < 200; ++k) {
      const DensityMatrix rho(random_density(rng));
      for (const linalg::Mat3& K : {m_matrix(rho), w_matrix(rho)})
        CHECK(std::abs(linalg::lambda_max_cubic(K) - linalg::lambda_max_jacobi(K)) < 1e-12);
    }
  }

  TEST_CASE("local unitary invariance") {
    std::mt19937_64 rng(65);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    for (int k = 0; k < 100; ++k) {
      const Mat4c rho = random_density(rng);
      const Mat4c U = local_phases(angle(rng), angle(rng));
      const DensityMatrix a(rho);
      const DensityMatrix b(Mat4c(U * rho * U.adjoint()));
      for (Measure which : {Measure::lqfi, Measure::lqu})
        CHECK(std::abs(measure(a, which) - measure(b, which)) < 1e-10);
    }
  }

  TEST_CASE("minimization over observables") {
    const XMatrix x = gibbs_xstate(qxtest::kDoubleCrossingState.realize(), 0.5);
    const DensityMatrix rho = DensityMatrix::from_x(x);
    for (Measure which : {Measure::lqfi, Measure::lqu}) {
      const Minimum m = minimize_over_observables(rho, which);
      const double ev = measure(rho, which);
      CHECK(std::abs(m.refined_value - ev) < 1e-9);
      CHECK(m.grid_value >= ev - 1e-12);
      CHECK(m.direction.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
    std::mt19937_64 rng(66);
    for (int k = 0; k < 50; ++k) {
      const DensityMatrix r(random_density(rng));
      for (Measure which : {Measure::lqfi, Measure::lqu}) {
        const Minimum m = minimize_over_observables(r, which);
        const double ev = measure(r, which);
        CHECK(std::abs(m.refined_value - ev) < 1e-9);
        CHECK(m.grid_value >= ev - 1e-12);
      }
    }
    CHECK_THROWS_AS(minimize_over_observables(rho, Measure::lqfi, 100), std::invalid_argument);
  }

  TEST_CASE("Fibonacci sphere") {
    const auto a = fibonacci_sphere(2000);
    const auto b = fibonacci_sphere(2000);
    CHECK(a.size() == 2000);
    linalg::Vec3 centroid = linalg::Vec3::Zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(std::abs(a[i].norm() - 1.0) < 1e-12);
      CHECK(a[i] == b[i]);
      centroid += a[i];
    }
    CHECK(centroid.norm() / 2000.0 < 1e-3);
  }

  TEST_CASE("dense Gibbs matrix") {
    CHECK_THROWS_AS(gibbs_matrix(Mat4c::Identity(), 0.0), std::domain_error);
    const Mat4c g = gibbs_matrix(Mat4c::Zero(), 1.0);
    CHECK((g - Mat4c::Identity() / 4.0).cwiseAbs().maxCoeff() < 1e-15);
  }

  TEST_CASE("equivalence suite is deterministic and tight") {
    const EquivalenceReport a = equivalence_suite(7, 50);
    const EquivalenceReport b = equivalence_suite(7, 50);
    CHECK(a.states == 50);
    CHECK(a.max_lqfi_deviation == b.max_lqfi_deviation);
    CHECK(a.max_lqu_deviation == b.max_lqu_deviation);
    CHECK(a.max_deviation() < 1e-9);
    CHECK(a.max_offdiagonal < 1e-12);
  }
}
