#include "qxcorr/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qxcorr::oracle {

using linalg::Axis;
using linalg::cplx;
using linalg::Mat3;
using linalg::Mat4c;
using linalg::Vec3;

DensityMatrix::DensityMatrix(const Mat4c& m) : m_(m) {
  if (!m.allFinite()) throw std::invalid_argument("density matrix: non-finite entry");
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTolerance)
    throw std::invalid_argument("density matrix: not Hermitian");
  const cplx tr = m.trace();
  if (std::abs(tr.real() - 1.0) > kHermitianTolerance ||
      std::abs(tr.imag()) > kHermitianTolerance)
    throw std::invalid_argument("density matrix: trace is not 1");
  eig_ = linalg::jacobi_eigen(0.5 * (m + m.adjoint()));
  if (eig_.values(0) < -kHermitianTolerance)
    throw std::invalid_argument("density matrix: negative eigenvalue");
}

DensityMatrix DensityMatrix::from_x(const XMatrix& x) {
  x.validate();
  return DensityMatrix(to_dense(x));
}

namespace {

std::array<double, 4> clamped_populations(const DensityMatrix& rho) {
  std::array<double, 4> p{};
  for (int i = 0; i < 4; ++i) p[i] = std::max(rho.eigen().values(i), 0.0);
  return p;
}

std::array<Mat4c, 3> spins_in_eigenbasis(const DensityMatrix& rho) {
  const Mat4c& v = rho.eigen().vectors;
  std::array<Mat4c, 3> s;
  for (int mu = 0; mu < 3; ++mu)
    s[mu] = v.adjoint() * linalg::local_spin(static_cast<Axis>(mu)) * v;
  return s;
}

}  // namespace

Mat3 m_matrix(const DensityMatrix& rho) {
  const auto p = clamped_populations(rho);
  const auto s = spins_in_eigenbasis(rho);
  Mat3 out = Mat3::Zero();
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      const double sum = p[m] + p[n];
      if (sum < kPairCutoff) continue;
      const double w = 2.0 * p[m] * p[n] / sum;
      for (int mu = 0; mu < 3; ++mu)
        for (int nu = 0; nu < 3; ++nu)
          out(mu, nu) += w * (s[mu](m, n) * s[nu](n, m)).real();
    }
  }
  return 0.5 * (out + out.transpose());
}

Mat3 w_matrix(const DensityMatrix& rho) {
  const auto p = clamped_populations(rho);
  const Mat4c& v = rho.eigen().vectors;
  Eigen::Matrix<cplx, 4, 1> roots;
  for (int i = 0; i < 4; ++i) roots(i) = std::sqrt(p[i]);
  const Mat4c sq = v * roots.asDiagonal() * v.adjoint();
  std::array<Mat4c, 3> a;
  for (int mu = 0; mu < 3; ++mu)
    a[mu] = sq * linalg::local_spin(static_cast<Axis>(mu));
  Mat3 out;
  for (int mu = 0; mu < 3; ++mu)
    for (int nu = 0; nu < 3; ++nu) out(mu, nu) = (a[mu] * a[nu]).trace().real();
  return 0.5 * (out + out.transpose());
}

namespace {

Mat3 kernel(const DensityMatrix& rho, Measure which) {
  return which == Measure::lqfi ? m_matrix(rho) : w_matrix(rho);
}

}  // namespace

double measure(const DensityMatrix& rho, Measure which) {
  return 1.0 - linalg::lambda_max_jacobi(kernel(rho, which));
}

std::vector<Vec3> fibonacci_sphere(int n) {
  if (n < 1) throw std::invalid_argument("fibonacci_sphere: n must be positive");
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    pts.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return pts;
}

namespace {

// Nelder-Mead on the tangent plane at `start`, mapped back to the sphere by
// normalization.
Vec3 polish(const Mat3& k, const Vec3& start, double step) {
  Vec3 e1 = start.unitOrthogonal();
  Vec3 e2 = start.cross(e1);
  auto point = [&](const Eigen::Vector2d& t) {
    return Vec3(start + t(0) * e1 + t(1) * e2).normalized();
  };
  auto f = [&](const Eigen::Vector2d& t) {
    const Vec3 n = point(t);
    return 1.0 - n.dot(k * n);
  };

  std::array<Eigen::Vector2d, 3> x{Eigen::Vector2d(0, 0),
                                   Eigen::Vector2d(step, 0),
                                   Eigen::Vector2d(0, step)};
  std::array<double, 3> fx{f(x[0]), f(x[1]), f(x[2])};
  for (int iter = 0; iter < 5000; ++iter) {
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return fx[i] < fx[j]; });
    const int best = idx[0], mid = idx[1], worst = idx[2];
    const double size = std::max((x[mid] - x[best]).norm(), (x[worst] - x[best]).norm());
    if (size < 1e-13) break;

    const Eigen::Vector2d centroid = 0.5 * (x[best] + x[mid]);
    const Eigen::Vector2d xr = centroid + (centroid - x[worst]);
    const double fr = f(xr);
    if (fr < fx[best]) {
      const Eigen::Vector2d xe = centroid + 2.0 * (centroid - x[worst]);
      const double fe = f(xe);
      if (fe < fr) {
        x[worst] = xe;
        fx[worst] = fe;
      } else {
        x[worst] = xr;
        fx[worst] = fr;
      }
      continue;
    }
    if (fr < fx[mid]) {
      x[worst] = xr;
      fx[worst] = fr;
      continue;
    }
    const Eigen::Vector2d xc = fr < fx[worst] ? centroid + 0.5 * (xr - centroid)
                                              : centroid + 0.5 * (x[worst] - centroid);
    const double fc = f(xc);
    if (fc < std::min(fr, fx[worst])) {
      x[worst] = xc;
      fx[worst] = fc;
      continue;
    }
    for (int i : {mid, worst}) {
      x[i] = x[best] + 0.5 * (x[i] - x[best]);
      fx[i] = f(x[i]);
    }
  }
  const int best = static_cast<int>(std::min_element(fx.begin(), fx.end()) - fx.begin());
  return point(x[best]);
}

}  // namespace

Minimum minimize_over_observables(const DensityMatrix& rho, Measure which,
                                  int grid_points) {
  if (grid_points < 2000)
    throw std::invalid_argument("minimize_over_observables: need >= 2000 grid points");
  const Mat3 k = kernel(rho, which);
  const auto grid = fibonacci_sphere(grid_points);
  int best = 0;
  double best_value = 1.0 - grid[0].dot(k * grid[0]);
  for (int i = 1; i < grid_points; ++i) {
    const double val = 1.0 - grid[i].dot(k * grid[i]);
    if (val < best_value) {
      best_value = val;
      best = i;
    }
  }
  const double spacing = std::sqrt(4.0 * std::numbers::pi / grid_points);
  Minimum out;
  out.grid_value = best_value;
  out.direction = polish(k, grid[best], spacing);
  out.refined_value = 1.0 - out.direction.dot(k * out.direction);
  if (out.refined_value > best_value) {
    out.refined_value = best_value;
    out.direction = grid[best];
  }
  return out;
}

Mat4c pauli_hamiltonian(const HamiltonianParams& h) {
  h.validate();
  using linalg::kron;
  using linalg::pauli;
  const auto sx = pauli(Axis::x);
  const auto sy = pauli(Axis::y);
  const auto sz = pauli(Axis::z);
  const linalg::Mat2c id = linalg::Mat2c::Identity();
  return h.Jx * kron(sx, sx) + h.Jy * kron(sy, sy) + h.Jz * kron(sz, sz) +
         h.Dz * (kron(sx, sy) - kron(sy, sx)) +
         h.Gz * (kron(sx, sy) + kron(sy, sx)) + h.B1 * kron(sz, id) +
         h.B2 * kron(id, sz);
}

Mat4c gibbs_matrix(const Mat4c& H, double T) {
  if (!(T > 0.0) || !std::isfinite(T))
    throw std::domain_error("gibbs_matrix: temperature must be positive");
  const linalg::HermitianEigen e = linalg::jacobi_eigen(H);
  Eigen::Matrix<cplx, 4, 1> w;
  double z = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double wi = std::exp(-(e.values(i) - e.values(0)) / T);
    w(i) = wi;
    z += wi;
  }
  w /= z;
  return e.vectors * w.asDiagonal() * e.vectors.adjoint();
}

XMatrix random_xstate(std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::array<double, 4> g{};
  double total = 0.0;
  for (double& gi : g) {
    gi = expo(rng);
    total += gi;
  }
  XMatrix x;
  x.a = g[0] / total;
  x.b = g[1] / total;
  x.c = g[2] / total;
  x.d = g[3] / total;
  auto coherence = [&](double p, double q) {
    const double radius = std::sqrt(p * q * unit(rng));
    const double phase = 2.0 * std::numbers::pi * unit(rng);
    return std::polar(radius, phase);
  };
  x.u = coherence(x.a, x.d);
  x.v = coherence(x.b, x.c);
  return x;
}

EquivalenceReport equivalence_suite(std::uint64_t seed, int count) {
  if (count < 1) throw std::invalid_argument("equivalence_suite: count must be positive");
  std::mt19937_64 rng(seed);
  EquivalenceReport report;
  for (int i = 0; i < count; ++i) {
    const XMatrix x = random_xstate(rng);
    const DensityMatrix rho = DensityMatrix::from_x(x);
    const double f = measure(rho, Measure::lqfi);
    const double u = measure(rho, Measure::lqu);
    report.max_lqfi_deviation =
        std::max(report.max_lqfi_deviation, std::abs(f - lqfi_x(x).value));
    report.max_lqu_deviation =
        std::max(report.max_lqu_deviation, std::abs(u - lqu_x(x).value));

    const DensityMatrix dephased = DensityMatrix::from_x(dephase(x));
    report.max_offdiagonal =
        std::max({report.max_offdiagonal, linalg::offdiag_max(m_matrix(dephased)),
                  linalg::offdiag_max(w_matrix(dephased))});
    ++report.states;
  }
  return report;
}

}  // namespace qxcorr::oracle
