#include "qxcorr/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace qxcorr::linalg {

Mat2c pauli(Axis axis) {
  using namespace std::complex_literals;
  Mat2c s;
  switch (axis) {
    case Axis::x:
      s << 0.0, 1.0, 1.0, 0.0;
      break;
    case Axis::y:
      s << 0.0, -1.0i, 1.0i, 0.0;
      break;
    case Axis::z:
      s << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return s;
}

Mat4c kron(const Mat2c& lhs, const Mat2c& rhs) {
  Mat4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = lhs(i, j) * rhs;
  return out;
}

Mat4c local_spin(Axis axis) { return kron(pauli(axis), Mat2c::Identity()); }

double offdiag_norm2(const Mat4c& a) {
  double sum = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) sum += std::norm(a(i, j));
  return sum;
}

double offdiag_max(const Mat3& a) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

namespace {

// tan(theta) of the Jacobi rotation that annihilates a real symmetric
// off-diagonal element `apq` between diagonal entries app, aqq.
double jacobi_tangent(double app, double aqq, double apq) {
  const double theta = (aqq - app) / (2.0 * apq);
  const double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  return theta < 0.0 ? -t : t;
}

template <class Values, class Vectors>
void sort_ascending(Values& values, Vectors& vectors) {
  constexpr int n = static_cast<int>(Values::RowsAtCompileTime);
  std::array<int, n> idx;
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return values(i) < values(j); });
  Values v = values;
  Vectors w = vectors;
  for (int k = 0; k < n; ++k) {
    values(k) = v(idx[k]);
    vectors.col(k) = w.col(idx[k]);
  }
}

}  // namespace

HermitianEigen jacobi_eigen(const Mat4c& input, double tol) {
  Mat4c a = 0.5 * (input + input.adjoint());
  Mat4c v = Mat4c::Identity();
  const double scale = std::max(a.norm(), 1.0);
  HermitianEigen out;

  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (std::sqrt(offdiag_norm2(a)) <= tol * scale) break;
    ++out.sweeps;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const double r = std::abs(a(p, q));
        if (r < 1e-300) continue;
        const cplx phase = a(p, q) / r;
        const double t = jacobi_tangent(a(p, p).real(), a(q, q).real(), r);
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // U = diag(1, conj(phase)) on (p, q) followed by the real rotation.
        Mat4c u = Mat4c::Identity();
        u(p, p) = c;
        u(p, q) = s;
        u(q, p) = -s * std::conj(phase);
        u(q, q) = c * std::conj(phase);
        a = u.adjoint() * a * u;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        v = v * u;
      }
    }
  }

  for (int i = 0; i < 4; ++i) out.values(i) = a(i, i).real();
  out.vectors = v;
  sort_ascending(out.values, out.vectors);
  return out;
}

SymmetricEigen3 jacobi_eigen3(const Mat3& input, double tol) {
  Mat3 a = 0.5 * (input + input.transpose());
  Mat3 v = Mat3::Identity();
  const double scale = std::max(a.norm(), 1.0);

  for (int sweep = 0; sweep < 64; ++sweep) {
    const double off = std::sqrt(2.0 * (a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) +
                                        a(1, 2) * a(1, 2)));
    if (off <= tol * scale) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double t = jacobi_tangent(a(p, p), a(q, q), a(p, q));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        Mat3 g = Mat3::Identity();
        g(p, p) = c;
        g(q, q) = c;
        g(p, q) = s;
        g(q, p) = -s;
        a = g.transpose() * a * g;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        v = v * g;
      }
    }
  }

  SymmetricEigen3 out;
  for (int i = 0; i < 3; ++i) out.values(i) = a(i, i);
  out.vectors = v;
  sort_ascending(out.values, out.vectors);
  return out;
}

double lambda_max_cubic(const Mat3& m) {
  const Mat3 a = 0.5 * (m + m.transpose());
  const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
  if (p1 == 0.0) return a.diagonal().maxCoeff();

  const double q = a.trace() / 3.0;
  const double d0 = a(0, 0) - q;
  const double d1 = a(1, 1) - q;
  const double d2 = a(2, 2) - q;
  const double p = std::sqrt((d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * p1) / 6.0);
  const Mat3 b = (a - q * Mat3::Identity()) / p;
  const double r = std::clamp(b.determinant() / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  return q + 2.0 * p * std::cos(phi);
}

double lambda_max_jacobi(const Mat3& a) { return jacobi_eigen3(a).values(2); }

}  // namespace qxcorr::linalg
