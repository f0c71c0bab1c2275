#include "qxcorr/xalgebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qxcorr {

namespace {

void require_dephased(const XMatrix& x) {
  if (!x.is_dephased())
    throw std::invalid_argument("X matrix must be dephased (u, v >= 0 real)");
  x.validate();
}

// Larger and smaller eigenvalue of [[hi, coh], [coh, lo]] and the q
// parameter 1/2 (hi - lo + sqrt((hi - lo)^2 + 4 coh^2)).
struct Block {
  double larger = 0.0;
  double smaller = 0.0;
  double q = 0.0;
};

Block solve_block(double first, double second, double coh) {
  Block b;
  const double diff = first - second;
  const double disc = std::hypot(diff, 2.0 * coh);
  b.larger = 0.5 * (first + second + disc);
  const double det = std::max(first * second - coh * coh, 0.0);
  b.smaller = b.larger > 0.0 ? std::min(det / b.larger, b.larger) : 0.0;
  if (diff >= 0.0)
    b.q = 0.5 * (diff + disc);
  else
    b.q = disc - diff > 0.0 ? 2.0 * coh * coh / (disc - diff) : 0.0;
  return b;
}

}  // namespace

XSpectrum spectrum(const XMatrix& x) {
  require_dephased(x);
  const double u = x.u.real();
  const double v = x.v.real();
  const Block b1 = solve_block(x.a, x.d, u);
  // The second block enters the rotation with (c - b) as its difference.
  const Block b2 = solve_block(x.c, x.b, v);
  return {b1.larger, b1.smaller, b2.larger, b2.smaller, b1.q, b2.q};
}

BlockCosines block_cosines(const XMatrix& x, const XSpectrum& s) {
  BlockCosines bc;
  const double u = x.u.real();
  const double v = x.v.real();
  const double n1 = s.q1 * s.q1 + u * u;
  const double n2 = s.q2 * s.q2 + v * v;
  if (n1 < kDegenerateBlock) {
    bc.c1 = 0.0;
    bc.s1 = 1.0;
    bc.degenerate1 = true;
  } else {
    const double n = std::sqrt(n1);
    bc.c1 = s.q1 / n;
    bc.s1 = u / n;
  }
  if (n2 < kDegenerateBlock) {
    bc.c2 = 0.0;
    bc.s2 = 1.0;
    bc.degenerate2 = true;
  } else {
    const double n = std::sqrt(n2);
    bc.c2 = s.q2 / n;
    bc.s2 = v / n;
  }
  return bc;
}

EigenFrame eigenframe(const XMatrix& x) {
  const XSpectrum s = spectrum(x);
  const BlockCosines bc = block_cosines(x, s);
  EigenFrame f;
  f.P = linalg::Mat4::Zero();
  f.P(0, 0) = 1.0;
  f.P(1, 3) = 1.0;
  f.P(2, 2) = 1.0;
  f.P(3, 1) = 1.0;
  f.R = linalg::Mat4::Zero();
  f.R(0, 0) = bc.c1;
  f.R(0, 1) = bc.s1;
  f.R(1, 0) = bc.s1;
  f.R(1, 1) = -bc.c1;
  f.R(2, 2) = bc.c2;
  f.R(2, 3) = bc.s2;
  f.R(3, 2) = bc.s2;
  f.R(3, 3) = -bc.c2;
  return f;
}

linalg::Mat4c local_spin_in_eigenbasis(const XMatrix& x, linalg::Axis axis) {
  using namespace std::complex_literals;
  const XSpectrum s = spectrum(x);
  const auto [c1, s1, c2, s2, deg1, deg2] = block_cosines(x, s);
  linalg::Mat4c m = linalg::Mat4c::Zero();
  switch (axis) {
    case linalg::Axis::x: {
      const double plus = c1 * c2 + s1 * s2;   // (q1 q2 + |uv|) / n1 n2
      const double minus = c1 * s2 - c2 * s1;  // (q1 |v| - q2 |u|) / n1 n2
      m(0, 2) = plus;
      m(0, 3) = minus;
      m(1, 2) = -minus;
      m(1, 3) = plus;
      m(2, 0) = plus;
      m(2, 1) = -minus;
      m(3, 0) = minus;
      m(3, 1) = plus;
      break;
    }
    case linalg::Axis::y: {
      const double g = c1 * c2 - s1 * s2;  // (q1 q2 - |uv|) / n1 n2
      const double h = c1 * s2 + c2 * s1;  // (q1 |v| + q2 |u|) / n1 n2
      m(0, 2) = -1.0i * g;
      m(0, 3) = -1.0i * h;
      m(1, 2) = -1.0i * h;
      m(1, 3) = 1.0i * g;
      m(2, 0) = 1.0i * g;
      m(2, 1) = 1.0i * h;
      m(3, 0) = 1.0i * h;
      m(3, 1) = -1.0i * g;
      break;
    }
    case linalg::Axis::z: {
      // q1 (a - d) / n1^2 = c1^2 - s1^2 through q1^2 = (a - d) q1 + |u|^2.
      m(0, 0) = c1 * c1 - s1 * s1;
      m(0, 1) = 2.0 * c1 * s1;
      m(1, 0) = 2.0 * c1 * s1;
      m(1, 1) = s1 * s1 - c1 * c1;
      // q2 (b - c) / n2^2 = -(c2^2 - s2^2).
      m(2, 2) = s2 * s2 - c2 * c2;
      m(2, 3) = -2.0 * c2 * s2;
      m(3, 2) = -2.0 * c2 * s2;
      m(3, 3) = c2 * c2 - s2 * s2;
      break;
    }
  }
  return m;
}

}  // namespace qxcorr
