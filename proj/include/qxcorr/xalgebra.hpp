#pragma once

// Diagonalization of dephased X matrices: the {a,d,|u|} block and the
// {b,c,|v|} block are 2x2 symmetric problems once rows 2 and 4 are swapped.

#include "qxcorr/linalg.hpp"
#include "qxcorr/xmodel.hpp"

namespace qxcorr {

/// Block threshold on q^2 + |coherence|^2 below which the closed-form
/// rotation columns are 0/0.
inline constexpr double kDegenerateBlock = 1e-24;

struct XSpectrum {
  double p1 = 0.0;  // p1 >= p2, {a, d, |u|} block
  double p2 = 0.0;
  double p3 = 0.0;  // p3 >= p4, {b, c, |v|} block
  double p4 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
};

/// Direction cosines of the two block rotations. For a nondegenerate block
/// (cos, sin) = (q, |coh|) / sqrt(q^2 + |coh|^2); a degenerate block uses
/// the u -> 0+ limit (0, 1).
struct BlockCosines {
  double c1 = 1.0;
  double s1 = 0.0;
  double c2 = 1.0;
  double s2 = 0.0;
  bool degenerate1 = false;
  bool degenerate2 = false;
};

struct EigenFrame {
  linalg::Mat4 P;  // swaps basis states 2 and 4
  linalg::Mat4 R;  // block rotation; R = R^t, R R = 1
};

/// Requires a dephased, valid x (std::invalid_argument otherwise).
XSpectrum spectrum(const XMatrix& x);

BlockCosines block_cosines(const XMatrix& x, const XSpectrum& s);

EigenFrame eigenframe(const XMatrix& x);

/// R P (sigma_axis (x) I) P R in closed form. The diagonal of
/// R P rho P R is (p1, p2, p3, p4) in this frame.
linalg::Mat4c local_spin_in_eigenbasis(const XMatrix& x, linalg::Axis axis);

}  // namespace qxcorr
