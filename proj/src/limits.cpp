#include "qxcorr/limits.hpp"

#include <cmath>
#include <stdexcept>

namespace qxcorr {

SeriesValue high_t_series(const XStateParams& p, BranchId which) {
  p.validate();
  const DerivedRadii r = p.radii();
  const double t2 = p.T * p.T;
  const double t3 = t2 * p.T;
  const double t4 = t3 * p.T;
  const double a1 = p.r1 * p.r1;
  const double a2 = p.r2 * p.r2;
  const double q1 = r.R1 * r.R1;
  const double q2 = r.R2 * r.R2;
  const double dr = p.r1 - p.r2;
  const double lead1 = 4.0 * p.B1 * p.B1 + 4.0 * p.Jz * p.Jz + dr * dr;

  switch (which) {
    case BranchId::F0:
      return {(a1 + a2) / (2.0 * t2) + (a2 - a1) * p.Jz / (2.0 * t3) -
                  ((5.0 * a1 + 3.0 * a2) * q1 + (3.0 * a1 + 5.0 * a2) * q2) /
                      (24.0 * t4),
              4};
    case BranchId::F1:
      return {lead1 / (4.0 * t2) + (q2 - q1) * p.Jz / (2.0 * t3), 3};
    case BranchId::U0:
      return {(a1 + a2) / (4.0 * t2) + (a2 - a1) * p.Jz / (4.0 * t3) -
                  ((2.0 * a1 + 3.0 * a2) * q1 + (3.0 * a1 + 2.0 * a2) * q2) /
                      (48.0 * t4),
              4};
    case BranchId::U1:
      return {lead1 / (8.0 * t2) + (q2 - q1) * p.Jz / (4.0 * t3), 3};
  }
  throw std::invalid_argument("unknown branch");
}

std::optional<double> zero_t_limit(const XStateParams& p, BranchId which) {
  XStateParams q = p;
  q.T = 1.0;
  q.validate();
  if (which == BranchId::F1)
    throw std::invalid_argument("F1 has no zero-temperature limit");
  const DerivedRadii r = q.radii();
  const double gap = r.R1 - r.R2 - 2.0 * q.Jz;
  const bool degenerate = std::abs(gap) <= kZeroTDegeneracy;

  if (which == BranchId::U1) {
    if (degenerate) return std::nullopt;
    return 1.0;
  }
  auto ratio = [](double small, double big) {
    return big > 0.0 ? (small / big) * (small / big) : 0.0;
  };
  const double first = ratio(q.r1, r.R1);
  const double second = ratio(q.r2, r.R2);
  if (degenerate) {
    if (std::abs(first - second) <= kZeroTDegeneracy) return first;
    return std::nullopt;
  }
  return gap > 0.0 ? first : second;
}

}  // namespace qxcorr
