#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>

namespace qxcorr::detail {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// sinh(y) / y, 1 at y = 0.
inline double sinhc(double y) {
  if (std::abs(y) < 1e-4) return 1.0 + y * y / 6.0;
  return std::sinh(y) / y;
}

/// log(sinh(y) / y) for any y, without overflow.
inline double log_sinhc(double y) {
  y = std::abs(y);
  if (y < 1.0) return std::log(sinhc(y));
  return y - std::log(2.0 * y) + std::log1p(-std::exp(-2.0 * y));
}

/// log(cosh(y)) without overflow.
inline double log_cosh(double y) {
  y = std::abs(y);
  return y + std::log1p(std::exp(-2.0 * y)) - std::log(2.0);
}

/// log(x) that maps 0 to -inf (x >= 0).
inline double safe_log(double x) { return x > 0.0 ? std::log(x) : kNegInf; }

/// log(sum exp(t)) over terms that may be -inf.
inline double log_sum_exp(std::initializer_list<double> terms) {
  double m = kNegInf;
  for (double t : terms) m = std::max(m, t);
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (double t : terms) s += std::exp(t - m);
  return m + std::log(s);
}

}  // namespace qxcorr::detail
