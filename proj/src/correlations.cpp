#include "qxcorr/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include "numeric.hpp"
#include "qxcorr/oracle.hpp"

namespace qxcorr {

using detail::kNegInf;
using detail::log_sum_exp;
using detail::safe_log;

std::string_view to_string(Measure m) {
  return m == Measure::lqfi ? "LQFI" : "LQU";
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::zero:
      return "0";
    case Branch::one:
      return "1";
    case Branch::boundary:
      return "boundary";
  }
  return "boundary";
}

Branch classify_branch(double log_c0, double log_c1) {
  if (std::isnan(log_c0) || std::isnan(log_c1)) return Branch::boundary;
  const double hi = std::max(log_c0, log_c1);
  const double lo = std::min(log_c0, log_c1);
  if (hi == kNegInf) return Branch::boundary;
  const double gap = -std::expm1(lo - hi);
  if (gap < kBoundaryTolerance) return Branch::boundary;
  // The larger complement belongs to the smaller branch.
  return log_c0 > log_c1 ? Branch::zero : Branch::one;
}

BranchPair make_branch_pair(double branch0, double branch1, double log_c0,
                            double log_c1) {
  BranchPair bp;
  bp.branch0 = branch0;
  bp.branch1 = branch1;
  bp.value = std::min(branch0, branch1);
  bp.log_complement0 = log_c0;
  bp.log_complement1 = log_c1;
  bp.active = classify_branch(log_c0, log_c1);
  return bp;
}

namespace {

// ((first - second)^2 + 4 (first second - coh^2)) / (first + second), the
// block contribution to M_zz; equals (first + second) - 4 coh^2 / (first +
// second) without the cancellation.
double mzz_block(double first, double second, double coh) {
  const double sum = first + second;
  if (sum <= 0.0) return 0.0;
  const double diff = first - second;
  const double det = std::max(first * second - coh * coh, 0.0);
  return (diff * diff + 4.0 * det) / sum;
}

double half_harmonic(double x, double y) {
  return x + y > oracle::kPairCutoff ? x * y / (x + y) : 0.0;
}

}  // namespace

MEigenvalues m_eigenvalues(const XMatrix& x, const XSpectrum& s) {
  const double u = x.u.real();
  const double v = x.v.real();
  MEigenvalues m;
  m.Mzz = mzz_block(x.a, x.d, u) + mzz_block(x.b, x.c, v);

  const double p13 = s.p1 + s.p3;
  const double p24 = s.p2 + s.p4;
  const double p14 = s.p1 + s.p4;
  const double p23 = s.p2 + s.p3;
  if (std::min({p13, p24, p14, p23}) < kRatioDenominator) {
    const MEigenvalues raw = m_eigenvalues_raw(x, s);
    m.Mxx = raw.Mxx;
    m.Myy = raw.Myy;
    return m;
  }
  // [1 - (p1-p2)^2 - (p3-p4)^2]^2 - 4 (p1-p2)^2 (p3-p4)^2 factors into
  // 16 (p1+p3)(p2+p4)(p1+p4)(p2+p3) when the p_i sum to one.
  const double denom = p13 * p24 * p14 * p23;
  const double common = (x.a + x.d) * s.p3 * s.p4 + (x.b + x.c) * s.p1 * s.p2;
  const double base = x.a * x.c + x.b * x.d + s.p1 * s.p2 + s.p3 * s.p4;
  m.Mxx = 4.0 * (base + 2.0 * u * v) * common / denom;
  m.Myy = 4.0 * (base - 2.0 * u * v) * common / denom;
  return m;
}

MEigenvalues m_eigenvalues_raw(const XMatrix& x, const XSpectrum& s) {
  const BlockCosines k = block_cosines(x, s);
  const double u = x.u.real();
  const double v = x.v.real();
  const double direct = half_harmonic(s.p1, s.p3) + half_harmonic(s.p2, s.p4);
  const double crossed = half_harmonic(s.p1, s.p4) + half_harmonic(s.p2, s.p3);

  const double xp = k.c1 * k.c2 + k.s1 * k.s2;
  const double xm = k.c1 * k.s2 - k.c2 * k.s1;
  const double yp = k.c1 * k.c2 - k.s1 * k.s2;
  const double ym = k.c1 * k.s2 + k.c2 * k.s1;

  MEigenvalues m;
  m.Mxx = 4.0 * (xp * xp * direct + xm * xm * crossed);
  m.Myy = 4.0 * (yp * yp * direct + ym * ym * crossed);

  auto zblock = [](double first, double second, double coh, double c,
                   double sn) {
    const double sum = first + second;
    if (sum <= 0.0) return 0.0;
    const double rot = c * c - sn * sn;
    return sum * rot * rot +
           16.0 * (first * second - coh * coh) / sum * c * c * sn * sn;
  };
  m.Mzz = zblock(x.a, x.d, u, k.c1, k.s1) + zblock(x.b, x.c, v, k.c2, k.s2);
  return m;
}

namespace {

struct Ratio {
  double value = 0.0;
  bool unresolved = false;
};

Ratio degenerate_ratio(double num, double den) {
  if (den >= kRatioDenominator) return {num / den, false};
  if (std::abs(num) < kRatioNumerator) return {0.0, false};
  return {0.0, true};
}

}  // namespace

WEigenvalues w_eigenvalues(const XMatrix& x, const XSpectrum& s) {
  const double u = x.u.real();
  const double v = x.v.real();
  const double s1 = std::sqrt(s.p1) + std::sqrt(s.p2);
  const double s2 = std::sqrt(s.p3) + std::sqrt(s.p4);
  const double prod = s1 * s2;
  const double cross = (x.b - x.c) * (x.d - x.a);

  const Ratio rx = degenerate_ratio(cross + 4.0 * u * v, prod);
  const Ratio ry = degenerate_ratio(cross - 4.0 * u * v, prod);
  const Ratio rz1 =
      degenerate_ratio((x.d - x.a) * (x.d - x.a) - 4.0 * u * u, s1 * s1);
  const Ratio rz2 =
      degenerate_ratio((x.b - x.c) * (x.b - x.c) - 4.0 * v * v, s2 * s2);
  if (rx.unresolved || ry.unresolved || rz1.unresolved || rz2.unresolved) {
    const linalg::Mat3 w =
        oracle::w_matrix(oracle::DensityMatrix(to_dense(x)));
    return {w(0, 0), w(1, 1), w(2, 2)};
  }

  WEigenvalues w;
  w.Wxx = prod + rx.value;
  w.Wyy = prod + ry.value;
  w.Wzz = 0.5 * (s1 * s1 + s2 * s2 + rz1.value + rz2.value);
  return w;
}

WEigenvalues w_eigenvalues_raw(const XMatrix& x, const XSpectrum& s) {
  const BlockCosines k = block_cosines(x, s);
  const double direct = std::sqrt(s.p1 * s.p3) + std::sqrt(s.p2 * s.p4);
  const double crossed = std::sqrt(s.p1 * s.p4) + std::sqrt(s.p2 * s.p3);

  const double xp = k.c1 * k.c2 + k.s1 * k.s2;
  const double xm = k.c1 * k.s2 - k.c2 * k.s1;
  const double yp = k.c1 * k.c2 - k.s1 * k.s2;
  const double ym = k.c1 * k.s2 + k.c2 * k.s1;

  WEigenvalues w;
  w.Wxx = 2.0 * (direct * xp * xp + crossed * xm * xm);
  w.Wyy = 2.0 * (direct * yp * yp + crossed * ym * ym);
  auto zblock = [](double hi, double lo, double c, double sn) {
    const double rot = c * c - sn * sn;
    return (hi + lo) * rot * rot + 8.0 * std::sqrt(hi * lo) * c * c * sn * sn;
  };
  w.Wzz = zblock(s.p1, s.p2, k.c1, k.s1) + zblock(s.p3, s.p4, k.c2, k.s2);
  return w;
}

BranchPair lqfi_x(const XMatrix& x) {
  x.validate();
  const XMatrix xd = dephase(x);
  const XSpectrum s = spectrum(xd);
  const MEigenvalues m = m_eigenvalues(xd, s);
  return make_branch_pair(1.0 - m.Mzz, 1.0 - m.Mxx, safe_log(m.Mzz),
                          safe_log(m.Mxx));
}

BranchPair lqu_x(const XMatrix& x) {
  x.validate();
  const XMatrix xd = dephase(x);
  const XSpectrum s = spectrum(xd);
  const WEigenvalues w = w_eigenvalues(xd, s);
  return make_branch_pair(1.0 - w.Wzz, 1.0 - w.Wxx, safe_log(w.Wzz),
                          safe_log(w.Wxx));
}

namespace {

// 1 + k and 1 - k for k = (r1 r2 + B2^2 - B1^2) / (R1 R2), |k| <= 1, using
// (R1 R2)^2 - (r1 r2 + B2^2 - B1^2)^2 = (r1 (B1 - B2) + r2 (B1 + B2))^2.
std::pair<double, double> one_plus_minus_k(const XStateParams& p, double R1,
                                           double R2) {
  if (R1 == 0.0 || R2 == 0.0) return {1.0, 1.0};
  const double sum = p.B1 + p.B2;
  const double diff = p.B1 - p.B2;
  const double n = p.r1 * p.r2 - sum * diff;
  const double rr = R1 * R2;
  const double w = p.r1 * diff + p.r2 * sum;
  const double gap = w * w / rr;
  if (n >= 0.0) return {1.0 + n / rr, gap / (rr + n)};
  return {gap / (rr - n), 1.0 - n / rr};
}

// exp(beta (cx Jz + c1 R1 + c2 R2) + lg). Products and ratios add the
// coefficients, so exponents that cancel exactly do so before the scale
// beta is applied; only relative exponents inside a sum are ever formed.
struct Scaled {
  double cx = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double lg = kNegInf;
};

class ScaledAlgebra {
 public:
  ScaledAlgebra(double beta, double Jz, double R1, double R2)
      : beta_(beta), Jz_(Jz), R1_(R1), R2_(R2) {}

  double exponent(double cx, double c1, double c2) const {
    return beta_ * (cx * Jz_ + c1 * R1_ + c2 * R2_);
  }

  double log_value(const Scaled& s) const {
    return s.lg == kNegInf ? kNegInf : exponent(s.cx, s.c1, s.c2) + s.lg;
  }

  Scaled sum(std::initializer_list<Scaled> terms) const {
    const Scaled* top = nullptr;
    double best = kNegInf;
    for (const auto& t : terms) {
      if (t.lg == kNegInf) continue;
      const double v = log_value(t);
      if (top == nullptr || v > best) {
        top = &t;
        best = v;
      }
    }
    if (top == nullptr) return {};
    double acc = 0.0;
    for (const auto& t : terms) {
      if (t.lg == kNegInf) continue;
      acc += std::exp(exponent(t.cx - top->cx, t.c1 - top->c1, t.c2 - top->c2) +
                      (t.lg - top->lg));
    }
    return {top->cx, top->c1, top->c2, top->lg + std::log(acc)};
  }

 private:
  double beta_, Jz_, R1_, R2_;
};

Scaled times(const Scaled& a, const Scaled& b) {
  return {a.cx + b.cx, a.c1 + b.c1, a.c2 + b.c2, a.lg + b.lg};
}

Scaled over(const Scaled& a, const Scaled& b) {
  return {a.cx - b.cx, a.c1 - b.c1, a.c2 - b.c2, a.lg - b.lg};
}

Scaled shifted(Scaled a, double lg) {
  a.lg += lg;
  return a;
}

// Per-block factors as logs, stable for every y = beta R >= 0.
struct BlockLogs {
  double a = kNegInf;   // (r/R)^2
  double b = 0.0;       // ((B1 +- B2)/R)^2
  double tanh2 = kNegInf;
  double sech = 0.0;
  double one_minus_sech = kNegInf;
};

BlockLogs block_logs(double r, double field, double R, double y) {
  BlockLogs out;
  if (R <= 0.0) return out;
  out.a = 2.0 * (safe_log(r) - std::log(R));
  out.b = 2.0 * (safe_log(std::abs(field)) - std::log(R));
  const double e2 = std::exp(-2.0 * y);
  const double l1p = std::log1p(e2);
  out.tanh2 = 2.0 * (safe_log(-std::expm1(-2.0 * y)) - l1p);
  out.sech = std::log(2.0) - y - l1p;
  out.one_minus_sech = 2.0 * safe_log(-std::expm1(-y)) - l1p;
  return out;
}

}  // namespace

ThermalBranches thermal_branches(const XStateParams& p) {
  p.validate();
  const DerivedRadii r = p.radii();
  const double beta = 1.0 / p.T;
  const double y1 = beta * r.R1;
  const double y2 = beta * r.R2;
  const double h = -std::log(2.0);
  const ScaledAlgebra alg(beta, p.Jz, r.R1, r.R2);

  // Block weights w1 = e^{-x} cosh y1 / S, w2 = e^{x} cosh y2 / S with
  // x = beta Jz and S = Z / 2.
  const Scaled n1 = alg.sum({{-1, 1, 0, h}, {-1, -1, 0, h}});
  const Scaled n2 = alg.sum({{1, 0, 1, h}, {1, 0, -1, h}});
  const Scaled S = alg.sum({n1, n2});
  const double lw1 = alg.log_value(over(n1, S));
  const double lw2 = alg.log_value(over(n2, S));

  const BlockLogs b1 = block_logs(p.r1, p.B1 + p.B2, r.R1, y1);
  const BlockLogs b2 = block_logs(p.r2, p.B1 - p.B2, r.R2, y2);

  // F0 = sum_j w_j (r_j/R_j)^2 tanh^2 y_j, M_zz = 1 - F0.
  const double log_f0 = log_sum_exp({lw1 + b1.a + b1.tanh2, lw2 + b2.a + b2.tanh2});
  const double log_mzz =
      log_sum_exp({lw1 + log_sum_exp({b1.b, b1.a + 2.0 * b1.sech}),
                   lw2 + log_sum_exp({b2.b, b2.a + 2.0 * b2.sech})});
  // U0 = sum_j w_j (r_j/R_j)^2 (1 - sech y_j), W_zz = 1 - U0.
  const double log_u0 =
      log_sum_exp({lw1 + b1.a + b1.one_minus_sech, lw2 + b2.a + b2.one_minus_sech});
  const double log_wzz = log_sum_exp({lw1 + log_sum_exp({b1.b, b1.a + b1.sech}),
                                      lw2 + log_sum_exp({b2.b, b2.a + b2.sech})});

  // M_xx = (A / S) ((1 + k) / M + (1 - k) / P) with
  //   A = e^{x} cosh y1 + e^{-x} cosh y2
  //   P = cosh 2x + cosh(y1 + y2),  M = cosh 2x + cosh(y1 - y2)
  const auto [kp, km] = one_plus_minus_k(p, r.R1, r.R2);
  const Scaled A = alg.sum({{1, 1, 0, h}, {1, -1, 0, h}, {-1, 0, 1, h}, {-1, 0, -1, h}});
  const Scaled P = alg.sum({{2, 0, 0, h}, {-2, 0, 0, h}, {0, 1, 1, h}, {0, -1, -1, h}});
  const Scaled M = alg.sum({{2, 0, 0, h}, {-2, 0, 0, h}, {0, 1, -1, h}, {0, -1, 1, h}});
  const Scaled kpkm = alg.sum({shifted(P, safe_log(kp)), shifted(M, safe_log(km))});
  const double log_mxx = alg.log_value(over(times(A, kpkm), times(S, times(M, P))));

  // W_xx = sqrt(w1 w2) ((1 + k) cosh((y1 + y2)/2) + (1 - k) cosh((y1 - y2)/2))
  //        / sqrt(cosh y1 cosh y2)
  const double norm =
      -0.5 * (std::log1p(std::exp(-2.0 * y1)) + std::log1p(std::exp(-2.0 * y2)));
  const double log_wxx =
      0.5 * (lw1 + lw2) + norm +
      log_sum_exp({safe_log(kp) + std::log1p(std::exp(-(y1 + y2))),
                   safe_log(km) - beta * std::min(r.R1, r.R2) +
                       std::log1p(std::exp(-beta * std::abs(r.R1 - r.R2)))});

  ThermalBranches out;
  out.lqfi = make_branch_pair(std::exp(log_f0), -std::expm1(log_mxx), log_mzz,
                              log_mxx);
  out.lqu = make_branch_pair(std::exp(log_u0), -std::expm1(log_wxx), log_wzz,
                             log_wxx);
  return out;
}

BranchPair lqfi_thermal(const XStateParams& p) {
  return thermal_branches(p).lqfi;
}

BranchPair lqu_thermal(const XStateParams& p) {
  return thermal_branches(p).lqu;
}

}  // namespace qxcorr
