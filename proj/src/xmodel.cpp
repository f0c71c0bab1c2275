#include "qxcorr/xmodel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "numeric.hpp"

namespace qxcorr {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v))
    throw std::invalid_argument(std::string(name) + " must be finite");
}

void require_temperature(double T) {
  if (!std::isfinite(T) || T <= 0.0)
    throw std::domain_error("temperature must be positive, got " +
                            std::to_string(T));
}

// One 2x2 block of exp(-H/T) with centre energy e0 and half-splitting R,
// scaled by exp(emin/T): weights of the lower and upper levels, their mean,
// and sinh(R/T)/R times the same scale.
struct BlockWeights {
  double lower = 0.0;
  double upper = 0.0;
  double mean = 0.0;
  double sinh_over_r = 0.0;
};

BlockWeights block_weights(double e0, double R, double emin, double beta) {
  BlockWeights w;
  w.lower = std::exp(-beta * (e0 - R - emin));
  w.upper = std::exp(-beta * (e0 + R - emin));
  w.mean = 0.5 * (w.lower + w.upper);
  const double y = beta * R;
  if (y < 0.5)
    w.sinh_over_r = std::exp(-beta * (e0 - emin)) * beta * detail::sinhc(y);
  else
    w.sinh_over_r = 0.5 * (w.lower - w.upper) / R;
  return w;
}

// (1 - s/R, 1 + s/R) for |s| <= R without cancellation.
std::pair<double, double> one_minus_plus(double s, double r, double R) {
  if (R == 0.0) return {1.0, 1.0};
  if (s >= 0.0) return {r * r / (R * (R + s)), 1.0 + s / R};
  return {1.0 - s / R, r * r / (R * (R - s))};
}

}  // namespace

void HamiltonianParams::validate() const {
  require_finite(Jx, "Jx");
  require_finite(Jy, "Jy");
  require_finite(Jz, "Jz");
  require_finite(Dz, "Dz");
  require_finite(Gz, "Gz");
  require_finite(B1, "B1");
  require_finite(B2, "B2");
}

DerivedRadii radii(const HamiltonianParams& h) {
  DerivedRadii out;
  out.r1 = std::hypot(h.Jx - h.Jy, 2.0 * h.Gz);
  out.r2 = std::hypot(h.Jx + h.Jy, 2.0 * h.Dz);
  out.R1 = std::hypot(out.r1, h.B1 + h.B2);
  out.R2 = std::hypot(out.r2, h.B1 - h.B2);
  return out;
}

void XMatrix::validate(double tol) const {
  for (double v : {a, b, c, d, u.real(), u.imag(), v.real(), v.imag()})
    if (!std::isfinite(v))
      throw std::invalid_argument("X matrix entries must be finite");
  if (a < -tol || b < -tol || c < -tol || d < -tol)
    throw std::invalid_argument("X matrix populations must be nonnegative");
  if (std::abs(a + b + c + d - 1.0) > tol)
    throw std::invalid_argument("X matrix trace must be 1");
  if (a * d - std::norm(u) < -tol)
    throw std::invalid_argument("X matrix violates ad >= |u|^2");
  if (b * c - std::norm(v) < -tol)
    throw std::invalid_argument("X matrix violates bc >= |v|^2");
}

bool XMatrix::is_dephased() const noexcept {
  return u.imag() == 0.0 && v.imag() == 0.0 && u.real() >= 0.0 &&
         v.real() >= 0.0;
}

void XStateParams::validate() const {
  require_finite(Jz, "Jz");
  require_finite(r1, "r1");
  require_finite(r2, "r2");
  require_finite(B1, "B1");
  require_finite(B2, "B2");
  if (r1 < 0.0 || r2 < 0.0)
    throw std::invalid_argument("r1 and r2 must be nonnegative");
  require_temperature(T);
}

HamiltonianParams XStateParams::realize() const {
  HamiltonianParams h;
  h.Jx = 0.5 * (r2 + r1);
  h.Jy = 0.5 * (r2 - r1);
  h.Jz = Jz;
  h.B1 = B1;
  h.B2 = B2;
  return h;
}

DerivedRadii XStateParams::radii() const {
  return {r1, r2, std::hypot(r1, B1 + B2), std::hypot(r2, B1 - B2)};
}

XStateParams XStateParams::from(const HamiltonianParams& h, double T) {
  const DerivedRadii r = qxcorr::radii(h);
  return {h.Jz, r.r1, r.r2, h.B1, h.B2, T};
}

std::array<double, 4> energy_levels(const HamiltonianParams& h) {
  const DerivedRadii r = radii(h);
  return {h.Jz + r.R1, h.Jz - r.R1, -h.Jz + r.R2, -h.Jz - r.R2};
}

double log_partition_function(const HamiltonianParams& h, double T) {
  h.validate();
  require_temperature(T);
  const auto e = energy_levels(h);
  const double emin = *std::min_element(e.begin(), e.end());
  double sum = 0.0;
  for (double level : e) sum += std::exp(-(level - emin) / T);
  return -emin / T + std::log(sum);
}

double partition_function(const HamiltonianParams& h, double T) {
  return std::exp(log_partition_function(h, T));
}

XMatrix gibbs_xstate(const HamiltonianParams& h, double T) {
  h.validate();
  require_temperature(T);
  const DerivedRadii r = radii(h);
  const double beta = 1.0 / T;
  const double emin = std::min(h.Jz - r.R1, -h.Jz - r.R2);

  const BlockWeights w1 = block_weights(h.Jz, r.R1, emin, beta);
  const BlockWeights w2 = block_weights(-h.Jz, r.R2, emin, beta);
  const double norm = 2.0 * (w1.mean + w2.mean);

  XMatrix x;
  const double s1 = h.B1 + h.B2;
  const double s2 = h.B1 - h.B2;
  if (beta * r.R1 < 0.5) {
    x.a = (w1.mean - s1 * w1.sinh_over_r) / norm;
    x.d = (w1.mean + s1 * w1.sinh_over_r) / norm;
  } else {
    const auto [minus, plus] = one_minus_plus(s1, r.r1, r.R1);
    x.a = 0.5 * (w1.upper * plus + w1.lower * minus) / norm;
    x.d = 0.5 * (w1.upper * minus + w1.lower * plus) / norm;
  }
  if (beta * r.R2 < 0.5) {
    x.b = (w2.mean - s2 * w2.sinh_over_r) / norm;
    x.c = (w2.mean + s2 * w2.sinh_over_r) / norm;
  } else {
    const auto [minus, plus] = one_minus_plus(s2, r.r2, r.R2);
    x.b = 0.5 * (w2.upper * plus + w2.lower * minus) / norm;
    x.c = 0.5 * (w2.upper * minus + w2.lower * plus) / norm;
  }
  const std::complex<double> h03(h.Jx - h.Jy, -2.0 * h.Gz);
  const std::complex<double> h12(h.Jx + h.Jy, 2.0 * h.Dz);
  x.u = -h03 * (w1.sinh_over_r / norm);
  x.v = -h12 * (w2.sinh_over_r / norm);
  return x;
}

XMatrix dephase(const XMatrix& x) noexcept {
  XMatrix out = x;
  out.u = std::abs(x.u);
  out.v = std::abs(x.v);
  return out;
}

linalg::Mat4c hamiltonian_matrix(const HamiltonianParams& h) {
  using C = std::complex<double>;
  linalg::Mat4c m = linalg::Mat4c::Zero();
  m(0, 0) = h.Jz + h.B1 + h.B2;
  m(1, 1) = -h.Jz + h.B1 - h.B2;
  m(2, 2) = -h.Jz - h.B1 + h.B2;
  m(3, 3) = h.Jz - h.B1 - h.B2;
  m(0, 3) = C(h.Jx - h.Jy, -2.0 * h.Gz);
  m(3, 0) = C(h.Jx - h.Jy, 2.0 * h.Gz);
  m(1, 2) = C(h.Jx + h.Jy, 2.0 * h.Dz);
  m(2, 1) = C(h.Jx + h.Jy, -2.0 * h.Dz);
  return m;
}

linalg::Mat4c to_dense(const XMatrix& x) {
  linalg::Mat4c m = linalg::Mat4c::Zero();
  m(0, 0) = x.a;
  m(1, 1) = x.b;
  m(2, 2) = x.c;
  m(3, 3) = x.d;
  m(0, 3) = x.u;
  m(3, 0) = std::conj(x.u);
  m(1, 2) = x.v;
  m(2, 1) = std::conj(x.v);
  return m;
}

}  // namespace qxcorr
