#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "qxcorr/correlations.hpp"
#include "qxcorr/limits.hpp"
#include "support.hpp"

using namespace qxcorr;
using qxtest::with_T;

namespace {

double exact(const ThermalBranches& tb, BranchId id) {
  switch (id) {
    case BranchId::F0:
      return tb.lqfi.branch0;
    case BranchId::F1:
      return tb.lqfi.branch1;
    case BranchId::U0:
      return tb.lqu.branch0;
    case BranchId::U1:
      return tb.lqu.branch1;
  }
  return 0.0;
}

double energy_scale(const XStateParams& p) {
  const DerivedRadii r = p.radii();
  return std::max({1.0, std::abs(p.Jz), std::abs(p.B1), std::abs(p.B2), r.R1, r.R2});
}

constexpr BranchId kAll[] = {BranchId::F0, BranchId::F1, BranchId::U0, BranchId::U1};

}  // namespace

TEST_SUITE("limits") {
  TEST_CASE("series orders") {
    const XStateParams p = with_T(qxtest::kPlateauState, 10.0);
    CHECK(high_t_series(p, BranchId::F0).order == 4);
    CHECK(high_t_series(p, BranchId::F1).order == 3);
    CHECK(high_t_series(p, BranchId::U0).order == 4);
    CHECK(high_t_series(p, BranchId::U1).order == 3);
  }

  TEST_CASE("no coherences, no F0") {
    for (double T : {1.0, 10.0, 100.0})
      CHECK(high_t_series(XStateParams{0.8, 0.0, 0.0, 0.3, -1.0, T}, BranchId::F0).value == 0.0);
  }

  TEST_CASE("F0 series at T = 10") {
    const XStateParams p{-1.0, 0.5, 1.0, -0.4, 0.7, 10.0};
    const double lead = (p.r1 * p.r1 + p.r2 * p.r2) / (2.0 * p.T * p.T);
    CHECK(lead == doctest::Approx(0.00625));
    const double series = high_t_series(p, BranchId::F0).value;
    const double next = (p.r2 * p.r2 - p.r1 * p.r1) * p.Jz / (2.0 * p.T * p.T * p.T);
    CHECK(std::abs(series - lead - next) < 1e-2 * lead);
    CHECK(std::abs(series - lqfi_thermal(p).branch0) < 1e-5);
  }

  TEST_CASE("U0 leads with half of F0") {
    std::mt19937_64 rng(51);
    for (int k = 0; k < 50; ++k) {
      XStateParams p = qxtest::random_params(rng, 5.0, 1e7);
      if (p.r1 + p.r2 < 1e-3) continue;
      const double ratio = high_t_series(p, BranchId::U0).value / high_t_series(p, BranchId::F0).value;
      CHECK(ratio == doctest::Approx(0.5).epsilon(1e-5));
    }
  }

  TEST_CASE("series residual scales with the next order") {
    std::mt19937_64 rng(52);
    double worst_constant = 0.0;
    for (int k = 0; k < 200; ++k) {
      const XStateParams base = qxtest::random_params(rng);
      const double lambda = energy_scale(base);
      for (double T : {50.0, 100.0, 200.0, 500.0}) {
        const XStateParams p = with_T(base, T);
        const ThermalBranches tb = thermal_branches(p);
        for (BranchId id : kAll) {
          const SeriesValue s = high_t_series(p, id);
          const double bound = std::pow(lambda / T, s.order + 1);
          const double err = std::abs(exact(tb, id) - s.value);
          worst_constant = std::max(worst_constant, err / bound);
          CHECK(err <= 10.0 * bound);
        }
      }
    }
    MESSAGE("worst scaled constant " << worst_constant);
  }

  TEST_CASE("series within 1e-4 at T = 100") {
    std::mt19937_64 rng(53);
    for (int k = 0; k < 200; ++k) {
      const XStateParams p = qxtest::random_params(rng, 5.0, 100.0);
      const ThermalBranches tb = thermal_branches(p);
      for (BranchId id : kAll) CHECK(std::abs(exact(tb, id) - high_t_series(p, id).value) < 1e-4);
    }
  }

  TEST_CASE("zero-temperature limits") {
    CHECK(std::abs(*zero_t_limit(qxtest::kPlateauState, BranchId::F0) - 0.735294) < 1e-6);
    CHECK(std::abs(*zero_t_limit(qxtest::kPlateauState, BranchId::U0) - 0.735294) < 1e-6);
    CHECK(*zero_t_limit(qxtest::kPlateauState, BranchId::U1) == 1.0);
    const double r2 = qxtest::kSingleCrossingState.r2;
    const double R2 = qxtest::kSingleCrossingState.radii().R2;
    CHECK(std::abs(*zero_t_limit(qxtest::kSingleCrossingState, BranchId::F0) - 0.5322245) < 1e-7);
    CHECK(*zero_t_limit(qxtest::kSingleCrossingState, BranchId::F0) == doctest::Approx((r2 / R2) * (r2 / R2)));
    CHECK_THROWS_AS(zero_t_limit(qxtest::kPlateauState, BranchId::F1), std::invalid_argument);
  }

  TEST_CASE("degenerate hypersurface") {
    // Jz = 0, r1 = r2, no fields: R1 = R2 + 2 Jz and both cases give 1.
    const XStateParams sym{0.0, 0.8, 0.8, 0.0, 0.0, 1.0};
    CHECK(zero_t_limit(sym, BranchId::F0).value() == doctest::Approx(1.0));
    CHECK(zero_t_limit(sym, BranchId::U0).value() == doctest::Approx(1.0));
    CHECK_FALSE(zero_t_limit(sym, BranchId::U1).has_value());

    // R1 = 1, R2 = 0, Jz = 0.5 on the surface; the cases give 0.36 and 0.
    const XStateParams skew{0.5, 0.6, 0.0, 0.4, 0.4, 1.0};
    CHECK(std::abs(skew.radii().R1 - skew.radii().R2 - 2.0 * skew.Jz) < 1e-12);
    CHECK_FALSE(zero_t_limit(skew, BranchId::F0).has_value());
    CHECK_FALSE(zero_t_limit(skew, BranchId::U0).has_value());
  }

  TEST_CASE("exact branches approach the zero-temperature limits") {
    std::mt19937_64 rng(54);
    int checked = 0;
    while (checked < 200) {
      const XStateParams p = qxtest::random_params(rng, 5.0, 1e-3);
      const DerivedRadii r = p.radii();
      if (std::abs(r.R1 - r.R2 - 2.0 * p.Jz) < 0.05) continue;
      if (std::max(r.R1, r.R2) < 0.05) continue;
      const ThermalBranches tb = thermal_branches(p);
      CHECK(std::abs(tb.lqfi.branch0 - *zero_t_limit(p, BranchId::F0)) < 1e-3);
      CHECK(std::abs(tb.lqu.branch0 - *zero_t_limit(p, BranchId::U0)) < 1e-3);
      CHECK(std::abs(tb.lqu.branch1 - *zero_t_limit(p, BranchId::U1)) < 1e-3);
      ++checked;
    }
  }

  TEST_CASE("quadratic decay") {
    std::mt19937_64 rng(55);
    for (int k = 0; k < 50; ++k) {
      const XStateParams base = qxtest::random_params(rng);
      const ThermalBranches a = thermal_branches(with_T(base, 1e2));
      const ThermalBranches b = thermal_branches(with_T(base, 1e3));
      if (b.lqfi.value * 1e6 > 1e-6) {
        CHECK(a.lqfi.value * 1e4 == doctest::Approx(b.lqfi.value * 1e6).epsilon(0.05));
      }
      if (b.lqu.value * 1e6 > 1e-6) {
        CHECK(a.lqu.value * 1e4 == doctest::Approx(b.lqu.value * 1e6).epsilon(0.05));
      }
    }
  }
}
