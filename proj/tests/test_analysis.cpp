#include <doctest.h>

#include <cmath>
#include <random>

#include "qxcorr/analysis.hpp"
#include "support.hpp"

using namespace qxcorr;
using qxtest::with_T;

namespace {

SweepSpec temperature_sweep(const XStateParams& base, double from, double to, int points = 1000) {
  SweepSpec s;
  s.base = base;
  s.variable = SweepVariable::T;
  s.from = from;
  s.to = to;
  s.points = points;
  return s;
}

std::vector<double> locations(const std::vector<TransitionPoint>& t, Measure m) {
  std::vector<double> out;
  for (const auto& p : t)
    if (p.measure == m) out.push_back(p.location);
  return out;
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("sweep variable names") {
    for (auto v : {SweepVariable::T, SweepVariable::B1, SweepVariable::B2, SweepVariable::r1,
                   SweepVariable::r2, SweepVariable::Jz})
      CHECK(parse_sweep_variable(to_string(v)) == v);
    CHECK_THROWS_AS(parse_sweep_variable("Jx"), std::invalid_argument);
  }

  TEST_CASE("spec validation") {
    SweepSpec s = temperature_sweep(qxtest::kPlateauState, 1.0, 1.0);
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = temperature_sweep(qxtest::kPlateauState, 0.0, 1.0);
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = temperature_sweep(qxtest::kPlateauState, 0.1, 1.0, 1);
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = temperature_sweep(qxtest::kPlateauState, 2.0, 1.0);
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s.variable = SweepVariable::r1;
    s.from = -1.0;
    s.to = 1.0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s.from = 0.0;
    CHECK_NOTHROW(s.validate());
    CHECK_THROWS_AS(sweep(temperature_sweep(qxtest::kPlateauState, 1.0, 1.0)), std::invalid_argument);
  }

  TEST_CASE("abscissae") {
    const SweepSpec s = temperature_sweep(qxtest::kPlateauState, 1e-3, 3.0, 300);
    CHECK(s.abscissa(0) == 1e-3);
    CHECK(s.abscissa(299) == 3.0);
    for (int i = 1; i < 300; ++i) CHECK(s.abscissa(i) > s.abscissa(i - 1));
    SweepSpec b = s;
    b.variable = SweepVariable::B1;
    CHECK(at(b, 0.25).B1 == 0.25);
    CHECK(at(b, 0.25).T == qxtest::kPlateauState.T);
  }

  TEST_CASE("sweep rows") {
    const SweepSpec s = temperature_sweep(qxtest::kDoubleCrossingState, 0.05, 2.0, 400);
    const auto rows = sweep(s);
    REQUIRE(rows.size() == 400);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].x == s.abscissa(static_cast<int>(i)));
      CHECK(rows[i].F == std::min(rows[i].F0, rows[i].F1));
      CHECK(rows[i].U == std::min(rows[i].U0, rows[i].U1));
    }
    const auto parallel = sweep(s, 4);
    REQUIRE(parallel.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(parallel[i].F == rows[i].F);
      CHECK(parallel[i].U == rows[i].U);
      CHECK(parallel[i].F_branch == rows[i].F_branch);
    }
  }

  TEST_CASE("plateau state: decreasing 0-branches") {
    const auto rows = sweep(temperature_sweep(qxtest::kPlateauState, 1e-3, 3.0, 300));
    CHECK(std::abs(rows.front().F - 0.735294) < 1e-4);
    CHECK(std::abs(rows.front().U - 0.735294) < 1e-4);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].F_branch == Branch::zero);
      CHECK(rows[i].U_branch == Branch::zero);
      if (i > 0) {
        CHECK(rows[i].F <= rows[i - 1].F);
        CHECK(rows[i].U <= rows[i - 1].U);
      }
    }
    CHECK(find_transitions(temperature_sweep(qxtest::kPlateauState, 1e-3, 3.0)).empty());
  }

  TEST_CASE("field-free state stays on the 1-branch") {
    const SweepSpec s = temperature_sweep(qxtest::kFieldFreeState, 1e-3, 3.0, 300);
    for (const auto& r : sweep(s)) {
      CHECK(r.F_branch == Branch::one);
      CHECK(r.U_branch == Branch::one);
    }
    CHECK(find_transitions(s).empty());
  }

  TEST_CASE("single crossing per measure in T") {
    const auto t = find_transitions(temperature_sweep(qxtest::kSingleCrossingState, 0.5, 3.0));
    const auto f = locations(t, Measure::lqfi);
    const auto u = locations(t, Measure::lqu);
    REQUIRE(f.size() == 1);
    REQUIRE(u.size() == 1);
    CHECK(std::abs(f[0] - 1.5821) < 5e-4);
    CHECK(std::abs(u[0] - 1.1458) < 5e-4);
    CHECK(t[0].location < t[1].location);
  }

  TEST_CASE("two crossings per measure in T") {
    const auto t = find_transitions(temperature_sweep(qxtest::kDoubleCrossingState, 0.05, 2.0));
    const auto f = locations(t, Measure::lqfi);
    const auto u = locations(t, Measure::lqu);
    REQUIRE(f.size() == 2);
    REQUIRE(u.size() == 2);
    CHECK(std::abs(u[0] - 0.2565) < 5e-4);
    CHECK(std::abs(u[1] - 0.6158) < 5e-4);
    CHECK(std::abs(f[0] - 0.4778) < 5e-4);
    CHECK(std::abs(f[1] - 0.7708) < 5e-4);
  }

  TEST_CASE("transition points are tight and flip the label") {
    const SweepSpec s = temperature_sweep(qxtest::kDoubleCrossingState, 0.05, 2.0);
    for (const auto& p : find_transitions(s)) {
      CHECK(p.residual < kCrossingResidual);
      CHECK(p.hi - p.lo < kBracketWidth);
      CHECK(p.lo <= p.location);
      CHECK(p.location <= p.hi);
      const auto left = thermal_branches(at(s, p.location - 1e-6));
      const auto right = thermal_branches(at(s, p.location + 1e-6));
      const BranchPair& l = p.measure == Measure::lqfi ? left.lqfi : left.lqu;
      const BranchPair& r = p.measure == Measure::lqfi ? right.lqfi : right.lqu;
      CHECK(l.active != Branch::boundary);
      CHECK(r.active != Branch::boundary);
      CHECK(l.active != r.active);
    }
  }

  TEST_CASE("grid refinement leaves crossings in place") {
    SweepSpec s = temperature_sweep(qxtest::kDoubleCrossingState, 0.05, 2.0, 1000);
    const auto coarse = find_transitions(s);
    s.points = 2000;
    const auto fine = find_transitions(s);
    REQUIRE(coarse.size() == fine.size());
    for (std::size_t i = 0; i < coarse.size(); ++i) {
      CHECK(coarse[i].measure == fine[i].measure);
      CHECK(std::abs(coarse[i].location - fine[i].location) < kBracketWidth);
    }
    CHECK(find_transitions(s, 3).size() == fine.size());
  }

  TEST_CASE("field sweep crossings") {
    SweepSpec s;
    s.base = qxtest::kFieldSweepState;
    s.variable = SweepVariable::B1;
    s.from = -6.0;
    s.to = 6.0;
    const auto t = find_transitions(s);
    CHECK(locations(t, Measure::lqfi).size() >= 2);
    CHECK(locations(t, Measure::lqu).size() >= 2);
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i - 1].location <= t[i].location);
  }

  TEST_CASE("field-free temperature sweeps never cross") {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> jz(-3.0, 3.0), r(0.0, 4.0);
    int checked = 0;
    while (checked < 10) {
      const XStateParams p{jz(rng), r(rng), r(rng), 0.0, 0.0, 1.0};
      if (std::abs(p.r1 + p.r2 - 2.0 * std::abs(p.Jz)) < 0.1) continue;
      CHECK(find_transitions(temperature_sweep(p, 0.01, 10.0, 300)).empty());
      ++checked;
    }
  }

  TEST_CASE("Bell-diagonal boundary") {
    const auto above = bell_diagonal_boundary(XStateParams{1.0, 3.4, 3.2, 0.0, 0.0, 1.0});
    CHECK(above.side == BoundarySide::above);
    CHECK(above.lqfi_branch == Branch::one);
    CHECK(above.lqu_branch == Branch::one);
    CHECK(above.temperature_independent);

    const double temps[] = {0.1, 1.0, 10.0};
    const auto below = bell_diagonal_boundary(XStateParams{1.0, 0.5, 0.5, 0.0, 0.0, 1.0}, temps);
    CHECK(below.side == BoundarySide::below);
    CHECK(below.lqfi_branch == Branch::zero);
    CHECK(below.lqu_branch == Branch::zero);
    CHECK(below.temperature_independent);

    const auto on = bell_diagonal_boundary(XStateParams{-1.0, 1.25, 0.75, 0.0, 0.0, 1.0});
    CHECK(on.side == BoundarySide::on_boundary);
    CHECK(to_string(on.side) == "boundary");

    CHECK_THROWS_AS(bell_diagonal_boundary(qxtest::kPlateauState), std::invalid_argument);
  }
}
