#include "qxcorr/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

namespace qxcorr {

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::T:
      return "T";
    case SweepVariable::B1:
      return "B1";
    case SweepVariable::B2:
      return "B2";
    case SweepVariable::r1:
      return "r1";
    case SweepVariable::r2:
      return "r2";
    case SweepVariable::Jz:
      return "Jz";
  }
  return "T";
}

SweepVariable parse_sweep_variable(std::string_view name) {
  for (auto v : {SweepVariable::T, SweepVariable::B1, SweepVariable::B2,
                 SweepVariable::r1, SweepVariable::r2, SweepVariable::Jz})
    if (to_string(v) == name) return v;
  throw std::invalid_argument("unknown sweep variable '" + std::string(name) + "'");
}

void SweepSpec::validate() const {
  if (!std::isfinite(from) || !std::isfinite(to) || !(from < to))
    throw std::invalid_argument("sweep range needs finite from < to");
  if (points < 2) throw std::invalid_argument("sweep needs at least 2 points");
  if (variable == SweepVariable::T && !(from > 0.0))
    throw std::invalid_argument("temperature sweep must start above 0");
  if ((variable == SweepVariable::r1 || variable == SweepVariable::r2) &&
      from < 0.0)
    throw std::invalid_argument("radius sweep must start at or above 0");
  at(*this, from).validate();
  at(*this, to).validate();
}

double SweepSpec::abscissa(int i) const noexcept {
  if (i >= points - 1) return to;
  return from + (to - from) * static_cast<double>(i) / (points - 1);
}

XStateParams at(const SweepSpec& spec, double value) {
  XStateParams p = spec.base;
  switch (spec.variable) {
    case SweepVariable::T:
      p.T = value;
      break;
    case SweepVariable::B1:
      p.B1 = value;
      break;
    case SweepVariable::B2:
      p.B2 = value;
      break;
    case SweepVariable::r1:
      p.r1 = value;
      break;
    case SweepVariable::r2:
      p.r2 = value;
      break;
    case SweepVariable::Jz:
      p.Jz = value;
      break;
  }
  return p;
}

namespace {

// Evaluates the thermal branches on the grid; contiguous chunks per worker.
std::vector<ThermalBranches> evaluate_grid(const SweepSpec& spec, unsigned jobs) {
  std::vector<ThermalBranches> out(static_cast<std::size_t>(spec.points));
  auto work = [&](int begin, int end) {
    for (int i = begin; i < end; ++i)
      out[static_cast<std::size_t>(i)] = thermal_branches(at(spec, spec.abscissa(i)));
  };
  const unsigned workers =
      std::clamp<unsigned>(jobs, 1u, static_cast<unsigned>(spec.points));
  if (workers == 1) {
    work(0, spec.points);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const int chunk = (spec.points + static_cast<int>(workers) - 1) / static_cast<int>(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const int begin = static_cast<int>(w) * chunk;
    const int end = std::min(spec.points, begin + chunk);
    pool.emplace_back([&, w, begin, end] {
      try {
        work(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

const BranchPair& pick(const ThermalBranches& tb, Measure m) {
  return m == Measure::lqfi ? tb.lqfi : tb.lqu;
}

int sign_of(double g) {
  if (std::isnan(g) || g == 0.0) return 0;
  return g > 0.0 ? 1 : -1;
}

TransitionPoint bisect(const SweepSpec& spec, Measure m, double lo, double hi,
                       int sign_lo) {
  auto eval = [&](double x) { return pick(thermal_branches(at(spec, x)), m); };
  double loc = 0.5 * (lo + hi);
  BranchPair bp = eval(loc);
  for (int iter = 0; iter < 200; ++iter) {
    const int s = sign_of(bp.crossing_function());
    if (s == 0) break;
    if (s == sign_lo)
      lo = loc;
    else
      hi = loc;
    if (hi - lo < kBracketWidth &&
        std::abs(bp.branch0 - bp.branch1) < kCrossingResidual)
      break;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    loc = mid;
    bp = eval(loc);
  }
  return {m, loc, lo, hi, std::abs(bp.branch0 - bp.branch1)};
}

}  // namespace

std::vector<SweepRow> sweep(const SweepSpec& spec, unsigned jobs) {
  spec.validate();
  const auto grid = evaluate_grid(spec, jobs);
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (int i = 0; i < spec.points; ++i) {
    const ThermalBranches& tb = grid[static_cast<std::size_t>(i)];
    SweepRow r;
    r.x = spec.abscissa(i);
    r.F0 = tb.lqfi.branch0;
    r.F1 = tb.lqfi.branch1;
    r.F = tb.lqfi.value;
    r.F_branch = tb.lqfi.active;
    r.U0 = tb.lqu.branch0;
    r.U1 = tb.lqu.branch1;
    r.U = tb.lqu.value;
    r.U_branch = tb.lqu.active;
    rows.push_back(r);
  }
  return rows;
}

std::vector<TransitionPoint> find_transitions(const SweepSpec& spec, unsigned jobs) {
  spec.validate();
  const auto grid = evaluate_grid(spec, jobs);
  std::vector<TransitionPoint> out;
  for (Measure m : {Measure::lqfi, Measure::lqu}) {
    int last = -1;
    int last_sign = 0;
    for (int i = 0; i < spec.points; ++i) {
      const int s = sign_of(pick(grid[static_cast<std::size_t>(i)], m).crossing_function());
      if (s == 0) continue;
      if (last_sign != 0 && s != last_sign)
        out.push_back(bisect(spec, m, spec.abscissa(last), spec.abscissa(i), last_sign));
      last = i;
      last_sign = s;
    }
  }
  std::sort(out.begin(), out.end(), [](const TransitionPoint& a, const TransitionPoint& b) {
    if (a.location != b.location) return a.location < b.location;
    return a.measure < b.measure;
  });
  return out;
}

std::string_view to_string(BoundarySide s) {
  switch (s) {
    case BoundarySide::below:
      return "below";
    case BoundarySide::on_boundary:
      return "boundary";
    case BoundarySide::above:
      return "above";
  }
  return "boundary";
}

BellDiagonalReport bell_diagonal_boundary(const XStateParams& p,
                                          std::span<const double> temperatures) {
  if (p.B1 != 0.0 || p.B2 != 0.0)
    throw std::invalid_argument("Bell-diagonal boundary needs B1 = B2 = 0");
  if (temperatures.empty())
    throw std::invalid_argument("Bell-diagonal boundary needs temperatures");
  const double offset = p.r1 + p.r2 - 2.0 * std::abs(p.Jz);
  BellDiagonalReport report;
  if (std::abs(offset) <= 1e-12)
    report.side = BoundarySide::on_boundary;
  else
    report.side = offset > 0.0 ? BoundarySide::above : BoundarySide::below;

  bool first = true;
  for (double t : temperatures) {
    XStateParams q = p;
    q.T = t;
    const ThermalBranches tb = thermal_branches(q);
    if (first) {
      report.lqfi_branch = tb.lqfi.active;
      report.lqu_branch = tb.lqu.active;
      first = false;
    } else if (tb.lqfi.active != report.lqfi_branch ||
               tb.lqu.active != report.lqu_branch) {
      report.temperature_independent = false;
    }
  }
  return report;
}

}  // namespace qxcorr
