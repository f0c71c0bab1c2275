#include "qxcorr/qxcorr.h"

#include <exception>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qxcorr/analysis.hpp"
#include "qxcorr/correlations.hpp"
#include "qxcorr/limits.hpp"
#include "qxcorr/oracle.hpp"
#include "qxcorr/xmodel.hpp"

struct qx_xstate {
  qxcorr::XMatrix x;
};

struct qx_sweep {
  std::vector<qxcorr::SweepRow> rows;
};

struct qx_transitions {
  std::vector<qxcorr::TransitionPoint> points;
};

namespace {

thread_local std::string last_error;

qx_status fail(qx_status status, const char* what) {
  last_error = what;
  return status;
}

template <class F>
qx_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return QX_OK;
  } catch (const std::domain_error& e) {
    return fail(QX_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(QX_ERR_INVALID, e.what());
  } catch (const std::out_of_range& e) {
    return fail(QX_ERR_RANGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QX_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QX_ERR_INTERNAL, "unknown error");
  }
}

template <class... P>
bool any_null(const P*... ptrs) {
  return ((ptrs == nullptr) || ...);
}

qx_status null_argument() { return fail(QX_ERR_NULL, "null argument"); }

qxcorr::HamiltonianParams to_cpp(const qx_hamiltonian& h) {
  return {h.Jx, h.Jy, h.Jz, h.Dz, h.Gz, h.B1, h.B2};
}

qxcorr::XStateParams to_cpp(const qx_reduced_params& p) {
  return {p.Jz, p.r1, p.r2, p.B1, p.B2, p.T};
}

qx_reduced_params to_c(const qxcorr::XStateParams& p) {
  return {p.Jz, p.r1, p.r2, p.B1, p.B2, p.T};
}

qx_branch to_c(qxcorr::Branch b) {
  switch (b) {
    case qxcorr::Branch::zero:
      return QX_BRANCH_0;
    case qxcorr::Branch::one:
      return QX_BRANCH_1;
    case qxcorr::Branch::boundary:
      return QX_BRANCH_BOUNDARY;
  }
  return QX_BRANCH_BOUNDARY;
}

qx_branch_pair to_c(const qxcorr::BranchPair& bp) {
  return {bp.branch0, bp.branch1, bp.value, to_c(bp.active)};
}

qxcorr::Measure measure_of(qx_measure m) {
  if (m == QX_LQFI) return qxcorr::Measure::lqfi;
  if (m == QX_LQU) return qxcorr::Measure::lqu;
  throw std::invalid_argument("unknown measure");
}

qxcorr::BranchId branch_of(qx_branch_id b) {
  switch (b) {
    case QX_F0:
      return qxcorr::BranchId::F0;
    case QX_F1:
      return qxcorr::BranchId::F1;
    case QX_U0:
      return qxcorr::BranchId::U0;
    case QX_U1:
      return qxcorr::BranchId::U1;
  }
  throw std::invalid_argument("unknown branch id");
}

qxcorr::SweepSpec to_cpp(const qx_sweep_spec& s) {
  qxcorr::SweepSpec spec;
  spec.base = to_cpp(s.base);
  switch (s.variable) {
    case QX_VAR_T:
      spec.variable = qxcorr::SweepVariable::T;
      break;
    case QX_VAR_B1:
      spec.variable = qxcorr::SweepVariable::B1;
      break;
    case QX_VAR_B2:
      spec.variable = qxcorr::SweepVariable::B2;
      break;
    case QX_VAR_R1:
      spec.variable = qxcorr::SweepVariable::r1;
      break;
    case QX_VAR_R2:
      spec.variable = qxcorr::SweepVariable::r2;
      break;
    case QX_VAR_JZ:
      spec.variable = qxcorr::SweepVariable::Jz;
      break;
    default:
      throw std::invalid_argument("unknown sweep variable");
  }
  spec.from = s.from;
  spec.to = s.to;
  spec.points = s.points;
  return spec;
}

}  // namespace

extern "C" {

const char* qx_version(void) { return "1.0.0"; }

const char* qx_status_string(qx_status status) {
  switch (status) {
    case QX_OK:
      return "ok";
    case QX_ERR_NULL:
      return "null argument";
    case QX_ERR_INVALID:
      return "invalid argument";
    case QX_ERR_DOMAIN:
      return "domain error";
    case QX_ERR_INDETERMINATE:
      return "indeterminate";
    case QX_ERR_RANGE:
      return "out of range";
    case QX_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* qx_last_error(void) { return last_error.c_str(); }

const char* qx_branch_name(qx_branch branch) {
  switch (branch) {
    case QX_BRANCH_0:
      return "0";
    case QX_BRANCH_1:
      return "1";
    case QX_BRANCH_BOUNDARY:
      return "boundary";
  }
  return "boundary";
}

const char* qx_measure_name(qx_measure measure) {
  return measure == QX_LQFI ? "LQFI" : "LQU";
}

const char* qx_sweep_variable_name(qx_sweep_variable variable) {
  switch (variable) {
    case QX_VAR_T:
      return "T";
    case QX_VAR_B1:
      return "B1";
    case QX_VAR_B2:
      return "B2";
    case QX_VAR_R1:
      return "r1";
    case QX_VAR_R2:
      return "r2";
    case QX_VAR_JZ:
      return "Jz";
  }
  return "";
}

qx_status qx_parse_sweep_variable(const char* name, qx_sweep_variable* out) {
  if (any_null(name, out)) return null_argument();
  return guarded([&] {
    switch (qxcorr::parse_sweep_variable(name)) {
      case qxcorr::SweepVariable::T:
        *out = QX_VAR_T;
        break;
      case qxcorr::SweepVariable::B1:
        *out = QX_VAR_B1;
        break;
      case qxcorr::SweepVariable::B2:
        *out = QX_VAR_B2;
        break;
      case qxcorr::SweepVariable::r1:
        *out = QX_VAR_R1;
        break;
      case qxcorr::SweepVariable::r2:
        *out = QX_VAR_R2;
        break;
      case qxcorr::SweepVariable::Jz:
        *out = QX_VAR_JZ;
        break;
    }
  });
}

qx_status qx_energy_levels(const qx_hamiltonian* h, double out[4]) {
  if (any_null(h, out)) return null_argument();
  return guarded([&] {
    const auto e = qxcorr::energy_levels(to_cpp(*h));
    for (int i = 0; i < 4; ++i) out[i] = e[static_cast<std::size_t>(i)];
  });
}

qx_status qx_partition_function(const qx_hamiltonian* h, double T, double* out) {
  if (any_null(h, out)) return null_argument();
  return guarded([&] { *out = qxcorr::partition_function(to_cpp(*h), T); });
}

qx_status qx_log_partition_function(const qx_hamiltonian* h, double T, double* out) {
  if (any_null(h, out)) return null_argument();
  return guarded([&] { *out = qxcorr::log_partition_function(to_cpp(*h), T); });
}

qx_status qx_reduce(const qx_hamiltonian* h, double T, qx_reduced_params* out) {
  if (any_null(h, out)) return null_argument();
  return guarded([&] { *out = to_c(qxcorr::XStateParams::from(to_cpp(*h), T)); });
}

qx_status qx_xstate_new(const qx_xelements* e, qx_xstate** out) {
  if (any_null(e, out)) return null_argument();
  *out = nullptr;
  return guarded([&] {
    qxcorr::XMatrix x;
    x.a = e->a;
    x.b = e->b;
    x.c = e->c;
    x.d = e->d;
    x.u = {e->u_re, e->u_im};
    x.v = {e->v_re, e->v_im};
    x.validate();
    *out = new qx_xstate{x};
  });
}

qx_status qx_xstate_gibbs(const qx_hamiltonian* h, double T, qx_xstate** out) {
  if (any_null(h, out)) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new qx_xstate{qxcorr::gibbs_xstate(to_cpp(*h), T)}; });
}

qx_status qx_xstate_gibbs_reduced(const qx_reduced_params* p, qx_xstate** out) {
  if (any_null(p, out)) return null_argument();
  *out = nullptr;
  return guarded([&] {
    const qxcorr::XStateParams q = to_cpp(*p);
    q.validate();
    *out = new qx_xstate{qxcorr::gibbs_xstate(q.realize(), q.T)};
  });
}

qx_status qx_xstate_dephase(const qx_xstate* x, qx_xstate** out) {
  if (any_null(x, out)) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new qx_xstate{qxcorr::dephase(x->x)}; });
}

qx_status qx_xstate_elements(const qx_xstate* x, qx_xelements* out) {
  if (any_null(x, out)) return null_argument();
  const auto& m = x->x;
  *out = {m.a, m.b, m.c, m.d, m.u.real(), m.u.imag(), m.v.real(), m.v.imag()};
  return QX_OK;
}

void qx_xstate_free(qx_xstate* x) { delete x; }

qx_status qx_lqfi_x(const qx_xstate* x, qx_branch_pair* out) {
  if (any_null(x, out)) return null_argument();
  return guarded([&] { *out = to_c(qxcorr::lqfi_x(x->x)); });
}

qx_status qx_lqu_x(const qx_xstate* x, qx_branch_pair* out) {
  if (any_null(x, out)) return null_argument();
  return guarded([&] { *out = to_c(qxcorr::lqu_x(x->x)); });
}

qx_status qx_lqfi_thermal(const qx_reduced_params* p, qx_branch_pair* out) {
  if (any_null(p, out)) return null_argument();
  return guarded([&] { *out = to_c(qxcorr::lqfi_thermal(to_cpp(*p))); });
}

qx_status qx_lqu_thermal(const qx_reduced_params* p, qx_branch_pair* out) {
  if (any_null(p, out)) return null_argument();
  return guarded([&] { *out = to_c(qxcorr::lqu_thermal(to_cpp(*p))); });
}

qx_status qx_high_t_series(const qx_reduced_params* p, qx_branch_id which, double* value,
                           int* order) {
  if (any_null(p, value, order)) return null_argument();
  return guarded([&] {
    const auto s = qxcorr::high_t_series(to_cpp(*p), branch_of(which));
    *value = s.value;
    *order = s.order;
  });
}

qx_status qx_zero_t_limit(const qx_reduced_params* p, qx_branch_id which, double* out) {
  if (any_null(p, out)) return null_argument();
  std::optional<double> v;
  const qx_status st =
      guarded([&] { v = qxcorr::zero_t_limit(to_cpp(*p), branch_of(which)); });
  if (st != QX_OK) return st;
  if (!v) return fail(QX_ERR_INDETERMINATE, "zero-temperature limit is indeterminate");
  *out = *v;
  return QX_OK;
}

qx_status qx_oracle_measure(const qx_xstate* x, qx_measure which, double* out) {
  if (any_null(x, out)) return null_argument();
  return guarded([&] {
    *out = qxcorr::oracle::measure(qxcorr::oracle::DensityMatrix::from_x(x->x),
                                   measure_of(which));
  });
}

qx_status qx_oracle_minimize(const qx_xstate* x, qx_measure which, int grid_points,
                             double* grid_value, double* refined_value) {
  if (any_null(x, grid_value, refined_value)) return null_argument();
  return guarded([&] {
    const auto m = qxcorr::oracle::minimize_over_observables(
        qxcorr::oracle::DensityMatrix::from_x(x->x), measure_of(which), grid_points);
    *grid_value = m.grid_value;
    *refined_value = m.refined_value;
  });
}

qx_status qx_selftest(uint64_t seed, int count, qx_selftest_report* out) {
  if (any_null(out)) return null_argument();
  return guarded([&] {
    const auto r = qxcorr::oracle::equivalence_suite(seed, count);
    *out = {r.states, r.max_lqfi_deviation, r.max_lqu_deviation, r.max_offdiagonal};
  });
}

qx_status qx_sweep_run(const qx_sweep_spec* spec, unsigned jobs, qx_sweep** out) {
  if (any_null(spec, out)) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new qx_sweep{qxcorr::sweep(to_cpp(*spec), jobs)}; });
}

qx_status qx_sweep_size(const qx_sweep* s, size_t* out) {
  if (any_null(s, out)) return null_argument();
  *out = s->rows.size();
  return QX_OK;
}

qx_status qx_sweep_at(const qx_sweep* s, size_t i, qx_sweep_row* out) {
  if (any_null(s, out)) return null_argument();
  if (i >= s->rows.size()) return fail(QX_ERR_RANGE, "sweep row index out of range");
  const auto& r = s->rows[i];
  *out = {r.x, r.F0, r.F1, r.F, to_c(r.F_branch), r.U0, r.U1, r.U, to_c(r.U_branch)};
  return QX_OK;
}

void qx_sweep_free(qx_sweep* s) { delete s; }

qx_status qx_transitions_run(const qx_sweep_spec* spec, unsigned jobs, qx_transitions** out) {
  if (any_null(spec, out)) return null_argument();
  *out = nullptr;
  return guarded(
      [&] { *out = new qx_transitions{qxcorr::find_transitions(to_cpp(*spec), jobs)}; });
}

qx_status qx_transitions_size(const qx_transitions* t, size_t* out) {
  if (any_null(t, out)) return null_argument();
  *out = t->points.size();
  return QX_OK;
}

qx_status qx_transitions_at(const qx_transitions* t, size_t i, qx_transition* out) {
  if (any_null(t, out)) return null_argument();
  if (i >= t->points.size()) return fail(QX_ERR_RANGE, "transition index out of range");
  const auto& p = t->points[i];
  *out = {p.measure == qxcorr::Measure::lqfi ? QX_LQFI : QX_LQU, p.location, p.lo, p.hi,
          p.residual};
  return QX_OK;
}

void qx_transitions_free(qx_transitions* t) { delete t; }

qx_status qx_bell_diagonal_boundary(const qx_reduced_params* p, qx_bell_report* out) {
  if (any_null(p, out)) return null_argument();
  return guarded([&] {
    const auto r = qxcorr::bell_diagonal_boundary(to_cpp(*p));
    qx_boundary_side side = QX_ON_BOUNDARY;
    if (r.side == qxcorr::BoundarySide::below) side = QX_BELOW;
    if (r.side == qxcorr::BoundarySide::above) side = QX_ABOVE;
    *out = {side, to_c(r.lqfi_branch), to_c(r.lqu_branch), r.temperature_independent ? 1 : 0};
  });
}

}  // extern "C"
