#include "run.hpp"

#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <vector>

namespace qxcli {

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 12);
  return std::string(buf.data(), res.ptr);
}

namespace {

struct Failure {
  int code;
  std::string message;
};

int domain_code(qx_status s) {
  switch (s) {
    case QX_ERR_INVALID:
    case QX_ERR_DOMAIN:
    case QX_ERR_INDETERMINATE:
    case QX_ERR_RANGE:
      return kExitDomain;
    default:
      return 1;
  }
}

void check(qx_status s) {
  if (s != QX_OK) throw Failure{domain_code(s), qx_last_error()};
}

char separator(const RunConfig& cfg) { return cfg.format == Format::csv ? ',' : '\t'; }

void write_header(std::ostream& os, const RunConfig& cfg, const char* x) {
  const char sep = separator(cfg);
  os << x;
  for (const char* col : {"F0", "F1", "F", "F_branch", "U0", "U1", "U", "U_branch"})
    os << sep << col;
  os << '\n';
}

void write_row(std::ostream& os, const RunConfig& cfg, const qx_sweep_row& r) {
  const char sep = separator(cfg);
  os << format_number(r.x) << sep << format_number(r.F0) << sep << format_number(r.F1)
     << sep << format_number(r.F) << sep << qx_branch_name(r.F_branch) << sep
     << format_number(r.U0) << sep << format_number(r.U1) << sep << format_number(r.U)
     << sep << qx_branch_name(r.U_branch) << '\n';
}

qx_reduced_params reduced_of(const RunConfig& cfg, double T) {
  if (!cfg.full) {
    qx_reduced_params p = cfg.reduced;
    p.T = T;
    return p;
  }
  qx_reduced_params p{};
  check(qx_reduce(&cfg.hamiltonian, T, &p));
  return p;
}

void require_temperature(double T) {
  if (!(T >= kMinTemperature))
    throw Failure{kExitDomain, "temperature must be at least 1e-06 (use --T0 for T = 0)"};
}

// Writes to cfg.out when set, otherwise to `fallback`.
template <class F>
void emit(const RunConfig& cfg, std::ostream& fallback, F&& body) {
  if (cfg.out.empty()) {
    body(fallback);
    fallback.flush();
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw Failure{kExitIo, "cannot open '" + cfg.out + "' for writing"};
  body(file);
  file.flush();
  if (!file) throw Failure{kExitIo, "write to '" + cfg.out + "' failed"};
}

std::string plot_script_path(const std::string& data) {
  std::filesystem::path p(data);
  p.replace_extension(".gp");
  if (p == std::filesystem::path(data)) p += ".gp";
  return p.string();
}

void write_plot_script(const RunConfig& cfg, const char* xlabel) {
  const std::string path = plot_script_path(cfg.out);
  std::ofstream gp(path, std::ios::binary);
  if (!gp) throw Failure{kExitIo, "cannot open '" + path + "' for writing"};
  const std::string data = std::filesystem::path(cfg.out).filename().string();
  gp << "# gnuplot script for " << data << "\n";
  gp << "set datafile separator " << (cfg.format == Format::csv ? "\",\"" : "\"\\t\"")
     << "\n";
  gp << "set xlabel \"" << xlabel << "\"\n";
  gp << "set ylabel \"LQFI, LQU\"\n";
  gp << "set key outside right\n";
  gp << "set grid\n";
  gp << "plot \"" << data << "\" using 1:2 skip 1 with lines dt 2 lc rgb \"#1f77b4\" title \"F0\", \\\n";
  gp << "     \"\" using 1:3 skip 1 with lines dt 3 lc rgb \"#1f77b4\" title \"F1\", \\\n";
  gp << "     \"\" using 1:4 skip 1 with lines lw 2 lc rgb \"#1f77b4\" title \"F\", \\\n";
  gp << "     \"\" using 1:6 skip 1 with lines dt 2 lc rgb \"#d62728\" title \"U0\", \\\n";
  gp << "     \"\" using 1:7 skip 1 with lines dt 3 lc rgb \"#d62728\" title \"U1\", \\\n";
  gp << "     \"\" using 1:8 skip 1 with lines lw 2 lc rgb \"#d62728\" title \"U\"\n";
  gp.flush();
  if (!gp) throw Failure{kExitIo, "write to '" + path + "' failed"};
}

void run_zero_t(const RunConfig& cfg, std::ostream& out) {
  const qx_reduced_params p = reduced_of(cfg, 1.0);
  std::vector<std::string> cells;
  for (qx_branch_id id : {QX_F0, QX_U0, QX_U1}) {
    double v = 0.0;
    const qx_status s = qx_zero_t_limit(&p, id, &v);
    if (s == QX_ERR_INDETERMINATE)
      cells.emplace_back("indeterminate");
    else {
      check(s);
      cells.push_back(format_number(v));
    }
  }
  const char sep = separator(cfg);
  emit(cfg, out, [&](std::ostream& os) {
    os << "F0" << sep << "U0" << sep << "U1" << '\n';
    os << cells[0] << sep << cells[1] << sep << cells[2] << '\n';
  });
}

void run_eval(const RunConfig& cfg, std::ostream& out) {
  if (cfg.zero_t) {
    run_zero_t(cfg, out);
    return;
  }
  require_temperature(cfg.T);
  qx_branch_pair f{};
  qx_branch_pair u{};
  if (cfg.full) {
    qx_xstate* raw = nullptr;
    check(qx_xstate_gibbs(&cfg.hamiltonian, cfg.T, &raw));
    std::unique_ptr<qx_xstate, decltype(&qx_xstate_free)> x(raw, qx_xstate_free);
    check(qx_lqfi_x(x.get(), &f));
    check(qx_lqu_x(x.get(), &u));
  } else {
    const qx_reduced_params p = reduced_of(cfg, cfg.T);
    check(qx_lqfi_thermal(&p, &f));
    check(qx_lqu_thermal(&p, &u));
  }
  const qx_sweep_row row{cfg.T,     f.branch0, f.branch1, f.value, f.active,
                         u.branch0, u.branch1, u.value,   u.active};
  emit(cfg, out, [&](std::ostream& os) {
    write_header(os, cfg, "T");
    write_row(os, cfg, row);
  });
}

qx_sweep_spec sweep_spec(const RunConfig& cfg) {
  if (cfg.variable == QX_VAR_T)
    require_temperature(cfg.from);
  else
    require_temperature(cfg.T);
  qx_sweep_spec spec{};
  spec.base = reduced_of(cfg, cfg.T);
  spec.variable = cfg.variable;
  spec.from = cfg.from;
  spec.to = cfg.to;
  spec.points = cfg.points;
  return spec;
}

void run_sweep(const RunConfig& cfg, std::ostream& out) {
  const qx_sweep_spec spec = sweep_spec(cfg);
  qx_sweep* raw = nullptr;
  check(qx_sweep_run(&spec, cfg.jobs, &raw));
  std::unique_ptr<qx_sweep, decltype(&qx_sweep_free)> s(raw, qx_sweep_free);
  std::size_t n = 0;
  check(qx_sweep_size(s.get(), &n));
  const char* name = qx_sweep_variable_name(cfg.variable);
  emit(cfg, out, [&](std::ostream& os) {
    write_header(os, cfg, name);
    for (std::size_t i = 0; i < n; ++i) {
      qx_sweep_row row{};
      check(qx_sweep_at(s.get(), i, &row));
      write_row(os, cfg, row);
    }
  });
  if (cfg.plot_script) write_plot_script(cfg, name);
}

void run_transitions(const RunConfig& cfg, std::ostream& out) {
  const qx_sweep_spec spec = sweep_spec(cfg);
  qx_transitions* raw = nullptr;
  check(qx_transitions_run(&spec, cfg.jobs, &raw));
  std::unique_ptr<qx_transitions, decltype(&qx_transitions_free)> t(raw,
                                                                    qx_transitions_free);
  std::size_t n = 0;
  check(qx_transitions_size(t.get(), &n));
  std::vector<qx_transition> points(n);
  for (std::size_t i = 0; i < n; ++i) check(qx_transitions_at(t.get(), i, &points[i]));
  emit(cfg, out, [&](std::ostream& os) {
    for (qx_measure m : {QX_LQFI, QX_LQU})
      for (const auto& p : points)
        if (p.measure == m)
          os << qx_measure_name(m) << ' ' << format_number(p.location) << ' '
             << format_number(p.residual) << '\n';
  });
}

int run_selftest(const RunConfig& cfg, std::ostream& out) {
  qx_selftest_report r{};
  check(qx_selftest(cfg.seed, cfg.count, &r));
  const double worst =
      r.max_lqfi_deviation > r.max_lqu_deviation ? r.max_lqfi_deviation : r.max_lqu_deviation;
  const bool ok = worst <= kSelftestTolerance;
  emit(cfg, out, [&](std::ostream& os) {
    os << "states " << r.states << '\n';
    os << "seed " << cfg.seed << '\n';
    os << "max_lqfi_deviation " << format_number(r.max_lqfi_deviation) << '\n';
    os << "max_lqu_deviation " << format_number(r.max_lqu_deviation) << '\n';
    os << "max_offdiagonal " << format_number(r.max_offdiagonal) << '\n';
    os << "max_deviation " << format_number(worst) << '\n';
    os << (ok ? "PASS" : "FAIL") << '\n';
  });
  return ok ? kExitOk : kExitSelftest;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.mode) {
      case Mode::eval:
        run_eval(cfg, out);
        return kExitOk;
      case Mode::sweep:
        run_sweep(cfg, out);
        return kExitOk;
      case Mode::transitions:
        run_transitions(cfg, out);
        return kExitOk;
      case Mode::selftest:
        return run_selftest(cfg, out);
    }
  } catch (const Failure& f) {
    err << "qxcorr: " << f.message << '\n';
    return f.code;
  }
  return kExitUsage;
}

}  // namespace qxcli
