#ifndef QXCORR_H
#define QXCORR_H

/* C interface to the qxcorr library: local quantum Fisher information and
 * local quantum uncertainty of two-qubit X states and of the thermal
 * Heisenberg XYZ model with DM and KSEA couplings.
 *
 * Every call returns a qx_status. On failure a message describing the last
 * error of the calling thread is available from qx_last_error(). Handles
 * are opaque and must be released with the matching *_free function. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QX_API __declspec(dllexport)
#else
#define QX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qx_status {
  QX_OK = 0,
  QX_ERR_NULL = 1,          /* required pointer argument was NULL */
  QX_ERR_INVALID = 2,       /* parameters or state out of their domain */
  QX_ERR_DOMAIN = 3,        /* temperature <= 0 or similar */
  QX_ERR_INDETERMINATE = 4, /* zero-T limit undefined on the hypersurface */
  QX_ERR_RANGE = 5,         /* index out of range */
  QX_ERR_INTERNAL = 6
} qx_status;

typedef enum qx_measure { QX_LQFI = 0, QX_LQU = 1 } qx_measure;

typedef enum qx_branch {
  QX_BRANCH_0 = 0,
  QX_BRANCH_1 = 1,
  QX_BRANCH_BOUNDARY = 2
} qx_branch;

typedef enum qx_branch_id { QX_F0 = 0, QX_F1 = 1, QX_U0 = 2, QX_U1 = 3 } qx_branch_id;

typedef enum qx_sweep_variable {
  QX_VAR_T = 0,
  QX_VAR_B1 = 1,
  QX_VAR_B2 = 2,
  QX_VAR_R1 = 3,
  QX_VAR_R2 = 4,
  QX_VAR_JZ = 5
} qx_sweep_variable;

typedef enum qx_boundary_side {
  QX_BELOW = 0,
  QX_ON_BOUNDARY = 1,
  QX_ABOVE = 2
} qx_boundary_side;

typedef struct qx_hamiltonian {
  double Jx, Jy, Jz, Dz, Gz, B1, B2;
} qx_hamiltonian;

typedef struct qx_reduced_params {
  double Jz, r1, r2, B1, B2, T;
} qx_reduced_params;

/* Diagonal (a, b, c, d) and anti-diagonal u = rho_14, v = rho_23. */
typedef struct qx_xelements {
  double a, b, c, d;
  double u_re, u_im, v_re, v_im;
} qx_xelements;

typedef struct qx_branch_pair {
  double branch0;
  double branch1;
  double value;
  qx_branch active;
} qx_branch_pair;

typedef struct qx_sweep_spec {
  qx_reduced_params base;
  qx_sweep_variable variable;
  double from;
  double to;
  int points;
} qx_sweep_spec;

typedef struct qx_sweep_row {
  double x;
  double F0, F1, F;
  qx_branch F_branch;
  double U0, U1, U;
  qx_branch U_branch;
} qx_sweep_row;

typedef struct qx_transition {
  qx_measure measure;
  double location;
  double lo, hi;
  double residual;
} qx_transition;

typedef struct qx_bell_report {
  qx_boundary_side side;
  qx_branch lqfi_branch;
  qx_branch lqu_branch;
  int temperature_independent;
} qx_bell_report;

typedef struct qx_selftest_report {
  int states;
  double max_lqfi_deviation;
  double max_lqu_deviation;
  double max_offdiagonal;
} qx_selftest_report;

typedef struct qx_xstate qx_xstate;
typedef struct qx_sweep qx_sweep;
typedef struct qx_transitions qx_transitions;

QX_API const char* qx_version(void);
QX_API const char* qx_status_string(qx_status status);
QX_API const char* qx_last_error(void);
QX_API const char* qx_branch_name(qx_branch branch);
QX_API const char* qx_measure_name(qx_measure measure);
QX_API const char* qx_sweep_variable_name(qx_sweep_variable variable);
QX_API qx_status qx_parse_sweep_variable(const char* name, qx_sweep_variable* out);

/* Model */
QX_API qx_status qx_energy_levels(const qx_hamiltonian* h, double out[4]);
QX_API qx_status qx_partition_function(const qx_hamiltonian* h, double T, double* out);
QX_API qx_status qx_log_partition_function(const qx_hamiltonian* h, double T, double* out);
QX_API qx_status qx_reduce(const qx_hamiltonian* h, double T, qx_reduced_params* out);

/* X states */
QX_API qx_status qx_xstate_new(const qx_xelements* elements, qx_xstate** out);
QX_API qx_status qx_xstate_gibbs(const qx_hamiltonian* h, double T, qx_xstate** out);
QX_API qx_status qx_xstate_gibbs_reduced(const qx_reduced_params* p, qx_xstate** out);
QX_API qx_status qx_xstate_dephase(const qx_xstate* x, qx_xstate** out);
QX_API qx_status qx_xstate_elements(const qx_xstate* x, qx_xelements* out);
QX_API void qx_xstate_free(qx_xstate* x);

/* Closed forms */
QX_API qx_status qx_lqfi_x(const qx_xstate* x, qx_branch_pair* out);
QX_API qx_status qx_lqu_x(const qx_xstate* x, qx_branch_pair* out);
QX_API qx_status qx_lqfi_thermal(const qx_reduced_params* p, qx_branch_pair* out);
QX_API qx_status qx_lqu_thermal(const qx_reduced_params* p, qx_branch_pair* out);

/* Asymptotics. qx_zero_t_limit returns QX_ERR_INDETERMINATE on the
 * hypersurface R1 = R2 + 2 Jz when no value is defined, and
 * QX_ERR_INVALID for QX_F1. */
QX_API qx_status qx_high_t_series(const qx_reduced_params* p, qx_branch_id which,
                                  double* value, int* order);
QX_API qx_status qx_zero_t_limit(const qx_reduced_params* p, qx_branch_id which,
                                 double* out);

/* Brute-force path */
QX_API qx_status qx_oracle_measure(const qx_xstate* x, qx_measure which, double* out);
QX_API qx_status qx_oracle_minimize(const qx_xstate* x, qx_measure which, int grid_points,
                                    double* grid_value, double* refined_value);
QX_API qx_status qx_selftest(uint64_t seed, int count, qx_selftest_report* out);

/* Sweeps and transitions */
QX_API qx_status qx_sweep_run(const qx_sweep_spec* spec, unsigned jobs, qx_sweep** out);
QX_API qx_status qx_sweep_size(const qx_sweep* s, size_t* out);
QX_API qx_status qx_sweep_at(const qx_sweep* s, size_t i, qx_sweep_row* out);
QX_API void qx_sweep_free(qx_sweep* s);

QX_API qx_status qx_transitions_run(const qx_sweep_spec* spec, unsigned jobs,
                                    qx_transitions** out);
QX_API qx_status qx_transitions_size(const qx_transitions* t, size_t* out);
QX_API qx_status qx_transitions_at(const qx_transitions* t, size_t i, qx_transition* out);
QX_API void qx_transitions_free(qx_transitions* t);

/* Field-free states only; temperatures 0.05, 0.5, 5, 50. */
QX_API qx_status qx_bell_diagonal_boundary(const qx_reduced_params* p, qx_bell_report* out);

#ifdef __cplusplus
}
#endif

#endif
