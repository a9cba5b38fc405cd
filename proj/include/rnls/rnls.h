#ifndef RNLS_RNLS_H
#define RNLS_RNLS_H

#include <stddef.h>

#if defined(_WIN32)
#define RNLS_API __declspec(dllexport)
#else
#define RNLS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rnls_status {
  RNLS_OK = 0,
  RNLS_ERR_INVALID_ARGUMENT = 1,
  RNLS_ERR_PARAMETER_MISMATCH = 2,
  RNLS_ERR_IO = 3,
  RNLS_ERR_SINGULAR = 4,
  RNLS_ERR_BLOW_UP = 5,
  RNLS_ERR_NON_FINITE = 6,
  RNLS_ERR_EIGENSOLVER = 7,
  RNLS_ERR_QUADRATURE = 8,
  RNLS_ERR_DISCRETIZATION = 9,
  RNLS_ERR_INTERNAL = 10
} rnls_status;

/* Nonzero for the statuses raised by a solver, eigensolver, quadrature or
   blow-up check (as opposed to bad input). */
RNLS_API int rnls_status_is_numerical(rnls_status status);
RNLS_API const char* rnls_status_string(rnls_status status);
/* Message of the last failing call on this thread; empty after success. */
RNLS_API const char* rnls_last_error(void);
/* Step index and time of the last time-stepping failure on this thread;
   step is -1 when the failure did not occur inside a time loop. */
RNLS_API void rnls_last_failure(long* step, double* time);
RNLS_API const char* rnls_version(void);

/* ---- analytic constants -------------------------------------------------- */

RNLS_API void rnls_threshold_constants(double* eps0, double* mu0, double* mu1);
RNLS_API rnls_status rnls_mu_to_eps(double mu, double* eps);
RNLS_API rnls_status rnls_eps_to_mu(double eps, double* mu);
/* (phi', V_phi)_eps = -1 + 8 eps^4 / 5 */
RNLS_API double rnls_pairing(double eps);
RNLS_API rnls_status rnls_pairing_root(double* root);

/* ---- time evolution ------------------------------------------------------ */

typedef enum rnls_scheme { RNLS_SCHEME_LINEAR = 0, RNLS_SCHEME_NONLINEAR = 1 } rnls_scheme;

typedef struct rnls_run_config {
  double half_length; /* L */
  int half_count;     /* K; the grid has 2K+1 nodes */
  double eps;
  double tau; /* <= 0 selects tau = h */
  double t_final;
  double amp;
  rnls_scheme scheme;
  int snapshot_stride;
  double blowup_ceiling;
  /* Nonzero: record E, P, M and the wall momentum flux after every step. */
  int monitor_conserved;
} rnls_run_config;

/* L = 20, K = 400, eps = 0.5, tau = h, t_final = 5, amp = 0.01, nonlinear. */
RNLS_API void rnls_run_config_default(rnls_run_config* cfg);
/* fig1..fig5; RNLS_ERR_INVALID_ARGUMENT for an unknown name. */
RNLS_API rnls_status rnls_run_config_preset(const char* name, rnls_run_config* cfg);

typedef struct rnls_trajectory rnls_trajectory;

RNLS_API rnls_status rnls_simulate(const rnls_run_config* cfg, rnls_trajectory** out);
RNLS_API void rnls_trajectory_free(rnls_trajectory* traj);

RNLS_API size_t rnls_trajectory_node_count(const rnls_trajectory* traj);
RNLS_API size_t rnls_trajectory_snapshot_count(const rnls_trajectory* traj);
/* Number of per-step diagnostic samples, including t = 0. */
RNLS_API size_t rnls_trajectory_step_count(const rnls_trajectory* traj);
RNLS_API double rnls_trajectory_tau(const rnls_trajectory* traj);
RNLS_API rnls_status rnls_trajectory_nodes(const rnls_trajectory* traj, double* xi);
RNLS_API rnls_status rnls_trajectory_snapshot(const rnls_trajectory* traj, size_t index, double* t,
                                              double* re, double* im);
/* Arrays of length rnls_trajectory_step_count. */
RNLS_API rnls_status rnls_trajectory_diagnostics(const rnls_trajectory* traj, double* t,
                                                 double* max_imag, double* max_abs);

/* Conserved quantities: per step when monitored, otherwise per snapshot.
   wall_flux is the accumulated wall momentum flux (zero when not monitored). */
RNLS_API size_t rnls_trajectory_conserved_count(const rnls_trajectory* traj);
RNLS_API rnls_status rnls_trajectory_conserved(const rnls_trajectory* traj, double* t,
                                               double* energy, double* momentum, double* mass,
                                               double* wall_flux);

typedef struct rnls_conserved_summary {
  double energy_drift;   /* max |E(t) - E(0)| / |E(0)| */
  double momentum_drift;
  double mass_drift;
  /* max |P(t) - P(0) - accumulated wall flux| / |P(0)| */
  double momentum_balance_residual;
} rnls_conserved_summary;
RNLS_API rnls_status rnls_trajectory_conserved_summary(const rnls_trajectory* traj,
                                                       rnls_conserved_summary* out);

/* ---- Fourier oracle ------------------------------------------------------ */

typedef struct rnls_fourier rnls_fourier;

RNLS_API rnls_status rnls_fourier_create(double half_length, double eps, int n_max,
                                         rnls_fourier** out);
RNLS_API void rnls_fourier_free(rnls_fourier* f);
RNLS_API int rnls_fourier_n_max(const rnls_fourier* f);
/* n_max + 1 values a_0 .. a_n_max. */
RNLS_API rnls_status rnls_fourier_coefficients(const rnls_fourier* f, double* a);
RNLS_API double rnls_fourier_tail(const rnls_fourier* f);
/* Partial sum at the 2K+1 nodes of the grid with half-length L. */
RNLS_API rnls_status rnls_fourier_evaluate(const rnls_fourier* f, double t, int half_count,
                                           double* re, double* im);
/* max-norm error at every snapshot of a linear-scheme trajectory. */
RNLS_API rnls_status rnls_fourier_error(const rnls_fourier* f, const rnls_trajectory* traj,
                                        double* t, double* error);

/* ---- spectral stability -------------------------------------------------- */

typedef enum rnls_background {
  RNLS_BACKGROUND_DISCRETE_STATIONARY = 0,
  RNLS_BACKGROUND_SAMPLED_TANH = 1
} rnls_background;

typedef enum rnls_verdict { RNLS_STABLE = 0, RNLS_UNSTABLE = 1 } rnls_verdict;
typedef enum rnls_parity { RNLS_PARITY_EVEN = 0, RNLS_PARITY_ODD = 1, RNLS_PARITY_MIXED = 2 } rnls_parity;

#define RNLS_TOL_UNSTABLE 5e-3

typedef struct rnls_spectrum_summary {
  double eps;
  double max_real;
  rnls_verdict verdict;
  double dominant_re;
  double dominant_im;
  double symmetry_deviation;
  rnls_parity parity_u;
  rnls_parity parity_v;
  double tol_unstable;
} rnls_spectrum_summary;

typedef struct rnls_spectrum rnls_spectrum;

RNLS_API rnls_status rnls_spectrum_solve(double eps, double half_length, int half_count,
                                         rnls_background background, double tol_unstable,
                                         rnls_spectrum** out);
RNLS_API void rnls_spectrum_free(rnls_spectrum* s);
RNLS_API size_t rnls_spectrum_count(const rnls_spectrum* s);
RNLS_API rnls_status rnls_spectrum_eigenvalues(const rnls_spectrum* s, double* re, double* im);
RNLS_API rnls_status rnls_spectrum_get_summary(const rnls_spectrum* s, rnls_spectrum_summary* out);
/* Dominant eigenvector (U, V), 2K+1 entries each. */
RNLS_API rnls_status rnls_spectrum_dominant_vector(const rnls_spectrum* s, double* u_re,
                                                   double* u_im, double* v_re, double* v_im);

typedef struct rnls_bisection_step {
  int iteration;
  double lo;
  double hi;
  double mid;
  rnls_verdict verdict;
  double max_real;
} rnls_bisection_step;

typedef void (*rnls_bisection_callback)(const rnls_bisection_step* step, void* user);

typedef struct rnls_threshold rnls_threshold;

/* RNLS_ERR_INVALID_ARGUMENT when the bracket verdicts agree. */
RNLS_API rnls_status rnls_threshold_find(double half_length, int half_count, double eps_lo,
                                         double eps_hi, double width, double tol_unstable,
                                         rnls_bisection_callback progress, void* user,
                                         rnls_threshold** out);
RNLS_API void rnls_threshold_free(rnls_threshold* t);
RNLS_API double rnls_threshold_estimate(const rnls_threshold* t);
RNLS_API double rnls_threshold_closed_form(const rnls_threshold* t);
RNLS_API size_t rnls_threshold_step_count(const rnls_threshold* t);
RNLS_API rnls_status rnls_threshold_steps(const rnls_threshold* t, rnls_bisection_step* steps);

/* ---- residual checks ----------------------------------------------------- */

RNLS_API rnls_status rnls_essential_spectrum(double eps, double* lower, double* upper);
RNLS_API rnls_status rnls_lplus_spectrum(double eps, double* lower, double* upper,
                                         int* degenerate);
RNLS_API rnls_status rnls_vphi_residual(double eps, double half_length, int half_count,
                                        double* residual);
RNLS_API rnls_status rnls_near_kernel(double half_length, int half_count, double* lplus_dphi,
                                      double* lminus_phi);

#ifdef __cplusplus
}
#endif

#endif
