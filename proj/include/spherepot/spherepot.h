/* Copyright 2026 The spherepot Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * spherepot: Green and logarithmic energies of point sets on spheres, their
 * lower bounds, a Riemannian descent minimizer and a numerical check harness.
 *
 * Conventions
 *   - Every fallible call returns sp_status. On failure a thread-local message
 *     is available from sp_last_error() until the next failing call.
 *   - Points on S^n are rows of n+1 doubles, stored contiguously (row-major).
 *   - Handles are opaque and owned by the caller; pass them to the matching
 *     *_destroy function. Destroy functions accept NULL.
 *   - Output pointers are written only on SP_OK.
 */
#ifndef SPHEREPOT_SPHEREPOT_H
#define SPHEREPOT_SPHEREPOT_H

#include <stddef.h>
#include <stdint.h>

#if defined(SPHEREPOT_BUILDING)
#define SP_API __attribute__((visibility("default")))
#else
#define SP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sp_status {
  SP_OK = 0,
  SP_ERR_DOMAIN = 1,        /* argument outside the mathematical domain */
  SP_ERR_TRUNCATION = 2,    /* a series hit max_terms before converging */
  SP_ERR_COINCIDENT = 3,    /* two points of a configuration coincide */
  SP_ERR_QUADRATURE = 4,    /* adaptive quadrature missed its error target */
  SP_ERR_PARSE = 5,
  SP_ERR_IO = 6,
  SP_ERR_INVALID_ARGUMENT = 7, /* NULL pointer, bad buffer size, unknown name */
  SP_ERR_INTERNAL = 8
} sp_status;

typedef enum sp_energy_kind { SP_KIND_LOG = 0, SP_KIND_GREEN = 1 } sp_energy_kind;

typedef enum sp_route { SP_ROUTE_SERIES = 0, SP_ROUTE_REFLECTED = 1, SP_ROUTE_QUADRATURE = 2 } sp_route;

SP_API const char* sp_version(void);
SP_API const char* sp_status_name(sp_status status);
/* Message of the most recent failure on this thread ("" if none). */
SP_API const char* sp_last_error(void);

/* For CoincidentPointsError: the offending indices of the last failure on this
 * thread. Returns SP_ERR_INVALID_ARGUMENT if the last failure was different. */
SP_API sp_status sp_last_coincident_pair(size_t* i, size_t* j);

typedef struct sp_series_policy {
  double rel_tol;
  double abs_tol;
  int64_t max_terms;
} sp_series_policy;

SP_API sp_series_policy sp_series_policy_default(void);

/* Special functions. policy may be NULL for the defaults. */
SP_API sp_status sp_hyp2f1(double a, double b, double c, double z, const sp_series_policy* policy,
                           double* out);
SP_API sp_status sp_incomplete_beta(double x, double a, double b, double* out);
SP_API sp_status sp_sphere_volume(int n, double* out);
SP_API sp_status sp_ball_volume(int n, double a, double* out);
SP_API sp_status sp_series_S(int n, double s, const sp_series_policy* policy, double* out);

/* Kernels. t is the chordal distance in (0, 2]. route may be NULL. */
SP_API sp_status sp_green_s2(double t, double* out);
SP_API sp_status sp_green_sn(int n, double t, const sp_series_policy* policy, double* out,
                             sp_route* route);
SP_API sp_status sp_green_quadrature(int n, double geodesic_r, double* out);
SP_API sp_status sp_kconst(int n, double a, const sp_series_policy* policy, double* out);
/* Mean of G(p, .) (n >= 2) over the geodesic ball B(center, a). */
SP_API sp_status sp_ball_mean_green(int n, const double* p, const double* center, double a,
                                    const sp_series_policy* policy, double* out);
/* Mean of ln|p - .| over a geodesic ball of S^2. */
SP_API sp_status sp_ball_mean_log_s2(const double* p, const double* center, double a,
                                     double* out);

/* Point configurations. */
typedef struct sp_config sp_config;

SP_API sp_status sp_config_create(int n, size_t n_points, const double* coords, sp_config** out);
SP_API sp_status sp_config_random(int n, size_t n_points, uint64_t seed, sp_config** out);
SP_API sp_status sp_config_load(const char* path, sp_config** out);
SP_API sp_status sp_config_save(const sp_config* config, const char* path);
SP_API void sp_config_destroy(sp_config* config);
SP_API int sp_config_dim(const sp_config* config);
SP_API size_t sp_config_size(const sp_config* config);
/* Copies N*(n+1) doubles into buffer; capacity is in doubles. */
SP_API sp_status sp_config_coords(const sp_config* config, double* buffer, size_t capacity);

/* Energies. */
typedef struct sp_energy_report {
  double total;
  double min_chordal_distance;
  int64_t n_pairs;
  int64_t route_series;
  int64_t route_reflected;
  int64_t route_quadrature;
} sp_energy_report;

SP_API sp_status sp_log_energy(const sp_config* config, sp_energy_report* out);
SP_API sp_status sp_green_energy(const sp_config* config, const sp_series_policy* policy,
                                 sp_energy_report* out);
SP_API double sp_kappa(void);
SP_API sp_status sp_recentered_energy_s2(const sp_config* config, double* out);
/* Tangent gradient; grad has capacity N*(n+1) doubles. */
SP_API sp_status sp_gradient(const sp_config* config, sp_energy_kind kind,
                             const sp_series_policy* policy, double* grad, size_t capacity);

/* Bounds. */
typedef struct sp_bound_report {
  double value;
  double a_used;
  double C_used;
  int clamped;
  double gamma_term;
  double delta_term;
  double ball_ratio;
  double k_radius;
  double k_complement;
  double k_antipodal;
} sp_bound_report;

SP_API sp_status sp_clog_interval(double* lower, double* upper);
SP_API sp_status sp_s2_finite_lower_bound(int64_t n_points, double a, sp_bound_report* out);
SP_API sp_status sp_s2_finite_lower_bound_C(int64_t n_points, double C, sp_bound_report* out);
SP_API sp_status sp_s2_asymptotic_bound(int64_t n_points, double* out);
SP_API sp_status sp_sn_finite_lower_bound(int n, int64_t n_points, double a,
                                          const sp_series_policy* policy, sp_bound_report* out);
/* C <= 0 selects the optimal constant. */
SP_API sp_status sp_sn_step_d_bound(int n, int64_t n_points, double C,
                                    const sp_series_policy* policy, sp_bound_report* out);
SP_API sp_status sp_sn_optimal_C(int n, double* out);
SP_API sp_status sp_sn_asymptotic_bound(int n, int64_t n_points, double* out);

/* Minimization. */
typedef struct sp_minimize_params {
  int64_t max_iters;
  double grad_tol;
  double initial_step; /* 0 selects 1/N */
  double backtrack_factor;
  double armijo_c;
  int restarts;
  uint64_t seed;
} sp_minimize_params;

typedef enum sp_termination {
  SP_TERM_CONVERGED = 0,
  SP_TERM_MAX_ITERS = 1,
  SP_TERM_STEP_UNDERFLOW = 2
} sp_termination;

typedef struct sp_minimize_result {
  double initial_energy;
  double final_energy;
  double grad_norm;
  int64_t iterations;
  int converged;
  sp_termination status;
} sp_minimize_result;

SP_API sp_minimize_params sp_minimize_params_default(void);
/* Descends from start; *final_config receives a new handle. */
SP_API sp_status sp_minimize(const sp_config* start, sp_energy_kind kind,
                             const sp_minimize_params* params, const sp_series_policy* policy,
                             sp_minimize_result* result, sp_config** final_config);

typedef struct sp_experiment sp_experiment;

typedef struct sp_experiment_row {
  int n;
  int64_t n_points;
  int restart;
  double final_energy;
  double finite_bound;
  double asymptotic_bound;
  int converged;
  int64_t iterations;
  sp_termination status;
} sp_experiment_row;

/* Restarted minimization for each N; log energy on S^2, Green energy for n >= 3. */
SP_API sp_status sp_experiment_run(int n, const int64_t* n_values, size_t count,
                                   const sp_minimize_params* params,
                                   const sp_series_policy* policy, sp_experiment** out);
SP_API void sp_experiment_destroy(sp_experiment* exp);
SP_API size_t sp_experiment_row_count(const sp_experiment* exp);
SP_API sp_status sp_experiment_row_at(const sp_experiment* exp, size_t index,
                                      sp_experiment_row* out);
/* Best configuration for the index-th N value (new handle). */
SP_API sp_status sp_experiment_best_config(const sp_experiment* exp, size_t index,
                                           sp_config** out);
SP_API sp_status sp_experiment_write_csv(const sp_experiment* exp, const char* path);
SP_API sp_status sp_experiment_write_svg(const sp_experiment* exp, const char* path);

/* Check harness. */
typedef struct sp_check_report sp_check_report;

typedef struct sp_check {
  const char* name; /* owned by the report */
  int passed;
  double max_violation;
  double tolerance;
  int64_t samples;
  uint64_t seed;
} sp_check;

/* suite is "all" or one of the names from sp_verify_suite_name. */
SP_API sp_status sp_verify(const char* suite, uint64_t seed, int64_t samples, double tol_scale,
                           sp_check_report** out);
SP_API const char* sp_verify_suite_name(size_t index); /* NULL past the end */
SP_API void sp_check_report_destroy(sp_check_report* report);
SP_API size_t sp_check_report_size(const sp_check_report* report);
SP_API sp_status sp_check_report_at(const sp_check_report* report, size_t index, sp_check* out);
/* The CHECK line for one entry (owned by the report). */
SP_API const char* sp_check_report_line(const sp_check_report* report, size_t index);
SP_API size_t sp_check_report_failures(const sp_check_report* report);

#ifdef __cplusplus
}
#endif

#endif /* SPHEREPOT_SPHEREPOT_H */
