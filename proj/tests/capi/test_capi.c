/* Copyright 2026 The spherepot Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Exercises the public C header from a C translation unit. */

#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "spherepot/spherepot.h"

static int failures = 0;

#define EXPECT(cond)                                                    \
  do {                                                                  \
    if (!(cond)) {                                                      \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                       \
    }                                                                   \
  } while (0)

#define EXPECT_NEAR(a, b, tol) EXPECT(fabs((a) - (b)) <= (tol))

static void test_status_and_errors(void) {
  double out = 0.0;
  EXPECT(strcmp(sp_status_name(SP_ERR_COINCIDENT), sp_status_name(SP_OK)) != 0);
  EXPECT(sp_version() != NULL && strlen(sp_version()) > 0);
  EXPECT(sp_green_s2(0.0, &out) == SP_ERR_DOMAIN);
  EXPECT(strlen(sp_last_error()) > 0);
  EXPECT(sp_green_s2(2.0, NULL) == SP_ERR_INVALID_ARGUMENT);
  EXPECT(sp_green_s2(2.0, &out) == SP_OK);
  EXPECT_NEAR(out, -1.0 / (4.0 * M_PI), 1e-16);
  EXPECT(sp_sn_optimal_C(2, &out) == SP_ERR_DOMAIN);

  sp_series_policy tiny = sp_series_policy_default();
  tiny.max_terms = 2;
  EXPECT(sp_series_S(3, 0.4, &tiny, &out) == SP_ERR_TRUNCATION);
  sp_series_policy bad = sp_series_policy_default();
  bad.rel_tol = -1.0;
  EXPECT(sp_series_S(3, 0.4, &bad, &out) == SP_ERR_DOMAIN);
}

static void test_kernels(void) {
  double out = 0.0;
  sp_route route;
  EXPECT(sp_green_sn(3, 2.0, NULL, &out, &route) == SP_OK);
  EXPECT_NEAR(out, -0.037995443865876664291, 1e-15);
  EXPECT(route == SP_ROUTE_SERIES);
  double k = 0.0;
  EXPECT(sp_kconst(3, M_PI, NULL, &k) == SP_OK);
  EXPECT_NEAR(out + k, 0.0, 1e-10);
  EXPECT(sp_incomplete_beta(0.3, 2.0, 3.0, &out) == SP_OK);
  EXPECT(sp_sphere_volume(2, &out) == SP_OK);
  EXPECT_NEAR(out, 4.0 * M_PI, 1e-14);
  const double center[3] = {0, 0, 1};
  const double far[3] = {0, 0, -1};
  EXPECT(sp_ball_mean_log_s2(far, center, 0.5, &out) == SP_OK);
  EXPECT(sp_ball_mean_green(2, far, center, 4.0, NULL, &out) == SP_ERR_DOMAIN);
}

static void test_configs(void) {
  const double pair[6] = {0, 0, 1, 0, 0, -1};
  sp_config* c = NULL;
  EXPECT(sp_config_create(2, 2, pair, &c) == SP_OK);
  EXPECT(sp_config_dim(c) == 2);
  EXPECT(sp_config_size(c) == 2);
  sp_energy_report r;
  EXPECT(sp_log_energy(c, &r) == SP_OK);
  EXPECT_NEAR(r.total, -2.0 * log(2.0), 1e-15);
  EXPECT(r.n_pairs == 1);
  double rec = 0.0;
  EXPECT(sp_recentered_energy_s2(c, &rec) == SP_OK);
  EXPECT_NEAR(rec, 2.0 * log(2.0) - 2.0, 1e-15);
  double grad[6];
  EXPECT(sp_gradient(c, SP_KIND_LOG, NULL, grad, 6) == SP_OK);
  EXPECT(sp_gradient(c, SP_KIND_LOG, NULL, grad, 5) == SP_ERR_INVALID_ARGUMENT);
  double coords[6];
  EXPECT(sp_config_coords(c, coords, 6) == SP_OK);
  EXPECT(coords[5] == -1.0);
  EXPECT(sp_config_coords(c, coords, 3) == SP_ERR_INVALID_ARGUMENT);
  sp_config_destroy(c);
  sp_config_destroy(NULL);

  const double dup[9] = {1, 0, 0, 0, 0, 1, 0, 0, 1};
  sp_config* d = NULL;
  EXPECT(sp_config_create(2, 3, dup, &d) == SP_ERR_COINCIDENT);
  EXPECT(d == NULL);
  size_t i = 99, j = 99;
  EXPECT(sp_last_coincident_pair(&i, &j) == SP_OK);
  EXPECT(i == 1 && j == 2);

  const double off[6] = {0, 0, 1, 0, 0, 0.5};
  EXPECT(sp_config_create(2, 2, off, &d) == SP_ERR_DOMAIN);
  EXPECT(sp_config_create(2, 2, NULL, &d) == SP_ERR_INVALID_ARGUMENT);
  EXPECT(sp_config_load("/nonexistent/dir/file.txt", &d) == SP_ERR_IO);
  EXPECT(sp_log_energy(NULL, &r) == SP_ERR_INVALID_ARGUMENT);
}

static void test_bounds(void) {
  double lo = 0.0, hi = 0.0;
  EXPECT(sp_clog_interval(&lo, &hi) == SP_OK);
  EXPECT_NEAR(lo, log(2.0) - 0.75, 1e-16);
  EXPECT(lo < hi);
  EXPECT_NEAR(sp_kappa(), -0.1931471805599453, 1e-15);
  sp_bound_report b;
  EXPECT(sp_s2_finite_lower_bound(2, M_PI / 2, &b) == SP_OK);
  EXPECT_NEAR(b.value, 2.0 * log(2.0) - 2.0, 1e-12);
  EXPECT(sp_sn_step_d_bound(4, 100, 0.0, NULL, &b) == SP_OK);
  EXPECT_NEAR(b.C_used, sqrt(16.0 / 3.0), 1e-15);
  EXPECT(sp_sn_finite_lower_bound(2, 10, 1.0, NULL, &b) == SP_ERR_DOMAIN);
}

static void test_minimize_and_experiment(void) {
  sp_config* start = NULL;
  EXPECT(sp_config_random(2, 4, 7, &start) == SP_OK);
  sp_minimize_params p = sp_minimize_params_default();
  sp_minimize_result res;
  sp_config* fin = NULL;
  EXPECT(sp_minimize(start, SP_KIND_LOG, &p, NULL, &res, &fin) == SP_OK);
  EXPECT(res.final_energy <= res.initial_energy);
  EXPECT(fin != NULL);
  sp_config_destroy(fin);
  p.backtrack_factor = 2.0;
  EXPECT(sp_minimize(start, SP_KIND_LOG, &p, NULL, &res, &fin) == SP_ERR_DOMAIN);
  sp_config_destroy(start);

  const int64_t ns[2] = {4, 5};
  sp_minimize_params q = sp_minimize_params_default();
  q.restarts = 2;
  sp_experiment* e = NULL;
  EXPECT(sp_experiment_run(3, ns, 2, &q, NULL, &e) == SP_OK);
  EXPECT(sp_experiment_row_count(e) == 4);
  sp_experiment_row row;
  EXPECT(sp_experiment_row_at(e, 3, &row) == SP_OK);
  EXPECT(row.n_points == 5 && row.restart == 1);
  EXPECT(row.final_energy >= row.finite_bound);
  EXPECT(sp_experiment_row_at(e, 4, &row) == SP_ERR_INVALID_ARGUMENT);
  sp_config* best = NULL;
  EXPECT(sp_experiment_best_config(e, 1, &best) == SP_OK);
  EXPECT(sp_config_size(best) == 5);
  sp_config_destroy(best);
  sp_experiment_destroy(e);
}

static void test_verify(void) {
  sp_check_report* rep = NULL;
  EXPECT(sp_verify("gyk", 1, 1000, 1.0, &rep) == SP_OK);
  EXPECT(sp_check_report_size(rep) == 1);
  EXPECT(sp_check_report_failures(rep) == 0);
  sp_check chk;
  EXPECT(sp_check_report_at(rep, 0, &chk) == SP_OK);
  EXPECT(chk.passed && chk.max_violation <= chk.tolerance);
  EXPECT(strncmp(sp_check_report_line(rep, 0), "CHECK ", 6) == 0);
  sp_check_report_destroy(rep);
  EXPECT(sp_verify("no_such_suite", 1, 1000, 1.0, &rep) == SP_ERR_INVALID_ARGUMENT);
  EXPECT(sp_verify_suite_name(0) != NULL);
  EXPECT(sp_verify_suite_name(1000) == NULL);
}

int main(void) {
  test_status_and_errors();
  test_kernels();
  test_configs();
  test_bounds();
  test_minimize_and_experiment();
  test_verify();
  if (failures) {
    fprintf(stderr, "%d C API expectation(s) failed\n", failures);
    return EXIT_FAILURE;
  }
  puts("C API: all expectations met");
  return EXIT_SUCCESS;
}
