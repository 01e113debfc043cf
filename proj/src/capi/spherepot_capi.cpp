// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0

#include "spherepot/spherepot.h"

#include <algorithm>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "energy.hpp"
#include "io.hpp"
#include "minimize.hpp"
#include "oracles.hpp"

struct sp_config {
  spherepot::PointConfig value;
};

struct sp_experiment {
  spherepot::Experiment value;
};

struct sp_check_report {
  std::vector<spherepot::CheckResult> checks;
  std::vector<std::string> lines;
};

namespace {

using namespace spherepot;

thread_local std::string g_last_error;
thread_local bool g_has_pair = false;
thread_local std::size_t g_pair_first = 0;
thread_local std::size_t g_pair_second = 0;

sp_status fail(sp_status status, const std::string& message) {
  g_last_error = message;
  g_has_pair = false;
  return status;
}

// Runs body and maps library exceptions onto status codes.
template <class Body>
sp_status guarded(Body&& body) noexcept {
  try {
    body();
    return SP_OK;
  } catch (const CoincidentPointsError& e) {
    const sp_status s = fail(SP_ERR_COINCIDENT, e.what());
    g_has_pair = true;
    g_pair_first = e.first();
    g_pair_second = e.second();
    return s;
  } catch (const TruncationError& e) {
    return fail(SP_ERR_TRUNCATION, e.what());
  } catch (const QuadratureError& e) {
    return fail(SP_ERR_QUADRATURE, e.what());
  } catch (const ParseError& e) {
    return fail(SP_ERR_PARSE, e.what());
  } catch (const IoError& e) {
    return fail(SP_ERR_IO, e.what());
  } catch (const DomainError& e) {
    return fail(SP_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SP_ERR_INTERNAL, "unknown exception");
  }
}

sp_status null_arg(const char* what) {
  return fail(SP_ERR_INVALID_ARGUMENT, std::string(what) + " must not be NULL");
}

SeriesPolicy to_policy(const sp_series_policy* p) {
  if (p == nullptr) return {};
  SeriesPolicy policy{p->rel_tol, p->abs_tol, p->max_terms};
  policy.validate();
  return policy;
}

sp_bound_report to_c(const BoundReport& r) {
  return {r.value,      r.a_used,     r.C_used,   r.clamped ? 1 : 0, r.gamma_term,
          r.delta_term, r.ball_ratio, r.k_radius, r.k_complement,    r.k_antipodal};
}

sp_energy_report to_c(const EnergyReport& r) {
  return {r.total, r.min_chordal_distance, r.n_pairs, r.routes.series, r.routes.reflected_series,
          r.routes.quadrature};
}

sp_termination to_c(Termination t) {
  switch (t) {
    case Termination::converged:
      return SP_TERM_CONVERGED;
    case Termination::max_iters:
      return SP_TERM_MAX_ITERS;
    case Termination::step_underflow:
      break;
  }
  return SP_TERM_STEP_UNDERFLOW;
}

MinimizeParams to_params(const sp_minimize_params* p) {
  if (p == nullptr) return {};
  return {p->max_iters, p->grad_tol, p->initial_step, p->backtrack_factor,
          p->armijo_c,  p->restarts, p->seed};
}

EnergyKind to_kind(sp_energy_kind kind) {
  if (kind == SP_KIND_LOG) return EnergyKind::log;
  if (kind == SP_KIND_GREEN) return EnergyKind::green;
  throw DomainError("unknown energy kind");
}

std::vector<double> unit_point(SphereDim dim, const double* p) {
  return std::vector<double>(p, p + dim.ambient());
}

}  // namespace

extern "C" {

const char* sp_version(void) { return "0.1.0"; }

const char* sp_status_name(sp_status status) {
  switch (status) {
    case SP_OK: return "ok";
    case SP_ERR_DOMAIN: return "domain error";
    case SP_ERR_TRUNCATION: return "series truncation";
    case SP_ERR_COINCIDENT: return "coincident points";
    case SP_ERR_QUADRATURE: return "quadrature failure";
    case SP_ERR_PARSE: return "parse error";
    case SP_ERR_IO: return "I/O error";
    case SP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sp_last_error(void) { return g_last_error.c_str(); }

sp_status sp_last_coincident_pair(size_t* i, size_t* j) {
  if (i == nullptr || j == nullptr) return null_arg("output");
  if (!g_has_pair) return SP_ERR_INVALID_ARGUMENT;
  *i = g_pair_first;
  *j = g_pair_second;
  return SP_OK;
}

sp_series_policy sp_series_policy_default(void) {
  const SeriesPolicy p;
  return {p.rel_tol, p.abs_tol, p.max_terms};
}

sp_status sp_hyp2f1(double a, double b, double c, double z, const sp_series_policy* policy,
                    double* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = hyp2f1_series(a, b, c, z, to_policy(policy)); });
}

sp_status sp_incomplete_beta(double x, double a, double b, double* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = incomplete_beta(x, a, b); });
}

sp_status sp_sphere_volume(int n, double* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = sphere_volume(n); });
}

sp_status sp_ball_volume(int n, double a, double* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = ball_volume(SphereDim(n), a); });
}

sp_status sp_series_S(int n, double s, const sp_series_policy* policy, double* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = series_S(SphereDim(n), s, to_policy(policy)); });
}

sp_status sp_green_s2(double t, double* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = green_s2(t); });
}

sp_status sp_green_sn(int n, double t, const sp_series_policy* policy, double* out,
                      sp_route* route) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    const KernelEval e = green_sn(SphereDim(n), t, to_policy(policy));
    *out = e.value;
    if (route != nullptr) {
      *route = e.route == KernelRoute::series            ? SP_ROUTE_SERIES
               : e.route == KernelRoute::reflected_series ? SP_ROUTE_REFLECTED
                                                          : SP_ROUTE_QUADRATURE;
    }
  });
}

sp_status sp_green_quadrature(int n, double geodesic_r, double* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = green_quadrature(SphereDim(n), geodesic_r); });
}

sp_status sp_kconst(int n, double a, const sp_series_policy* policy, double* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = kconst(SphereDim(n), a, to_policy(policy)); });
}

sp_status sp_ball_mean_green(int n, const double* p, const double* center, double a,
                             const sp_series_policy* policy, double* out) {
  if (p == nullptr || center == nullptr || out == nullptr) return null_arg("p, center and out");
  return guarded([&] {
    const SphereDim dim(n);
    *out = ball_mean_green(dim, unit_point(dim, p), BallSpec{unit_point(dim, center), a},
                           to_policy(policy));
  });
}

sp_status sp_ball_mean_log_s2(const double* p, const double* center, double a, double* out) {
  if (p == nullptr || center == nullptr || out == nullptr) return null_arg("p, center and out");
  return guarded([&] {
    const SphereDim dim(2);
    *out = ball_mean_log_s2(unit_point(dim, p), BallSpec{unit_point(dim, center), a});
  });
}

sp_status sp_config_create(int n, size_t n_points, const double* coords, sp_config** out) {
  if (coords == nullptr || out == nullptr) return null_arg("coords and out");
  return guarded([&] {
    const SphereDim dim(n);
    std::vector<double> data(coords, coords + n_points * static_cast<size_t>(dim.ambient()));
    *out = new sp_config{PointConfig(dim, std::move(data))};
  });
}

sp_status sp_config_random(int n, size_t n_points, uint64_t seed, sp_config** out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = new sp_config{random_uniform_config(SphereDim(n), n_points, seed)}; });
}

sp_status sp_config_load(const char* path, sp_config** out) {
  if (path == nullptr || out == nullptr) return null_arg("path and out");
  return guarded([&] { *out = new sp_config{load_config(path)}; });
}

sp_status sp_config_save(const sp_config* config, const char* path) {
  if (config == nullptr || path == nullptr) return null_arg("config and path");
  return guarded([&] { save_config(config->value, path); });
}

void sp_config_destroy(sp_config* config) { delete config; }

int sp_config_dim(const sp_config* config) {
  return config == nullptr ? 0 : config->value.dim().n();
}

size_t sp_config_size(const sp_config* config) {
  return config == nullptr ? 0 : config->value.size();
}

sp_status sp_config_coords(const sp_config* config, double* buffer, size_t capacity) {
  if (config == nullptr || buffer == nullptr) return null_arg("config and buffer");
  const auto& c = config->value.coords();
  if (capacity < c.size()) {
    return fail(SP_ERR_INVALID_ARGUMENT, "buffer holds " + std::to_string(capacity) +
                                             " doubles, need " + std::to_string(c.size()));
  }
  std::copy(c.begin(), c.end(), buffer);
  return SP_OK;
}

sp_status sp_log_energy(const sp_config* config, sp_energy_report* out) {
  if (config == nullptr || out == nullptr) return null_arg("config and out");
  return guarded([&] { *out = to_c(log_energy(config->value)); });
}

sp_status sp_green_energy(const sp_config* config, const sp_series_policy* policy,
                          sp_energy_report* out) {
  if (config == nullptr || out == nullptr) return null_arg("config and out");
  return guarded([&] { *out = to_c(green_energy(config->value, to_policy(policy))); });
}

double sp_kappa(void) { return kappa(); }

sp_status sp_recentered_energy_s2(const sp_config* config, double* out) {
  if (config == nullptr || out == nullptr) return null_arg("config and out");
  return guarded([&] { *out = recentered_energy_s2(config->value); });
}

sp_status sp_gradient(const sp_config* config, sp_energy_kind kind, const sp_series_policy* policy,
                      double* grad, size_t capacity) {
  if (config == nullptr || grad == nullptr) return null_arg("config and grad");
  if (capacity < config->value.coords().size()) {
    return fail(SP_ERR_INVALID_ARGUMENT, "gradient buffer too small");
  }
  return guarded([&] {
    const auto g = riemannian_gradient(config->value, to_kind(kind), to_policy(policy));
    std::copy(g.begin(), g.end(), grad);
  });
}

sp_status sp_clog_interval(double* lower, double* upper) {
  if (lower == nullptr || upper == nullptr) return null_arg("lower and upper");
  return guarded([&] {
    const ClogInterval c = clog_interval();
    *lower = c.lower;
    *upper = c.upper;
  });
}

sp_status sp_s2_finite_lower_bound(int64_t n_points, double a, sp_bound_report* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = to_c(s2_finite_lower_bound(n_points, a)); });
}

sp_status sp_s2_finite_lower_bound_C(int64_t n_points, double C, sp_bound_report* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = to_c(s2_finite_lower_bound_C(n_points, C)); });
}

sp_status sp_s2_asymptotic_bound(int64_t n_points, double* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = s2_asymptotic_bound(n_points); });
}

sp_status sp_sn_finite_lower_bound(int n, int64_t n_points, double a,
                                   const sp_series_policy* policy, sp_bound_report* out) {
  if (out == nullptr) return null_arg("out");
  return guarded(
      [&] { *out = to_c(sn_finite_lower_bound(SphereDim(n), n_points, a, to_policy(policy))); });
}

sp_status sp_sn_step_d_bound(int n, int64_t n_points, double C, const sp_series_policy* policy,
                             sp_bound_report* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    const std::optional<double> c = C > 0.0 ? std::optional<double>(C) : std::nullopt;
    *out = to_c(sn_step_d_bound(SphereDim(n), n_points, c, to_policy(policy)));
  });
}

sp_status sp_sn_optimal_C(int n, double* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = sn_optimal_C(SphereDim(n)); });
}

sp_status sp_sn_asymptotic_bound(int n, int64_t n_points, double* out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = sn_asymptotic_bound(SphereDim(n), n_points); });
}

sp_minimize_params sp_minimize_params_default(void) {
  const MinimizeParams p;
  return {p.max_iters, p.grad_tol,  p.initial_step, p.backtrack_factor,
          p.armijo_c,  p.restarts, p.seed};
}

sp_status sp_minimize(const sp_config* start, sp_energy_kind kind,
                      const sp_minimize_params* params, const sp_series_policy* policy,
                      sp_minimize_result* result, sp_config** final_config) {
  if (start == nullptr || result == nullptr) return null_arg("start and result");
  return guarded([&] {
    Trajectory t = minimize_energy(start->value, to_kind(kind), to_params(params), to_policy(policy));
    *result = {t.energies.front(), t.energies.back(), t.grad_norm, t.iterations,
               t.converged ? 1 : 0, to_c(t.status)};
    if (final_config != nullptr) *final_config = new sp_config{std::move(t.final_config)};
  });
}

sp_status sp_experiment_run(int n, const int64_t* n_values, size_t count,
                            const sp_minimize_params* params, const sp_series_policy* policy,
                            sp_experiment** out) {
  if (n_values == nullptr || out == nullptr) return null_arg("n_values and out");
  return guarded([&] {
    const std::vector<std::int64_t> values(n_values, n_values + count);
    *out = new sp_experiment{
        figure_experiment(SphereDim(n), values, to_params(params), to_policy(policy))};
  });
}

void sp_experiment_destroy(sp_experiment* exp) { delete exp; }

size_t sp_experiment_row_count(const sp_experiment* exp) {
  return exp == nullptr ? 0 : exp->value.rows.size();
}

sp_status sp_experiment_row_at(const sp_experiment* exp, size_t index, sp_experiment_row* out) {
  if (exp == nullptr || out == nullptr) return null_arg("exp and out");
  if (index >= exp->value.rows.size()) return fail(SP_ERR_INVALID_ARGUMENT, "row index out of range");
  const ExperimentRow& r = exp->value.rows[index];
  *out = {r.n,           r.n_points,  r.restart,          r.final_energy, r.finite_bound,
          r.asymptotic_bound, r.converged ? 1 : 0, r.iterations, to_c(r.status)};
  return SP_OK;
}

sp_status sp_experiment_best_config(const sp_experiment* exp, size_t index, sp_config** out) {
  if (exp == nullptr || out == nullptr) return null_arg("exp and out");
  if (index >= exp->value.best_configs.size()) {
    return fail(SP_ERR_INVALID_ARGUMENT, "N index out of range");
  }
  return guarded([&] { *out = new sp_config{exp->value.best_configs[index]}; });
}

sp_status sp_experiment_write_csv(const sp_experiment* exp, const char* path) {
  if (exp == nullptr || path == nullptr) return null_arg("exp and path");
  return guarded([&] { write_file_atomic(path, format_experiment_csv(exp->value)); });
}

sp_status sp_experiment_write_svg(const sp_experiment* exp, const char* path) {
  if (exp == nullptr || path == nullptr) return null_arg("exp and path");
  return guarded([&] { write_file_atomic(path, format_experiment_svg(exp->value)); });
}

sp_status sp_verify(const char* suite, uint64_t seed, int64_t samples, double tol_scale,
                    sp_check_report** out) {
  if (suite == nullptr || out == nullptr) return null_arg("suite and out");
  const std::string name(suite);
  const auto names = verify_suite_names();
  if (name != "all" && std::find(names.begin(), names.end(), name) == names.end()) {
    return fail(SP_ERR_INVALID_ARGUMENT, "unknown verify suite '" + name + "'");
  }
  return guarded([&] {
    VerifyOptions options;
    options.seed = seed;
    options.samples = samples;
    options.tol_scale = tol_scale;
    auto report = std::make_unique<sp_check_report>();
    report->checks = run_verify(name, options);
    for (const auto& c : report->checks) report->lines.push_back(format_check(c));
    *out = report.release();
  });
}

const char* sp_verify_suite_name(size_t index) {
  static const std::vector<std::string> names = verify_suite_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

void sp_check_report_destroy(sp_check_report* report) { delete report; }

size_t sp_check_report_size(const sp_check_report* report) {
  return report == nullptr ? 0 : report->checks.size();
}

sp_status sp_check_report_at(const sp_check_report* report, size_t index, sp_check* out) {
  if (report == nullptr || out == nullptr) return null_arg("report and out");
  if (index >= report->checks.size()) return fail(SP_ERR_INVALID_ARGUMENT, "check index out of range");
  const CheckResult& c = report->checks[index];
  *out = {c.name.c_str(), c.passed ? 1 : 0, c.max_violation, c.tolerance, c.samples, c.seed};
  return SP_OK;
}

const char* sp_check_report_line(const sp_check_report* report, size_t index) {
  if (report == nullptr || index >= report->lines.size()) return nullptr;
  return report->lines[index].c_str();
}

size_t sp_check_report_failures(const sp_check_report* report) {
  if (report == nullptr) return 0;
  size_t failures = 0;
  for (const auto& c : report->checks) failures += c.passed ? 0 : 1;
  return failures;
}

}  // extern "C"
