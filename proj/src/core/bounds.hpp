// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>

#include "kernel.hpp"

namespace spherepot {

struct ClogInterval {
  double lower;
  double upper;
};

/// Known bracket for C_log: lower = ln 2 - 3/4,
/// upper = 2 ln 2 + ln(2/3)/2 + 3 ln(sqrt(pi)/Gamma(1/3)).
ClogInterval clog_interval();

/// A finite-N lower bound with the pieces it is assembled from.
///
/// On S^2: value = delta_term + gamma_term, a lower bound for
/// log_energy - kappa N^2. On S^n, n >= 3: value = delta_term + gamma_term with
/// delta_term = -2N(N-1) k_radius and
/// gamma_term = N ball_ratio (k_complement + k_radius - k_antipodal), a lower
/// bound for green_energy. K values are zero on S^2.
struct BoundReport {
  double value = 0.0;
  double a_used = 0.0;
  double C_used = 0.0;  // 0 when the radius was given explicitly
  bool clamped = false;
  double gamma_term = 0.0;
  double delta_term = 0.0;
  double ball_ratio = 0.0;  // |B_{pi-a}| / |B_a|
  double k_radius = 0.0;
  double k_complement = 0.0;
  double k_antipodal = 0.0;
};

BoundReport s2_finite_lower_bound(std::int64_t n_points, double a);

/// Radius with sin^2(a/2) = C/N; requires 0 < C < N.
double s2_radius_for_C(std::int64_t n_points, double C);

/// s2_finite_lower_bound at the radius s2_radius_for_C(N, C), default C = 1.
BoundReport s2_finite_lower_bound_C(std::int64_t n_points, double C = 1.0);

/// kappa N^2 - N ln(N)/2 + N (ln 2 - 3/4), without the o(N) remainder.
double s2_asymptotic_bound(std::int64_t n_points);

BoundReport sn_finite_lower_bound(SphereDim dim, std::int64_t n_points, double a,
                                  const SeriesPolicy& policy = {});

/// sn_finite_lower_bound at a = sqrt(C) N^{-1/n}, C defaulting to
/// sn_optimal_C. When that radius is not inside (0, pi) the bound is taken at
/// a = pi/2 instead and `clamped` is set.
BoundReport sn_step_d_bound(SphereDim dim, std::int64_t n_points,
                            std::optional<double> C = std::nullopt,
                            const SeriesPolicy& policy = {});

/// (n V_n / V_{n-1})^{2/n}, n >= 3.
double sn_optimal_C(SphereDim dim);

/// -n^{1+2/n} / ((n^2-4) V_n^{1-2/n} V_{n-1}^{2/n}), n >= 3.
double sn_asymptotic_coefficient(SphereDim dim);

/// sn_asymptotic_coefficient * N^{2-2/n}.
double sn_asymptotic_bound(SphereDim dim, std::int64_t n_points);

}  // namespace spherepot
