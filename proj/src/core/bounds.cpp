// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0

#include "bounds.hpp"

#include <cmath>
#include <numbers>

#include "energy.hpp"

namespace spherepot {

namespace {

constexpr double kPi = std::numbers::pi;

void require_points(std::int64_t n_points) {
  if (n_points < 2) throw DomainError("bound requires N >= 2");
}

}  // namespace

ClogInterval clog_interval() {
  const double ln2 = std::numbers::ln2;
  return {ln2 - 0.75, 2.0 * ln2 + 0.5 * std::log(2.0 / 3.0) +
                          3.0 * std::log(std::sqrt(kPi) / gamma_fn(1.0 / 3.0))};
}

BoundReport s2_finite_lower_bound(std::int64_t n_points, double a) {
  require_points(n_points);
  if (!(a > 0.0 && a < kPi)) throw DomainError("s2 bound: radius must lie in (0, pi)");
  const double N = static_cast<double>(n_points);
  const double cot = 1.0 / std::tan(0.5 * a);
  const double cot2 = cot * cot;
  const double log_cos = std::log(std::cos(0.5 * a));
  BoundReport r;
  r.a_used = a;
  r.delta_term = N * (N - 1.0) * (-1.0 - 2.0 * cot2 * log_cos);
  r.gamma_term = N * (std::numbers::ln2 - 0.5 + std::log(std::sin(0.5 * a)) +
                      cot2 * (0.5 + cot2 * log_cos));
  r.ball_ratio = 1.0 / (std::sin(0.5 * a) * std::sin(0.5 * a)) - 1.0;
  r.value = r.delta_term + r.gamma_term;
  return r;
}

double s2_radius_for_C(std::int64_t n_points, double C) {
  require_points(n_points);
  const double N = static_cast<double>(n_points);
  if (!(C > 0.0 && C < N)) throw DomainError("s2 bound: C must lie in (0, N)");
  return 2.0 * std::asin(std::sqrt(C / N));
}

BoundReport s2_finite_lower_bound_C(std::int64_t n_points, double C) {
  BoundReport r = s2_finite_lower_bound(n_points, s2_radius_for_C(n_points, C));
  r.C_used = C;
  return r;
}

double s2_asymptotic_bound(std::int64_t n_points) {
  require_points(n_points);
  const double N = static_cast<double>(n_points);
  return kappa() * N * N - 0.5 * N * std::log(N) + N * (std::numbers::ln2 - 0.75);
}

BoundReport sn_finite_lower_bound(SphereDim dim, std::int64_t n_points, double a,
                                  const SeriesPolicy& policy) {
  dim = SphereDim::at_least_three(dim.n(), "finite Green-energy bound");
  require_points(n_points);
  if (!(a > 0.0 && a < kPi)) throw DomainError("sn bound: radius must lie in (0, pi)");
  const GreenKernel kernel(dim, policy);
  const double N = static_cast<double>(n_points);
  BoundReport r;
  r.a_used = a;
  r.k_radius = kernel.kconst(a);
  r.k_complement = kernel.kconst(kPi - a);
  r.k_antipodal = kernel.kconst(kPi);
  r.ball_ratio = ball_volume(dim, kPi - a, policy) / ball_volume(dim, a, policy);
  r.delta_term = -2.0 * N * (N - 1.0) * r.k_radius;
  r.gamma_term = N * r.ball_ratio * (r.k_complement + r.k_radius - r.k_antipodal);
  r.value = r.delta_term + r.gamma_term;
  return r;
}

BoundReport sn_step_d_bound(SphereDim dim, std::int64_t n_points, std::optional<double> C,
                            const SeriesPolicy& policy) {
  dim = SphereDim::at_least_three(dim.n(), "finite Green-energy bound");
  require_points(n_points);
  const double c = C.value_or(sn_optimal_C(dim));
  if (!(c > 0.0)) throw DomainError("sn bound: C must be > 0");
  double a = std::sqrt(c) * std::pow(static_cast<double>(n_points), -1.0 / dim.n());
  const bool clamped = !(a > 0.0 && a < kPi);
  if (clamped) a = 0.5 * kPi;
  BoundReport r = sn_finite_lower_bound(dim, n_points, a, policy);
  r.C_used = c;
  r.clamped = clamped;
  return r;
}

double sn_optimal_C(SphereDim dim) {
  dim = SphereDim::at_least_three(dim.n(), "optimal C");
  const int n = dim.n();
  return std::pow(n * sphere_volume(n) / sphere_volume(n - 1), 2.0 / n);
}

double sn_asymptotic_coefficient(SphereDim dim) {
  dim = SphereDim::at_least_three(dim.n(), "asymptotic Green-energy bound");
  const double n = dim.n();
  return -std::pow(n, 1.0 + 2.0 / n) /
         ((n * n - 4.0) * std::pow(sphere_volume(dim.n()), 1.0 - 2.0 / n) *
          std::pow(sphere_volume(dim.n() - 1), 2.0 / n));
}

double sn_asymptotic_bound(SphereDim dim, std::int64_t n_points) {
  require_points(n_points);
  const double n = dim.n();
  return sn_asymptotic_coefficient(dim) * std::pow(static_cast<double>(n_points), 2.0 - 2.0 / n);
}

}  // namespace spherepot
