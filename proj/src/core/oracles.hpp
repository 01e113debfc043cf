// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "energy.hpp"

namespace spherepot {

/// Outcome of one numerical certificate. passed == (max_violation <= tolerance).
struct CheckResult {
  std::string name;
  bool passed = false;
  double max_violation = 0.0;
  double tolerance = 0.0;
  std::int64_t samples = 0;  // Monte Carlo samples or grid size
  std::uint64_t seed = 0;
  std::string detail;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
};

/// Uniform sampler on a geodesic ball. The geodesic radius is drawn by
/// numerically inverting its CDF, proportional to int_0^r sin^{n-1} t dt
/// (equivalently I_{sin^2(r/2)}(n/2, n/2)), and the direction uniformly in the
/// tangent space at the center.
class BallSampler {
 public:
  BallSampler(SphereDim dim, std::span<const double> center, double radius);
  void operator()(std::mt19937_64& rng, std::span<double> out) const;

  /// Inverse of the radial CDF; u in [0, 1].
  double radius_quantile(double u) const;

 private:
  double radial_mass(double r) const;  // int_0^r sin^{n-1} t dt

  SphereDim dim_;
  std::vector<double> center_;
  double radius_;
  double mass_;                // radial_mass(radius_)
  std::vector<double> knots_;  // knots_[i] = radius_quantile(i / (size - 1))
};

void sample_sphere(SphereDim dim, std::mt19937_64& rng, std::span<double> out);

/// Block-parallel Monte Carlo mean of f over uniform points of S^n. Blocks
/// own RNG streams derived from (seed, block index) and are merged in index
/// order, so the result depends only on the arguments.
McEstimate mc_sphere_mean(SphereDim dim, const std::function<double(std::span<const double>)>& f,
                          std::int64_t samples, std::uint64_t seed);

/// Same over a geodesic ball.
McEstimate mc_ball_mean_of(SphereDim dim, const BallSpec& ball,
                           const std::function<double(std::span<const double>)>& f,
                           std::int64_t samples, std::uint64_t seed);

/// Mean over the ball of ln|p - q| (log kind) or G(S^n; p, q) (green kind).
McEstimate mc_ball_mean(SphereDim dim, const BallSpec& ball, std::span<const double> p,
                        EnergyKind kind, std::int64_t samples, std::uint64_t seed,
                        const SeriesPolicy& policy = {});

// Individual checks. Grid resolutions count interior points: a grid of G
// over (lo, hi) uses lo + (hi - lo) i / (G + 1), i = 1..G.

/// The pair function F(s, alpha) on S^n, n >= 3, summed over k in closed
/// form. Nonnegative, zero exactly on the diagonal s = alpha.
double F_sn(SphereDim dim, double s, double alpha, const SeriesPolicy& policy = {});

std::vector<CheckResult> check_F_s2(int grid_t, int grid_alpha);
std::vector<CheckResult> check_F_sn(SphereDim dim, int grid, const SeriesPolicy& policy = {});
std::vector<CheckResult> check_K_asymptotics(SphereDim dim, const SeriesPolicy& policy = {});
CheckResult check_Sn_asymptotic(SphereDim dim, const SeriesPolicy& policy = {});
CheckResult check_Sn_growth(SphereDim dim, const SeriesPolicy& policy = {});
CheckResult check_alpha_positivity(const PointConfig& config, double a, std::int64_t samples,
                                   std::uint64_t seed, const SeriesPolicy& policy = {});
CheckResult check_delta_bound(const PointConfig& config, double a, std::int64_t samples,
                              std::uint64_t seed, const SeriesPolicy& policy = {});
std::vector<CheckResult> check_route_agreement(const SeriesPolicy& policy = {});
CheckResult check_gyk(const SeriesPolicy& policy = {});
CheckResult check_zero_mean(SphereDim dim, std::int64_t samples, std::uint64_t seed,
                            const SeriesPolicy& policy = {});
CheckResult check_log_sphere_mean(std::int64_t samples, std::uint64_t seed);
CheckResult check_se_scaling(std::int64_t samples, std::uint64_t seed);
/// Five point/ball geometries per call; returns the equality check and, for
/// points inside the ball, the one-sided mean-value inequality.
std::vector<CheckResult> check_ball_means(SphereDim dim, EnergyKind kind, bool inside,
                                          std::int64_t samples, std::uint64_t seed,
                                          const SeriesPolicy& policy = {});
std::vector<CheckResult> check_specfun_identities();
CheckResult check_log_inequality();
CheckResult check_tightness_s2();

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::int64_t samples = 1'000'000;
  double tol_scale = 1.0;  // multiplies every tolerance; 0 turns the harness strict
  SeriesPolicy policy;
};

/// "all" or one of verify_suite_names().
std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& options);
std::vector<std::string> verify_suite_names();

/// CHECK <name> <PASS|FAIL> max_violation=<v> tol=<t> seed=<s>
std::string format_check(const CheckResult& result);

}  // namespace spherepot
