// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "specfun.hpp"

namespace spherepot {

enum class KernelRoute {
  series,            // direct series, 1 - t^2/4 <= 1/2
  reflected_series,  // S_n reflection, 1 - t^2/4 > 1/2
  quadrature,        // radial quadrature oracle
};

struct KernelEval {
  double value = 0.0;
  std::int64_t terms_used = 0;
  KernelRoute route = KernelRoute::series;
};

/// Radius-dependent constants of the ball mean-value formula.
struct BallMeanConstants {
  double radius = 0.0;
  double k_radius = 0.0;      // K(S^n, a)
  double k_complement = 0.0;  // K(S^n, pi - a)
  double volume_ratio = 0.0;  // |B_{pi-a}| / |B_a|
};

/// g(t) together with g'(t)/t.
struct KernelSlope {
  double value = 0.0;
  double radial_factor = 0.0;
  KernelRoute route = KernelRoute::series;
};

/// Geodesic ball B(center, radius) on S^n.
struct BallSpec {
  std::vector<double> center;
  double radius = 0.0;

  /// Throws DomainError unless center is a unit vector of R^{n+1} (1e-12)
  /// and 0 < radius < pi.
  void validate(SphereDim dim) const;
};

/// Green function of S^n as a function of chordal distance t.
///
///   g(t) = 2/(n V_n) * S_n(1 - t^2/4) - H_{n-1} / ((n-1) V_n)
///
/// which is the term-by-term split of the defining series: the constant part
/// sum_k (n)_k B(n/2, n/2+k+1) / ((n/2+1)_k (k+1) B(n/2,n/2)) telescopes to
/// n H_{n-1} / (2(n-1)). Dimension constants are computed once per object.
class GreenKernel {
 public:
  explicit GreenKernel(SphereDim dim, SeriesPolicy policy = {});

  SphereDim dim() const noexcept { return dim_; }
  const SeriesPolicy& policy() const noexcept { return policy_; }
  double volume() const noexcept { return volume_; }

  /// g(t) for 0 < t <= 2.
  KernelEval eval(double t) const;
  double operator()(double t) const { return eval(t).value; }

  /// g'(t) / t = -2F1(1, n; n/2+1; 1 - t^2/4) / (n V_n). The gradient of
  /// g(|p - q|) with respect to p is this factor times (p - q).
  double radial_factor(double t) const;

  /// g'(t).
  double derivative(double t) const { return t * radial_factor(t); }

  /// eval() and radial_factor() in one call, sharing the series work where
  /// the routes allow it.
  KernelSlope eval_with_slope(double t) const;

  /// K(S^n, a): mean of G(-p0, .) - G(-p0, p0) over B(p0, a); 0 at a = 0.
  double kconst(double a) const;

  /// Exact mean of G(p, .) over the ball. Points at distance exactly `radius`
  /// from the center take the inside branch.
  double ball_mean(std::span<const double> p, const BallSpec& ball) const;

  /// Precomputes everything in ball_mean() that depends only on the radius.
  BallMeanConstants ball_constants(double a) const;

  /// ball_mean() for many points or centers sharing one radius. The center
  /// is assumed valid.
  double ball_mean(std::span<const double> p, std::span<const double> center,
                   const BallMeanConstants& constants) const;

 private:
  // sum_k c_k B_s(n/2+k+1, n/2) for 0 <= s <= 1/2.
  double upper_beta_sum(double s) const;
  double incomplete_beta_mm(double x) const;

  SphereDim dim_;
  SeriesPolicy policy_;
  double volume_;
  double scale_;      // 2 / (n V_n)
  double offset_;     // H_{n-1} / ((n-1) V_n)
  double beta_mm_;    // B(n/2, n/2)
  double mean_sum_;   // n H_{n-1} / (2(n-1))
};

/// Green function of S^2, -ln(t)/(2 pi) - 1/(4 pi) + ln 2/(2 pi).
double green_s2(double t);

/// Series Green function of S^n (convenience wrapper around GreenKernel).
KernelEval green_sn(SphereDim dim, double t, const SeriesPolicy& policy = {});

/// Green function of S^n at geodesic distance r from the radial
/// harmonic-manifold integral, with the additive constant fixed by the
/// zero-mean condition. Independent of the series code; used as its oracle.
double green_quadrature(SphereDim dim, double r);

/// K(S^n, a) for 0 <= a <= pi.
double kconst(SphereDim dim, double a, const SeriesPolicy& policy = {});

/// Closed form of K(S^2, a) = -(1/(2 pi)) (-1/2 - cot^2(a/2) ln cos(a/2)).
double kconst_s2_closed_form(double a);

/// Mean of G(S^n; p, .) over a geodesic ball.
double ball_mean_green(SphereDim dim, std::span<const double> p, const BallSpec& ball,
                       const SeriesPolicy& policy = {});

/// Mean of ln|p - q| over a geodesic ball of S^2 (both cases of the classical
/// mean-value formula).
double ball_mean_log_s2(std::span<const double> p, const BallSpec& ball);

/// Chordal distance |p - q|.
double chordal_distance(std::span<const double> p, std::span<const double> q);

/// Geodesic distance 2 atan2(|p - q|, |p + q|), accurate near 0 and pi.
double geodesic_distance(std::span<const double> p, std::span<const double> q);

}  // namespace spherepot
