// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace spherepot {

/// Truncation policy shared by every infinite series in the library.
///
/// A series stops once three consecutive terms satisfy
/// |term| <= rel_tol * |partial sum| + abs_tol. Reaching max_terms first is a
/// TruncationError, never a silent return.
struct SeriesPolicy {
  double rel_tol = 1e-13;
  double abs_tol = 1e-300;
  std::int64_t max_terms = 1'000'000;

  /// Throws DomainError unless rel_tol > 0, abs_tol >= 0 and max_terms >= 1.
  void validate() const;
};

/// Dimension n of the unit sphere S^n embedded in R^{n+1}; n >= 2.
class SphereDim {
 public:
  explicit SphereDim(int n);

  /// Same as the constructor but also rejects n = 2.
  static SphereDim at_least_three(int n, const char* what);

  int n() const noexcept { return n_; }
  double half() const noexcept { return 0.5 * n_; }
  int ambient() const noexcept { return n_ + 1; }

  friend bool operator==(SphereDim a, SphereDim b) { return a.n_ == b.n_; }

 private:
  int n_;
};

/// Sums term(0), term(1), ... under `policy`. `what` names the series in the
/// TruncationError message; the number of terms used is added to `*terms`.
template <class TermFn>
double sum_series(const SeriesPolicy& policy, const char* what, TermFn&& term,
                  std::int64_t* terms = nullptr) {
  double sum = 0.0;
  int small_run = 0;
  for (std::int64_t k = 0; k < policy.max_terms; ++k) {
    const double t = term(k);
    sum += t;
    if (std::abs(t) <= policy.rel_tol * std::abs(sum) + policy.abs_tol) {
      if (++small_run == 3) {
        if (terms != nullptr) *terms += k + 1;
        return sum;
      }
    } else {
      small_run = 0;
    }
  }
  throw TruncationError(std::string(what) + ": no convergence within " +
                            std::to_string(policy.max_terms) + " terms",
                        policy.max_terms);
}

/// Rising factorial x (x+1) ... (x+k-1); 1 when k = 0.
double pochhammer(double x, std::int64_t k);

/// Gamma function for x > 0. Half-integer arguments use the exact
/// recursion from Gamma(1) = 1 and Gamma(1/2) = sqrt(pi); anything else
/// goes to std::tgamma.
double gamma_fn(double x);

/// log Gamma(x) for x > 0; std::lgamma off the half integers.
double log_gamma(double x);

/// Euler beta function B(a, b), a, b > 0.
double beta_fn(double a, double b);

/// H_n = 1 + 1/2 + ... + 1/n.
double harmonic_number(int n);

/// Gauss hypergeometric series 2F1(a, b; c; z) for |z| < 1.
double hyp2f1_series(double a, double b, double c, double z,
                     const SeriesPolicy& policy = {});

/// Non-regularized incomplete beta B_x(a, b) = int_0^x t^{a-1}(1-t)^{b-1} dt.
///
/// Uses x^a/a * 2F1(a, 1-b; a+1; x) when x <= a/(a+b) and the complement
/// B(a,b) - B_{1-x}(b,a) otherwise, so the series argument stays away from 1.
double incomplete_beta(double x, double a, double b,
                       const SeriesPolicy& policy = {});

/// Volume of the unit n-sphere, 2 pi^{(n+1)/2} / Gamma((n+1)/2), n >= 1.
double sphere_volume(int n);

/// Volume of a geodesic ball of radius a in S^n, 0 < a <= pi.
double ball_volume(SphereDim dim, double a, const SeriesPolicy& policy = {});

/// S_n(s) = sum_k (n)_k / ((n/2+1)_k (k+1)) s^{k+1} on [0, 1).
///
/// Arguments above 1/2 go through the reflection
/// S_n(1-u) = S_n(u) + (n/2) B(n/2,n/2) P_n(u), so only geometric series with
/// ratio <= 1/2 are ever summed.
double series_S(SphereDim dim, double s, const SeriesPolicy& policy = {},
                std::int64_t* terms = nullptr);

/// The defining series of S_n summed as is, for any s in [0, 1). Needs on the
/// order of 1/(1-s) terms; used by the verification checks as a route that
/// does not rely on the reflection identity.
double series_S_direct(SphereDim dim, double s, const SeriesPolicy& policy = {},
                       std::int64_t* terms = nullptr);

/// S_n(1 - sigma) for 0 < sigma <= 1, without forming 1 - sigma.
double series_S_complement(SphereDim dim, double sigma,
                           const SeriesPolicy& policy = {},
                           std::int64_t* terms = nullptr);

/// P_n(sigma) = int_sigma^{1/2} (u(1-u))^{-n/2} du for 0 < sigma <= 1/2.
double reflection_integral(SphereDim dim, double sigma,
                           const SeriesPolicy& policy = {},
                           std::int64_t* terms = nullptr);

/// 2F1(1, n; n/2+1; x) for x in [0, 1). Sums the series up to 1/2 and uses
/// (n/2) B_x(n/2,n/2) / (x(1-x))^{n/2} beyond.
double green_hypergeometric(SphereDim dim, double x,
                            const SeriesPolicy& policy = {});

/// 2F1(1, n; n/2+1; 1 - sigma) for 0 < sigma <= 1, without forming 1 - sigma.
double green_hypergeometric_complement(SphereDim dim, double sigma,
                                       const SeriesPolicy& policy = {});

}  // namespace spherepot
