// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0

#include "specfun.hpp"

#include <numbers>

namespace spherepot {

namespace {

bool is_half_integer(double x) {
  const double twice = 2.0 * x;
  return twice == std::floor(twice);
}

}  // namespace

void SeriesPolicy::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("SeriesPolicy: rel_tol must be > 0");
  if (!(abs_tol >= 0.0)) throw DomainError("SeriesPolicy: abs_tol must be >= 0");
  if (max_terms < 1) throw DomainError("SeriesPolicy: max_terms must be >= 1");
}

SphereDim::SphereDim(int n) : n_(n) {
  if (n < 2) throw DomainError("sphere dimension must be >= 2, got " + std::to_string(n));
}

SphereDim SphereDim::at_least_three(int n, const char* what) {
  if (n < 3) {
    throw DomainError(std::string(what) + " requires n >= 3, got " + std::to_string(n));
  }
  return SphereDim(n);
}

double pochhammer(double x, std::int64_t k) {
  double p = 1.0;
  for (std::int64_t j = 0; j < k; ++j) p *= x + static_cast<double>(j);
  return p;
}

double gamma_fn(double x) {
  if (!(x > 0.0)) throw DomainError("gamma: argument must be > 0");
  if (is_half_integer(x) && x <= 170.0) {
    double g;
    double start;
    if (x == std::floor(x)) {
      g = 1.0;
      start = 1.0;
    } else {
      g = std::sqrt(std::numbers::pi);
      start = 0.5;
    }
    for (double y = start; y < x; y += 1.0) g *= y;
    return g;
  }
  return std::tgamma(x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be > 0");
  if (is_half_integer(x) && x <= 170.0) return std::log(gamma_fn(x));
  return std::lgamma(x);
}

double beta_fn(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("beta: arguments must be > 0");
  if (is_half_integer(a) && is_half_integer(b) && a + b <= 170.0) {
    return gamma_fn(a) * gamma_fn(b) / gamma_fn(a + b);
  }
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

double harmonic_number(int n) {
  double h = 0.0;
  for (int j = n; j >= 1; --j) h += 1.0 / j;
  return h;
}

double hyp2f1_series(double a, double b, double c, double z, const SeriesPolicy& policy) {
  if (c <= 0.0 && c == std::floor(c)) {
    throw DomainError("hyp2f1: c must not be a nonpositive integer");
  }
  if (!(std::abs(z) < 1.0)) throw DomainError("hyp2f1: series requires |z| < 1");
  double term = 1.0;
  return sum_series(policy, "hyp2f1", [&](std::int64_t k) {
    if (k == 0) return term;
    const double j = static_cast<double>(k - 1);
    term *= (a + j) * (b + j) / ((c + j) * (j + 1.0)) * z;
    return term;
  });
}

double incomplete_beta(double x, double a, double b, const SeriesPolicy& policy) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("incomplete_beta: a, b must be > 0");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("incomplete_beta: x must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return beta_fn(a, b);
  if (x <= a / (a + b)) {
    // Terms shrink like x^k, so the neglected tail is about x / (1 - x) times the last one.
    SeriesPolicy tight = policy;
    tight.rel_tol *= 1.0 - x;
    return std::pow(x, a) / a * hyp2f1_series(a, 1.0 - b, a + 1.0, x, tight);
  }
  return beta_fn(a, b) - incomplete_beta(1.0 - x, b, a, policy);
}

double sphere_volume(int n) {
  if (n < 1) throw DomainError("sphere_volume: n must be >= 1");
  const double h = 0.5 * (n + 1);
  return 2.0 * std::pow(std::numbers::pi, h) / gamma_fn(h);
}

double ball_volume(SphereDim dim, double a, const SeriesPolicy& policy) {
  if (!(a > 0.0 && a <= std::numbers::pi)) {
    throw DomainError("ball_volume: radius must lie in (0, pi]");
  }
  const double m = dim.half();
  const double s = std::sin(0.5 * a);
  const double c = std::cos(0.5 * a);
  const double sin2 = s * s;
  const double cos2 = c * c;
  // The incomplete beta with equal parameters is symmetric about 1/2.
  const double b = sin2 <= 0.5 ? incomplete_beta(sin2, m, m, policy)
                               : beta_fn(m, m) - incomplete_beta(cos2, m, m, policy);
  return std::ldexp(sphere_volume(dim.n() - 1) * b, dim.n() - 1);
}

double series_S_direct(SphereDim dim, double s, const SeriesPolicy& policy,
                       std::int64_t* terms) {
  if (!(s >= 0.0 && s < 1.0)) throw DomainError("series_S_direct: s must lie in [0, 1)");
  const double n = dim.n();
  const double m1 = dim.half() + 1.0;
  double term = s;
  return sum_series(policy, "series_S", [&](std::int64_t k) {
    if (k == 0) return term;
    const double j = static_cast<double>(k - 1);
    term *= (n + j) * (j + 1.0) / ((m1 + j) * (j + 2.0)) * s;
    return term;
  }, terms);
}

double reflection_integral(SphereDim dim, double sigma, const SeriesPolicy& policy,
                           std::int64_t* terms) {
  if (!(sigma > 0.0 && sigma <= 0.5)) {
    throw DomainError("reflection_integral: sigma must lie in (0, 1/2]");
  }
  // (1-u)^{-m} = sum_j (m)_j/j! u^j, integrated term by term over [sigma, 1/2].
  const double m = dim.half();
  const double log_half = -std::numbers::ln2;
  const double log_sigma = std::log(sigma);
  double coeff = 1.0;
  return sum_series(policy, "reflection_integral", [&](std::int64_t j) {
    if (j > 0) coeff *= (m + static_cast<double>(j - 1)) / static_cast<double>(j);
    const double e = static_cast<double>(j) - m + 1.0;
    if (e == 0.0) return coeff * (log_half - log_sigma);
    return coeff * (std::exp(e * log_half) - std::exp(e * log_sigma)) / e;
  }, terms);
}

double series_S_complement(SphereDim dim, double sigma, const SeriesPolicy& policy,
                           std::int64_t* terms) {
  if (!(sigma > 0.0 && sigma <= 1.0)) {
    throw DomainError("series_S_complement: sigma must lie in (0, 1]");
  }
  if (sigma >= 0.5) return series_S_direct(dim, 1.0 - sigma, policy, terms);
  const double m = dim.half();
  return series_S_direct(dim, sigma, policy, terms) +
         m * beta_fn(m, m) * reflection_integral(dim, sigma, policy, terms);
}

double series_S(SphereDim dim, double s, const SeriesPolicy& policy, std::int64_t* terms) {
  if (!(s >= 0.0 && s < 1.0)) throw DomainError("series_S: s must lie in [0, 1)");
  if (s <= 0.5) return series_S_direct(dim, s, policy, terms);
  return series_S_complement(dim, 1.0 - s, policy, terms);
}

double green_hypergeometric(SphereDim dim, double x, const SeriesPolicy& policy) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("green_hypergeometric: x must lie in [0, 1)");
  }
  const double m = dim.half();
  if (x <= 0.5) return hyp2f1_series(1.0, dim.n(), m + 1.0, x, policy);
  return green_hypergeometric_complement(dim, 1.0 - x, policy);
}

double green_hypergeometric_complement(SphereDim dim, double sigma,
                                       const SeriesPolicy& policy) {
  if (!(sigma > 0.0 && sigma <= 1.0)) {
    throw DomainError("green_hypergeometric_complement: sigma must lie in (0, 1]");
  }
  const double m = dim.half();
  if (sigma >= 0.5) return hyp2f1_series(1.0, dim.n(), m + 1.0, 1.0 - sigma, policy);
  const double bx = beta_fn(m, m) - incomplete_beta(sigma, m, m, policy);
  return m * bx / std::pow((1.0 - sigma) * sigma, m);
}

}  // namespace spherepot
