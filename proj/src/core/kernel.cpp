// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0

#include "kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace spherepot {

namespace {

constexpr double kPi = std::numbers::pi;

double checked_chordal(double t, const char* what) {
  if (!(t > 0.0)) {
    throw DomainError(std::string(what) + ": kernel is singular at chordal distance 0");
  }
  if (t > 2.0) {
    if (t > 2.0 + 1e-12) {
      throw DomainError(std::string(what) + ": chordal distance exceeds 2");
    }
    t = 2.0;
  }
  return t;
}

}  // namespace

void BallSpec::validate(SphereDim dim) const {
  if (center.size() != static_cast<std::size_t>(dim.ambient())) {
    throw DomainError("BallSpec: center has wrong dimension");
  }
  double norm2 = 0.0;
  for (double c : center) norm2 += c * c;
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12) {
    throw DomainError("BallSpec: center is not a unit vector");
  }
  if (!(radius > 0.0 && radius < kPi)) {
    throw DomainError("BallSpec: radius must lie in (0, pi)");
  }
}

double chordal_distance(std::span<const double> p, std::span<const double> q) {
  double d2 = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double d = p[k] - q[k];
    d2 += d * d;
  }
  return std::sqrt(d2);
}

double geodesic_distance(std::span<const double> p, std::span<const double> q) {
  double minus = 0.0;
  double plus = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    minus += (p[k] - q[k]) * (p[k] - q[k]);
    plus += (p[k] + q[k]) * (p[k] + q[k]);
  }
  return 2.0 * std::atan2(std::sqrt(minus), std::sqrt(plus));
}

GreenKernel::GreenKernel(SphereDim dim, SeriesPolicy policy)
    : dim_(dim), policy_(policy) {
  policy_.validate();
  const int n = dim.n();
  volume_ = sphere_volume(n);
  scale_ = 2.0 / (n * volume_);
  offset_ = harmonic_number(n - 1) / ((n - 1) * volume_);
  beta_mm_ = beta_fn(dim.half(), dim.half());
  mean_sum_ = n * harmonic_number(n - 1) / (2.0 * (n - 1));
}

KernelEval GreenKernel::eval(double t) const {
  t = checked_chordal(t, "green_sn");
  const double sigma = 0.25 * t * t;
  KernelEval out;
  double s_value;
  if (sigma >= 0.5) {
    out.route = KernelRoute::series;
    s_value = series_S(dim_, 1.0 - sigma, policy_, &out.terms_used);
  } else {
    out.route = KernelRoute::reflected_series;
    s_value = series_S(dim_, sigma, policy_, &out.terms_used) +
              dim_.half() * beta_mm_ *
                  reflection_integral(dim_, sigma, policy_, &out.terms_used);
  }
  out.value = scale_ * s_value - offset_;
  return out;
}

double GreenKernel::radial_factor(double t) const {
  t = checked_chordal(t, "green_sn derivative");
  const double sigma = 0.25 * t * t;
  return -green_hypergeometric_complement(dim_, sigma, policy_) / (dim_.n() * volume_);
}

KernelSlope GreenKernel::eval_with_slope(double t) const {
  t = checked_chordal(t, "green_sn");
  const double sigma = 0.25 * t * t;
  KernelSlope out;
  if (sigma >= 0.5) {
    // S_n(x) and S_n'(x) = 2F1(1, n; n/2+1; x) share their Pochhammer ratios.
    const double x = 1.0 - sigma;
    const double n = dim_.n();
    const double m1 = dim_.half() + 1.0;
    double ratio = 1.0;
    double power = 1.0;
    double value = 0.0;
    double derivative = 0.0;
    int small_run = 0;
    std::int64_t k = 0;
    for (; k < policy_.max_terms && small_run < 3; ++k) {
      const double kd = static_cast<double>(k);
      if (k > 0) {
        ratio *= (n + kd - 1.0) / (m1 + kd - 1.0);
        power *= x;
      }
      const double d_term = ratio * power;
      const double v_term = d_term * x / (kd + 1.0);
      value += v_term;
      derivative += d_term;
      const bool small =
          v_term <= policy_.rel_tol * value + policy_.abs_tol &&
          d_term <= policy_.rel_tol * derivative + policy_.abs_tol;
      small_run = small ? small_run + 1 : 0;
    }
    if (small_run < 3) {
      throw TruncationError("green_sn: no convergence within " +
                                std::to_string(policy_.max_terms) + " terms",
                            policy_.max_terms);
    }
    out.route = KernelRoute::series;
    out.value = scale_ * value - offset_;
    out.radial_factor = -derivative / (dim_.n() * volume_);
    return out;
  }
  const KernelEval e = eval(t);
  out.route = e.route;
  out.value = e.value;
  out.radial_factor = radial_factor(t);
  return out;
}

BallMeanConstants GreenKernel::ball_constants(double a) const {
  if (!(a > 0.0 && a < kPi)) throw DomainError("ball radius must lie in (0, pi)");
  BallMeanConstants c;
  c.radius = a;
  c.k_radius = kconst(a);
  c.k_complement = kconst(kPi - a);
  const double sh = std::sin(0.5 * a);
  const double ch = std::cos(0.5 * a);
  c.volume_ratio = incomplete_beta_mm(ch * ch) / incomplete_beta_mm(sh * sh);
  return c;
}

double GreenKernel::ball_mean(std::span<const double> p, std::span<const double> center,
                              const BallMeanConstants& c) const {
  if (geodesic_distance(p, center) > c.radius) {
    return eval(chordal_distance(p, center)).value + c.k_radius;
  }
  double to_antipode2 = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    to_antipode2 += (p[k] + center[k]) * (p[k] + center[k]);
  }
  return -c.volume_ratio * (eval(std::sqrt(to_antipode2)).value + c.k_complement);
}

double GreenKernel::incomplete_beta_mm(double x) const {
  const double m = dim_.half();
  if (x <= 0.5) return incomplete_beta(x, m, m, policy_);
  return beta_mm_ - incomplete_beta(1.0 - x, m, m, policy_);
}

double GreenKernel::upper_beta_sum(double s) const {
  const double n = dim_.n();
  const double m = dim_.half();
  double c = 1.0;
  return sum_series(policy_, "kconst", [&](std::int64_t k) {
    const double kd = static_cast<double>(k);
    if (k > 0) c *= (n + kd - 1.0) * kd / ((m + kd) * (kd + 1.0));
    return c * incomplete_beta(s, m + kd + 1.0, m, policy_);
  });
}

double GreenKernel::kconst(double a) const {
  if (a == 0.0) return 0.0;
  if (!(a > 0.0 && a <= kPi)) throw DomainError("kconst: radius must lie in [0, pi]");
  const double m = dim_.half();
  const double sh = std::sin(0.5 * a);
  const double ch = std::cos(0.5 * a);
  const double s = sh * sh;
  const double sigma = ch * ch;
  if (s <= 0.5) {
    return scale_ * upper_beta_sum(s) / incomplete_beta(s, m, m, policy_);
  }
  // Complement form: the direct sum has an algebraic tail once s > 1/2.
  double total = beta_mm_ * mean_sum_;
  double b_sigma = 0.0;
  if (sigma > 1e-30) {
    b_sigma = incomplete_beta(sigma, m, m, policy_);
    total -= upper_beta_sum(sigma) +
             m * beta_mm_ * b_sigma * reflection_integral(dim_, sigma, policy_) +
             beta_mm_ * series_S(dim_, sigma, policy_);
  }
  return scale_ * total / (beta_mm_ - b_sigma);
}

double GreenKernel::ball_mean(std::span<const double> p, const BallSpec& ball) const {
  ball.validate(dim_);
  return ball_mean(p, ball.center, ball_constants(ball.radius));
}

double green_s2(double t) {
  t = checked_chordal(t, "green_s2");
  return (-std::log(t) + std::numbers::ln2 - 0.5) / (2.0 * kPi);
}

KernelEval green_sn(SphereDim dim, double t, const SeriesPolicy& policy) {
  return GreenKernel(dim, policy).eval(t);
}

double kconst(SphereDim dim, double a, const SeriesPolicy& policy) {
  return GreenKernel(dim, policy).kconst(a);
}

double kconst_s2_closed_form(double a) {
  if (!(a > 0.0 && a < kPi)) throw DomainError("kconst_s2_closed_form: a must lie in (0, pi)");
  const double t = std::tan(0.5 * a);
  return (0.5 + std::log(std::cos(0.5 * a)) / (t * t)) / (2.0 * kPi);
}

double ball_mean_green(SphereDim dim, std::span<const double> p, const BallSpec& ball,
                       const SeriesPolicy& policy) {
  return GreenKernel(dim, policy).ball_mean(p, ball);
}

double ball_mean_log_s2(std::span<const double> p, const BallSpec& ball) {
  ball.validate(SphereDim(2));
  const double a = ball.radius;
  const double t = 1.0 / std::tan(0.5 * a);
  const double cot2 = t * t;
  const double dist = chordal_distance(p, ball.center);
  if (geodesic_distance(p, ball.center) > a) {
    return std::log(dist) - 0.5 - cot2 * std::log(std::cos(0.5 * a));
  }
  return std::numbers::ln2 - 0.5 - 0.5 * cot2 * std::log1p(-0.25 * dist * dist) +
         std::log(std::sin(0.5 * a));
}

double green_quadrature(SphereDim dim, double r) {
  if (!(r > 0.0 && r <= kPi)) throw DomainError("green_quadrature: r must lie in (0, pi]");
  using boost::math::quadrature::gauss;
  using boost::math::quadrature::gauss_kronrod;
  const int power = dim.n() - 1;
  const double volume = sphere_volume(dim.n());

  auto sin_pow = [power](double u) { return std::pow(std::sin(u), power); };
  // int_s^pi sin^{n-1} and int_0^s sin^{n-1}; the integrand is entire, so a
  // fixed 30-point rule is exact to rounding on intervals up to length pi.
  auto tail = [&](double s) { return gauss<double, 30>::integrate(sin_pow, s, kPi); };
  auto head = [&](double s) { return gauss<double, 30>::integrate(sin_pow, 0.0, s); };
  auto slope = [&](double s) { return tail(s) / (volume * sin_pow(s)); };

  auto adaptive = [](auto&& f, double lo, double hi) {
    double error = 0.0;
    double l1 = 0.0;
    const double value =
        gauss_kronrod<double, 31>::integrate(f, lo, hi, 20, 1e-13, &error, &l1);
    if (error > 1e-10 * std::max(l1, 1.0)) {
      throw QuadratureError("green_quadrature: error estimate " + std::to_string(error) +
                            " above tolerance");
    }
    return value;
  };

  // phi_0(r) = int_r^pi slope; geometric panels resolve the s^{1-n} growth.
  double phi0 = 0.0;
  double lo = r;
  while (lo < kPi) {
    const double hi = std::min(2.0 * lo, kPi);
    phi0 += adaptive(slope, lo, hi);
    lo = hi;
  }
  // Zero-mean constant: by Fubini, mean(phi_0) = V_{n-1}/V_n int_0^pi slope * head.
  const double mean = sphere_volume(dim.n() - 1) / volume *
                      adaptive([&](double s) { return slope(s) * head(s); }, 0.0, kPi);
  return phi0 - mean;
}

}  // namespace spherepot
