// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "bounds.hpp"
#include "minimize.hpp"
#include "parallel.hpp"

namespace spherepot {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::int64_t kBlock = 1 << 15;

CheckResult make_check(std::string name, double violation, double tolerance,
                       std::int64_t samples, std::uint64_t seed, std::string detail = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.max_violation = violation;
  r.tolerance = tolerance;
  r.passed = violation <= tolerance;
  r.samples = samples;
  r.seed = seed;
  r.detail = std::move(detail);
  return r;
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

// Welford accumulators for K quantities sampled jointly.
template <std::size_t K>
struct Moments {
  std::int64_t count = 0;
  std::array<double, K> mean{};
  std::array<double, K> m2{};

  void add(const std::array<double, K>& x) {
    ++count;
    for (std::size_t k = 0; k < K; ++k) {
      const double d = x[k] - mean[k];
      mean[k] += d / static_cast<double>(count);
      m2[k] += d * (x[k] - mean[k]);
    }
  }

  void merge(const Moments& o) {
    if (o.count == 0) return;
    const double n1 = static_cast<double>(count);
    const double n2 = static_cast<double>(o.count);
    const double total = n1 + n2;
    for (std::size_t k = 0; k < K; ++k) {
      const double d = o.mean[k] - mean[k];
      mean[k] += d * n2 / total;
      m2[k] += o.m2[k] + d * d * n1 * n2 / total;
    }
    count += o.count;
  }

  McEstimate estimate(std::size_t k) const {
    McEstimate e;
    e.samples = count;
    e.mean = mean[k];
    e.std_error = count > 1 ? std::sqrt(m2[k] / static_cast<double>(count - 1) /
                                        static_cast<double>(count))
                            : 0.0;
    return e;
  }
};

// Draws `samples` points with draw(rng, point) and accumulates f(point).
template <std::size_t K, class Draw, class F>
Moments<K> run_blocks(std::size_t ambient, std::int64_t samples, std::uint64_t seed,
                      const Draw& draw, const F& f) {
  if (samples < 1000) throw DomainError("Monte Carlo needs at least 1000 samples");
  const std::size_t blocks = static_cast<std::size_t>((samples + kBlock - 1) / kBlock);
  std::vector<Moments<K>> partial(blocks);
  parallel_for(blocks, [&](std::size_t b) {
    std::mt19937_64 rng(mix_seed(seed, b));
    std::vector<double> point(ambient);
    const std::int64_t begin = static_cast<std::int64_t>(b) * kBlock;
    const std::int64_t end = std::min(samples, begin + kBlock);
    for (std::int64_t s = begin; s < end; ++s) {
      draw(rng, std::span<double>(point));
      partial[b].add(f(std::span<const double>(point)));
    }
  });
  Moments<K> total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

double z_score(const McEstimate& e, double exact) {
  const double diff = std::abs(e.mean - exact);
  if (e.std_error > 0.0) return diff / e.std_error;
  return diff == 0.0 ? 0.0 : kInf;
}

// Signed shortfall of `value` below `floor` in standard errors (0 if above).
double shortfall(double value, double floor, double se) {
  if (value >= floor) return 0.0;
  return se > 0.0 ? (floor - value) / se : kInf;
}

std::vector<double> unit_vector(std::size_t ambient, std::size_t axis) {
  std::vector<double> v(ambient, 0.0);
  v[axis] = 1.0;
  return v;
}

// A generic unit center and a point at geodesic distance d from it.
std::pair<std::vector<double>, std::vector<double>> center_and_point(SphereDim dim, double d) {
  const std::size_t ambient = static_cast<std::size_t>(dim.ambient());
  std::vector<double> c(ambient);
  double norm2 = 0.0;
  for (std::size_t k = 0; k < ambient; ++k) {
    c[k] = 1.0 + 0.5 * static_cast<double>(k);
    norm2 += c[k] * c[k];
  }
  for (double& x : c) x /= std::sqrt(norm2);
  std::vector<double> u = unit_vector(ambient, 0);
  const double dot = c[0];
  norm2 = 0.0;
  for (std::size_t k = 0; k < ambient; ++k) {
    u[k] -= dot * c[k];
    norm2 += u[k] * u[k];
  }
  for (double& x : u) x /= std::sqrt(norm2);
  std::vector<double> p(ambient);
  for (std::size_t k = 0; k < ambient; ++k) p[k] = std::cos(d) * c[k] + std::sin(d) * u[k];
  return {c, p};
}

double incomplete_beta_half(SphereDim dim, double x, double beta_mm) {
  const double m = dim.half();
  return x <= 0.5 ? incomplete_beta(x, m, m) : beta_mm - incomplete_beta(1.0 - x, m, m);
}

// Samples every ball B(p_i, a) and returns, per ball i, the joint moments of
// sum_j M(x, B_j) and sum_{j != i} M(x, B_j), where M is the exact mean of the
// pair kernel over a ball (Green function for n >= 3, -ln|.| on S^2).
struct AlphaDelta {
  McEstimate alpha;
  McEstimate delta;
  double delta_floor = 0.0;
};

AlphaDelta alpha_delta(const PointConfig& config, double a, std::int64_t samples,
                       std::uint64_t seed, const SeriesPolicy& policy) {
  const SphereDim dim = config.dim();
  const std::size_t n_points = config.size();
  const double N = static_cast<double>(n_points);
  const bool is_s2 = dim.n() == 2;
  const GreenKernel kernel(dim, policy);
  BallMeanConstants constants;
  if (!is_s2) constants = kernel.ball_constants(a);

  auto ball_mean = [&](std::span<const double> x, std::size_t j) {
    if (is_s2) {
      return -ball_mean_log_s2(x, BallSpec{{config.point(j).begin(), config.point(j).end()}, a});
    }
    return kernel.ball_mean(x, config.point(j), constants);
  };

  const std::int64_t per_ball = std::max<std::int64_t>(1000, samples / static_cast<std::int64_t>(n_points));
  double alpha_mean = 0.0;
  double alpha_var = 0.0;
  double hat_offdiag = 0.0;
  double delta_var = 0.0;
  for (std::size_t i = 0; i < n_points; ++i) {
    const BallSampler sampler(dim, config.point(i), a);
    const auto moments = run_blocks<2>(
        static_cast<std::size_t>(dim.ambient()), per_ball, mix_seed(seed, i),
        [&](std::mt19937_64& rng, std::span<double> out) { sampler(rng, out); },
        [&](std::span<const double> x) {
          double all = 0.0;
          double self = 0.0;
          for (std::size_t j = 0; j < n_points; ++j) {
            const double v = ball_mean(x, j);
            all += v;
            if (j == i) self = v;
          }
          return std::array<double, 2>{all, all - self};
        });
    const McEstimate all = moments.estimate(0);
    const McEstimate off = moments.estimate(1);
    alpha_mean += all.mean;
    alpha_var += all.std_error * all.std_error;
    hat_offdiag += off.mean;
    delta_var += off.std_error * off.std_error;
  }

  double direct = 0.0;
  for (std::size_t i = 0; i < n_points; ++i) {
    for (std::size_t j = 0; j < n_points; ++j) {
      if (i == j) continue;
      const double t = chordal_distance(config.point(i), config.point(j));
      direct += is_s2 ? -std::log(t) : kernel(t);
    }
  }

  AlphaDelta out;
  const std::int64_t total = per_ball * static_cast<std::int64_t>(n_points);
  out.alpha = {alpha_mean - (is_s2 ? kappa() * N * N : 0.0), std::sqrt(alpha_var), total};
  out.delta = {direct - hat_offdiag, std::sqrt(delta_var), total};
  if (is_s2) {
    const double cot = 1.0 / std::tan(0.5 * a);
    out.delta_floor = N * (N - 1.0) * (-1.0 - 2.0 * cot * cot * std::log(std::cos(0.5 * a)));
  } else {
    out.delta_floor = -2.0 * N * (N - 1.0) * constants.k_radius;
  }
  return out;
}

CheckResult alpha_result(const std::string& tag, const AlphaDelta& ad, std::uint64_t seed) {
  return make_check("alpha_positivity_" + tag, shortfall(ad.alpha.mean, 0.0, ad.alpha.std_error),
                    3.0, ad.alpha.samples, seed,
                    fmt("alpha=%.6g se=%.3g", ad.alpha.mean, ad.alpha.std_error));
}

CheckResult delta_result(const std::string& tag, const AlphaDelta& ad, std::uint64_t seed) {
  return make_check("delta_bound_" + tag,
                    shortfall(ad.delta.mean, ad.delta_floor, ad.delta.std_error), 3.0,
                    ad.delta.samples, seed,
                    fmt("delta=%.6g floor=%.6g se=%.3g", ad.delta.mean, ad.delta_floor,
                        ad.delta.std_error));
}

std::string dim_tag(SphereDim dim) { return "n" + std::to_string(dim.n()); }

}  // namespace

BallSampler::BallSampler(SphereDim dim, std::span<const double> center, double radius)
    : dim_(dim), center_(center.begin(), center.end()), radius_(radius) {
  BallSpec{center_, radius}.validate(dim);
  mass_ = radial_mass(radius);
  constexpr std::size_t kKnots = 1025;
  knots_.assign(kKnots, 0.0);
  knots_.back() = radius;
  for (std::size_t i = 1; i + 1 < kKnots; ++i) {
    const double target = mass_ * static_cast<double>(i) / (kKnots - 1);
    double lo = knots_[i - 1];
    double hi = radius;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (radial_mass(mid) < target ? lo : hi) = mid;
    }
    knots_[i] = 0.5 * (lo + hi);
  }
}

double BallSampler::radial_mass(double r) const {
  const int k = dim_.n() - 1;
  if (r >= 0.5) {
    // J_j = -sin^{j-1} r cos r / j + (j-1)/j J_{j-2}
    const double s = std::sin(r);
    const double c = std::cos(r);
    double j_prev = k % 2 == 0 ? r : 1.0 - c;
    double s_pow = k % 2 == 0 ? s : s * s;
    for (int j = k % 2 == 0 ? 2 : 3; j <= k; j += 2) {
      j_prev = -s_pow * c / j + (j - 1.0) / j * j_prev;
      s_pow *= s * s;
    }
    return j_prev;
  }
  return boost::math::quadrature::gauss<double, 20>::integrate(
      [k](double t) {
        const double s = std::sin(t);
        double p = s;
        for (int j = 1; j < k; ++j) p *= s;
        return p;
      },
      0.0, r);
}

double BallSampler::radius_quantile(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError("radius_quantile: u must lie in [0, 1]");
  if (dim_.n() == 2) {
    const double sh = std::sin(0.5 * radius_);
    return 2.0 * std::asin(std::sqrt(u) * sh);
  }
  const double target = u * mass_;
  const double scaled = u * static_cast<double>(knots_.size() - 1);
  const std::size_t i = std::min(static_cast<std::size_t>(scaled), knots_.size() - 2);
  double lo = knots_[i];
  double hi = knots_[i + 1];
  const double frac = scaled - static_cast<double>(i);
  // Near the center the CDF grows like r^n.
  double r = i == 0 ? hi * std::pow(frac, 1.0 / dim_.n()) : lo + frac * (hi - lo);
  const int k = dim_.n() - 1;
  for (int it = 0; it < 60; ++it) {
    const double f = radial_mass(r) - target;
    (f < 0.0 ? lo : hi) = r;
    const double slope = std::pow(std::sin(r), k);
    double next = slope > 0.0 ? r - f / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const bool done = std::abs(next - r) <= 4e-16 * r;
    r = next;
    if (done || hi - lo <= 4e-16 * hi) break;
  }
  return r;
}

void BallSampler::operator()(std::mt19937_64& rng, std::span<double> out) const {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double r = radius_quantile(uniform(rng));

  std::normal_distribution<double> gauss;
  const std::size_t d = center_.size();
  double norm2 = 0.0;
  while (norm2 < 1e-20) {
    double dot = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      out[k] = gauss(rng);
      dot += out[k] * center_[k];
    }
    norm2 = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      out[k] -= dot * center_[k];
      norm2 += out[k] * out[k];
    }
  }
  const double inv = 1.0 / std::sqrt(norm2);
  const double c = std::cos(r);
  const double s = std::sin(r) * inv;
  for (std::size_t k = 0; k < d; ++k) out[k] = c * center_[k] + s * out[k];
}

void sample_sphere(SphereDim dim, std::mt19937_64& rng, std::span<double> out) {
  std::normal_distribution<double> gauss;
  double norm2 = 0.0;
  while (norm2 < 1e-20) {
    norm2 = 0.0;
    for (int k = 0; k < dim.ambient(); ++k) {
      out[k] = gauss(rng);
      norm2 += out[k] * out[k];
    }
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (int k = 0; k < dim.ambient(); ++k) out[k] *= inv;
}

McEstimate mc_sphere_mean(SphereDim dim, const std::function<double(std::span<const double>)>& f,
                          std::int64_t samples, std::uint64_t seed) {
  return run_blocks<1>(
             static_cast<std::size_t>(dim.ambient()), samples, seed,
             [&](std::mt19937_64& rng, std::span<double> out) { sample_sphere(dim, rng, out); },
             [&](std::span<const double> q) { return std::array<double, 1>{f(q)}; })
      .estimate(0);
}

McEstimate mc_ball_mean_of(SphereDim dim, const BallSpec& ball,
                           const std::function<double(std::span<const double>)>& f,
                           std::int64_t samples, std::uint64_t seed) {
  const BallSampler sampler(dim, ball.center, ball.radius);
  return run_blocks<1>(
             static_cast<std::size_t>(dim.ambient()), samples, seed,
             [&](std::mt19937_64& rng, std::span<double> out) { sampler(rng, out); },
             [&](std::span<const double> q) { return std::array<double, 1>{f(q)}; })
      .estimate(0);
}

McEstimate mc_ball_mean(SphereDim dim, const BallSpec& ball, std::span<const double> p,
                        EnergyKind kind, std::int64_t samples, std::uint64_t seed,
                        const SeriesPolicy& policy) {
  if (kind == EnergyKind::log) {
    return mc_ball_mean_of(
        dim, ball, [&](std::span<const double> q) { return std::log(chordal_distance(p, q)); },
        samples, seed);
  }
  const GreenKernel kernel(dim, policy);
  return mc_ball_mean_of(
      dim, ball, [&](std::span<const double> q) { return kernel(chordal_distance(p, q)); },
      samples, seed);
}

std::vector<CheckResult> check_F_s2(int grid_t, int grid_alpha) {
  if (grid_t < 100 || grid_alpha < 100) throw DomainError("F_s2 grids need >= 100 points");
  auto F = [](double t, double alpha) {
    const double sh = std::sin(0.5 * alpha);
    const double ch = std::cos(0.5 * alpha);
    const double cot2 = (ch / sh) * (ch / sh);
    const double log_cos = 0.5 * std::log1p(-sh * sh);
    return std::numbers::ln2 + std::log(sh) +
           0.5 * cot2 * (2.0 * log_cos - std::log1p(-0.25 * t * t)) - std::log(t);
  };
  const double ht = 2.0 / (grid_t + 1);
  const double ha = kPi / (grid_alpha + 1);

  double min_f = kInf;
  for (int j = 1; j <= grid_alpha; ++j) {
    for (int i = 1; i <= grid_t; ++i) min_f = std::min(min_f, F(i * ht, j * ha));
  }
  double diag = 0.0;
  for (int j = 1; j <= grid_alpha; ++j) {
    const double alpha = j * ha;
    diag = std::max(diag, std::abs(F(2.0 * std::sin(0.5 * alpha), alpha)));
  }
  // t-scan at alpha = pi/2: strictly decreasing then strictly increasing.
  int argmin = 1;
  std::vector<double> scan(static_cast<std::size_t>(grid_t) + 1);
  for (int i = 1; i <= grid_t; ++i) {
    scan[i] = F(i * ht, 0.5 * kPi);
    if (scan[i] < scan[argmin]) argmin = i;
  }
  bool unimodal = true;
  for (int i = 2; i <= grid_t; ++i) {
    if (i <= argmin && !(scan[i] < scan[i - 1])) unimodal = false;
    if (i > argmin && !(scan[i] > scan[i - 1])) unimodal = false;
  }
  const double cells = std::abs(argmin * ht - std::sqrt(2.0)) / ht;

  const std::int64_t size = static_cast<std::int64_t>(grid_t) * grid_alpha;
  return {
      make_check("F_s2_grid", std::max(0.0, -min_f), 1e-12, size, 0, fmt("min=%.3g", min_f)),
      make_check("F_s2_diagonal", diag, 1e-10, grid_alpha, 0),
      make_check("F_s2_argmin", unimodal ? cells : kInf, 1.0, grid_t, 0,
                 fmt("argmin t=%.6f", argmin * ht)),
  };
}

namespace {

// F(s, alpha) for alpha <= 1/2 from its pieces: S at s and 1 - s, the scaled
// incomplete beta B_alpha and the reflection integral P(alpha).
double combine_F(double m, double B, double B_alpha, double P_alpha, double S_s,
                 double S_one_minus_s, double S_alpha) {
  return B_alpha * S_one_minus_s + (B - B_alpha) * S_s - m * B * B_alpha * P_alpha - B * S_alpha;
}

}  // namespace

double F_sn(SphereDim dim, double s, double alpha, const SeriesPolicy& policy) {
  dim = SphereDim::at_least_three(dim.n(), "F_sn");
  if (!(s > 0.0 && s < 1.0) || !(alpha > 0.0 && alpha < 1.0))
    throw DomainError("F_sn needs s and alpha in (0, 1)");
  if (alpha > 0.5) {
    s = 1.0 - s;
    alpha = 1.0 - alpha;
  }
  const double m = dim.half();
  const double B = beta_fn(m, m);
  return combine_F(m, B, incomplete_beta_half(dim, alpha, B), reflection_integral(dim, alpha, policy),
                   series_S_direct(dim, s, policy), series_S_direct(dim, 1.0 - s, policy),
                   series_S_direct(dim, alpha, policy));
}

std::vector<CheckResult> check_F_sn(SphereDim dim, int grid, const SeriesPolicy& policy) {
  dim = SphereDim::at_least_three(dim.n(), "F_sn check");
  if (grid < 100) throw DomainError("F_sn grid needs >= 100 points");
  const double m = dim.half();
  const double B = beta_fn(m, m);
  const int G = grid;
  const double h = 1.0 / (G + 1);

  // Index i in 1..G stands for x_i = i h; index G + 1 - i stands for 1 - x_i.
  std::vector<double> S(G + 1), Bx(G + 1), P(G + 1);
  for (int i = 1; i <= G; ++i) {
    const double x = i * h;
    S[i] = series_S_direct(dim, x, policy);
    Bx[i] = incomplete_beta_half(dim, x, B);
    if (x <= 0.5) P[i] = reflection_integral(dim, x, policy);
  }
  // alpha > 1/2 uses F(s, a) = F(1 - s, 1 - a).
  auto F = [&](int is, int ia) {
    if (ia * h > 0.5) {
      is = G + 1 - is;
      ia = G + 1 - ia;
    }
    return combine_F(m, B, Bx[ia], P[ia], S[is], S[G + 1 - is], S[ia]);
  };

  double min_f = kInf;
  double diag = 0.0;
  int worst_cells = 0;
  for (int is = 1; is <= G; ++is) {
    int argmin = 1;
    double best = kInf;
    for (int ia = 1; ia <= G; ++ia) {
      const double f = F(is, ia);
      min_f = std::min(min_f, f);
      if (f < best) {
        best = f;
        argmin = ia;
      }
    }
    diag = std::max(diag, std::abs(F(is, is)));
    worst_cells = std::max(worst_cells, std::abs(argmin - is));
  }

  // The same inequality in kernel form: g(t) + K(a) + ratio (g(sqrt(4-t^2)) + K(pi-a)).
  const GreenKernel kernel(dim, policy);
  const int Gk = 100;
  std::vector<double> g(Gk + 1), g_conj(Gk + 1);
  for (int i = 1; i <= Gk; ++i) {
    const double t = 2.0 * i / (Gk + 1);
    g[i] = kernel(t);
    g_conj[i] = kernel(std::sqrt(4.0 - t * t));
  }
  double worst_kernel = 0.0;
  for (int j = 1; j <= Gk; ++j) {
    const BallMeanConstants c = kernel.ball_constants(kPi * j / (Gk + 1));
    for (int i = 1; i <= Gk; ++i) {
      const double tail = c.volume_ratio * (g_conj[i] + c.k_complement);
      const double f = g[i] + c.k_radius + tail;
      worst_kernel = std::max(worst_kernel, -f / (1.0 + std::abs(tail)));
    }
  }

  const std::string tag = dim_tag(dim);
  return {
      make_check("F_sn_grid_" + tag, std::max(0.0, -min_f), 1e-8,
                 static_cast<std::int64_t>(G) * G, 0, fmt("min=%.3g", min_f)),
      make_check("F_sn_diagonal_" + tag, diag, 1e-8, G, 0),
      make_check("F_sn_argmin_" + tag, worst_cells, 1.0, static_cast<std::int64_t>(G) * G, 0),
      make_check("F_sn_kernel_form_" + tag, std::max(0.0, worst_kernel), 1e-10,
                 static_cast<std::int64_t>(Gk) * Gk, 0),
  };
}

std::vector<CheckResult> check_K_asymptotics(SphereDim dim, const SeriesPolicy& policy) {
  const GreenKernel kernel(dim, policy);
  const double V = kernel.volume();
  const int n = dim.n();
  const std::array<double, 3> grid = {0.1, 0.05, 0.01};
  const std::string tag = dim_tag(dim);

  auto converge = [&](const std::string& name, double target, auto&& ratio) {
    std::array<double, 3> err{};
    for (std::size_t k = 0; k < grid.size(); ++k) {
      err[k] = std::abs(ratio(grid[k]) / target - 1.0);
    }
    const bool decreasing = err[1] < err[0] && err[2] < err[1];
    return make_check(name, decreasing ? err[2] : std::max(err[2], 1.0), 0.01, 3, 0,
                      fmt("rel_err=%.3g,%.3g,%.3g", err[0], err[1], err[2]));
  };

  std::vector<CheckResult> out;
  out.push_back(converge("K_small_angle_" + tag, 1.0 / ((2.0 * n + 4.0) * V),
                         [&](double a) { return kernel.kconst(a) / (a * a); }));
  if (n >= 3) {
    const double k_pi = kernel.kconst(kPi);
    out.push_back(converge("K_antipodal_" + tag, 1.0 / ((2.0 * n - 4.0) * V),
                           [&](double a) { return (k_pi - kernel.kconst(kPi - a)) / (a * a); }));
  } else {
    double worst = 0.0;
    for (int j = 1; j <= 99; ++j) {
      const double a = kPi * j / 100.0;
      worst = std::max(worst, std::abs(kernel.kconst(a) - kconst_s2_closed_form(a)));
    }
    out.push_back(make_check("K_closed_form_n2", worst, 1e-12, 99, 0));
  }
  return out;
}

CheckResult check_Sn_asymptotic(SphereDim dim, const SeriesPolicy& policy) {
  dim = SphereDim::at_least_three(dim.n(), "S_n asymptotic check");
  const double m = dim.half();
  const double limit = gamma_fn(m + 1.0) * gamma_fn(m - 1.0) / gamma_fn(dim.n());
  const std::array<double, 3> grid = {1e-2, 1e-3, 1e-4};
  std::array<double, 3> err{};
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double s = grid[k];
    err[k] = std::abs(std::pow(s, m - 1.0) * series_S_complement(dim, s, policy) / limit - 1.0);
  }
  const bool decreasing = err[1] < err[0] && err[2] < err[1];
  return make_check("Sn_asymptotic_" + dim_tag(dim), decreasing ? err[1] : std::max(err[1], 1.0),
                    0.02, 3, 0, fmt("rel_err=%.3g,%.3g,%.3g", err[0], err[1], err[2]));
}

CheckResult check_Sn_growth(SphereDim dim, const SeriesPolicy& policy) {
  dim = SphereDim::at_least_three(dim.n(), "S_n growth bound");
  const double m = dim.half();
  auto ratio = [&](double s) {
    return series_S(dim, s, policy) * std::pow(1.0 - s, m - 1.0) / s;
  };
  const double limit = m * beta_fn(m, m) / (m - 1.0);
  double fitted = limit;
  for (int k = 1; k < 1000; ++k) fitted = std::max(fitted, ratio(k / 1000.0));
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) worst = std::max(worst, ratio((k + 0.5) / 1000.0));
  for (int j = 4; j <= 9; ++j) worst = std::max(worst, ratio(1.0 - std::pow(10.0, -j)));
  return make_check("Sn_growth_bound_" + dim_tag(dim), std::max(0.0, worst / fitted - 1.0), 1e-3,
                    2005, 0, fmt("fitted_C=%.12g limit=%.12g", fitted, limit));
}

CheckResult check_alpha_positivity(const PointConfig& config, double a, std::int64_t samples,
                                   std::uint64_t seed, const SeriesPolicy& policy) {
  return alpha_result(dim_tag(config.dim()), alpha_delta(config, a, samples, seed, policy),
                      seed);
}

CheckResult check_delta_bound(const PointConfig& config, double a, std::int64_t samples,
                              std::uint64_t seed, const SeriesPolicy& policy) {
  return delta_result(dim_tag(config.dim()), alpha_delta(config, a, samples, seed, policy),
                      seed);
}

std::vector<CheckResult> check_route_agreement(const SeriesPolicy& policy) {
  double worst = 0.0;
  for (int n = 2; n <= 5; ++n) {
    const GreenKernel kernel(SphereDim(n), policy);
    for (double t : {0.1, 0.5, 1.0, 1.5, 2.0}) {
      const double r = 2.0 * std::asin(0.5 * t);
      worst = std::max(worst, std::abs(kernel(t) - green_quadrature(SphereDim(n), r)));
    }
  }
  double worst_s2 = 0.0;
  const GreenKernel s2(SphereDim(2), policy);
  for (int k = 1; k <= 20; ++k) {
    const double t = 0.1 * k;
    worst_s2 = std::max(worst_s2, std::abs(s2(t) - green_s2(t)));
  }
  return {make_check("route_series_vs_quadrature", worst, 1e-8, 20, 0),
          make_check("route_series_vs_s2_closed_form", worst_s2, 1e-10, 20, 0)};
}

CheckResult check_gyk(const SeriesPolicy& policy) {
  double worst = 0.0;
  for (int n = 2; n <= 5; ++n) {
    const GreenKernel kernel(SphereDim(n), policy);
    worst = std::max(worst, std::abs(kernel(2.0) + kernel.kconst(kPi)));
  }
  return make_check("antipodal_green_equals_minus_K_pi", worst, 1e-10, 4, 0);
}

CheckResult check_zero_mean(SphereDim dim, std::int64_t samples, std::uint64_t seed,
                            const SeriesPolicy& policy) {
  const GreenKernel kernel(dim, policy);
  const std::vector<double> p = unit_vector(static_cast<std::size_t>(dim.ambient()), 0);
  const McEstimate e = mc_sphere_mean(
      dim, [&](std::span<const double> q) { return kernel(chordal_distance(p, q)); }, samples,
      mix_seed(seed, static_cast<std::uint64_t>(dim.n())));
  return make_check("zero_mean_" + dim_tag(dim), z_score(e, 0.0), 4.0, samples, seed,
                    fmt("mean=%.3g se=%.3g", e.mean, e.std_error));
}

CheckResult check_log_sphere_mean(std::int64_t samples, std::uint64_t seed) {
  const SphereDim dim(2);
  const std::vector<double> p = unit_vector(3, 2);
  const McEstimate e = mc_sphere_mean(
      dim, [&](std::span<const double> q) { return std::log(chordal_distance(p, q)); }, samples,
      mix_seed(seed, 1000));
  return make_check("log_sphere_mean_n2", z_score(e, std::numbers::ln2 - 0.5), 4.0, samples,
                    seed, fmt("mean=%.9g se=%.3g", e.mean, e.std_error));
}

CheckResult check_se_scaling(std::int64_t samples, std::uint64_t seed) {
  const SphereDim dim(2);
  const std::vector<double> p = unit_vector(3, 2);
  auto f = [&](std::span<const double> q) { return std::log(chordal_distance(p, q)); };
  const std::int64_t small = std::max<std::int64_t>(1000, samples / 4);
  const McEstimate a = mc_sphere_mean(dim, f, small, mix_seed(seed, 2000));
  const McEstimate b = mc_sphere_mean(dim, f, 4 * small, mix_seed(seed, 2001));
  const double ratio = a.std_error / b.std_error;
  return make_check("mc_se_scaling", std::abs(ratio / 2.0 - 1.0), 0.2, 5 * small, seed,
                    fmt("se_ratio=%.4f", ratio));
}

std::vector<CheckResult> check_ball_means(SphereDim dim, EnergyKind kind, bool inside,
                                          std::int64_t samples, std::uint64_t seed,
                                          const SeriesPolicy& policy) {
  if (kind == EnergyKind::log && dim.n() != 2) {
    throw DomainError("log-kernel ball means are available on S^2 only");
  }
  // (radius, distance from the center)
  const std::array<std::pair<double, double>, 5> outside_cases = {
      {{0.3, 0.6}, {0.7, 1.4}, {1.0, 2.0}, {1.5, 3.0}, {0.5, 2.5}}};
  const std::array<std::pair<double, double>, 5> inside_cases = {
      {{0.3, 0.1}, {0.7, 0.35}, {1.2, 0.0}, {2.0, 1.0}, {2.8, 2.0}}};
  const auto& cases = inside ? inside_cases : outside_cases;

  const GreenKernel kernel(dim, policy);
  double worst_eq = 0.0;
  double worst_ineq = 0.0;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto [a, d] = cases[k];
    const auto [center, p] = center_and_point(dim, d);
    const BallSpec ball{center, a};
    const McEstimate e =
        mc_ball_mean(dim, ball, p, kind, samples, mix_seed(seed, 100 + k + (inside ? 10 : 0)),
                     policy);
    double exact;
    if (kind == EnergyKind::log) {
      exact = ball_mean_log_s2(p, ball);
    } else {
      exact = kernel.ball_mean(p, ball);
    }
    worst_eq = std::max(worst_eq, z_score(e, exact));
    if (inside && d > 0.0) {
      const double t = chordal_distance(p, center);
      if (kind == EnergyKind::log) {
        const double cot = 1.0 / std::tan(0.5 * a);
        const double floor = std::log(t) - 0.5 - cot * cot * std::log(std::cos(0.5 * a));
        worst_ineq = std::max(worst_ineq, shortfall(e.mean, floor, e.std_error));
      } else {
        const double ceiling = kernel(t) + kernel.kconst(a);
        worst_ineq = std::max(worst_ineq, shortfall(-e.mean, -ceiling, e.std_error));
      }
    }
  }
  const std::string kind_name = kind == EnergyKind::log ? "log" : "green";
  const std::string base = kind_name + "_" + dim_tag(dim);
  std::vector<CheckResult> out;
  out.push_back(make_check("ball_mean_" + base + (inside ? "_inside" : "_outside"), worst_eq, 4.0,
                           5 * samples, seed));
  if (inside) {
    out.push_back(make_check("ball_mean_inequality_" + base, worst_ineq, 3.0, 4 * samples, seed));
  }
  return out;
}

std::vector<CheckResult> check_specfun_identities() {
  const std::array<double, 5> params = {0.5, 1.0, 1.5, 2.0, 3.0};
  double worst_swap = 0.0;
  double worst_sandwich = 0.0;
  double worst_ref = 0.0;
  for (double alpha : params) {
    for (double beta : params) {
      const double full = beta_fn(alpha, beta);
      for (int k = 1; k <= 99; ++k) {
        const double x = k / 100.0;
        const double bx = incomplete_beta(x, alpha, beta);
        worst_swap = std::max(worst_swap,
                              std::abs(full - bx - incomplete_beta(1.0 - x, beta, alpha)));
        const double upper = std::pow(x, alpha) / alpha;
        const double lower = std::pow(1.0 - x, beta - 1.0) * upper;
        const double lo = std::min(lower, upper);
        const double hi = std::max(lower, upper);
        worst_sandwich = std::max({worst_sandwich, (lo - bx) / bx, (bx - hi) / bx});
        worst_ref = std::max(worst_ref, std::abs(boost::math::beta(alpha, beta, x) - bx) / bx);
      }
    }
  }
  double worst_betas = 0.0;
  for (int n = 2; n <= 5; ++n) {
    const SphereDim dim(n);
    for (double r : {0.5, 1.0, 2.0, 3.0}) {
      const double q = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
          [n](double t) { return std::pow(std::sin(t), n - 1); }, 0.0, r, 15, 1e-14);
      const double sh = std::sin(0.5 * r);
      const double b = std::ldexp(incomplete_beta_half(dim, sh * sh, beta_fn(dim.half(), dim.half())),
                                  n - 1);
      worst_betas = std::max(worst_betas, std::abs(q - b));
    }
  }
  return {
      make_check("incomplete_beta_complement", worst_swap, 1e-12, 99 * 25, 0),
      make_check("incomplete_beta_sandwich", std::max(0.0, worst_sandwich), 1e-13, 99 * 25, 0),
      make_check("incomplete_beta_vs_boost", worst_ref, 1e-13, 99 * 25, 0),
      make_check("sin_power_integral_vs_beta", worst_betas, 1e-10, 16, 0),
  };
}

CheckResult check_log_inequality() {
  double worst = 0.0;
  std::int64_t count = 0;
  for (double C : {0.5, 1.0, 2.0, 5.0}) {
    for (std::int64_t n_points = static_cast<std::int64_t>(std::ceil(2.0 * C)); n_points <= 10000;
         ++n_points) {
      const double x = C / static_cast<double>(n_points);
      const double value = std::log1p(-x);
      const double upper = -x - 0.5 * x * x;
      const double lower = upper - x * x * x;
      worst = std::max({worst, lower - value, value - upper});
      ++count;
    }
  }
  return make_check("log_one_minus_x_sandwich", std::max(0.0, worst), 1e-15, count, 0);
}

CheckResult check_tightness_s2() {
  const PointConfig pair(SphereDim(2), {0.0, 0.0, 1.0, 0.0, 0.0, -1.0});
  const double bound = s2_finite_lower_bound(2, 0.5 * kPi).value;
  return make_check("s2_bound_tight_for_antipodal_pair",
                    std::abs(bound - recentered_energy_s2(pair)), 1e-12, 1, 0);
}

std::vector<std::string> verify_suite_names() {
  return {"specfun", "fs2",   "fsn",   "kabasic", "sn_asymptotic", "gyk",
          "routes",  "zero_mean", "ball_means", "alpha", "delta", "bounds"};
}

std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& options) {
  const auto names = verify_suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw DomainError("unknown verify suite '" + suite + "'");
  }
  options.policy.validate();
  if (!(options.tol_scale >= 0.0)) throw DomainError("tol_scale must be >= 0");
  const auto& pol = options.policy;
  const std::uint64_t seed = options.seed;
  const std::int64_t samples = options.samples;
  auto wants = [&](const char* name) { return suite == "all" || suite == name; };
  auto append = [](std::vector<CheckResult>& out, std::vector<CheckResult> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };

  std::vector<CheckResult> out;
  if (wants("specfun")) {
    append(out, check_specfun_identities());
    for (int n = 3; n <= 5; ++n) out.push_back(check_Sn_growth(SphereDim(n), pol));
  }
  if (wants("fs2")) append(out, check_F_s2(500, 500));
  if (wants("fsn")) {
    for (int n : {3, 4}) append(out, check_F_sn(SphereDim(n), 200, pol));
  }
  if (wants("kabasic")) {
    for (int n = 2; n <= 5; ++n) append(out, check_K_asymptotics(SphereDim(n), pol));
  }
  if (wants("sn_asymptotic")) {
    for (int n : {3, 4}) out.push_back(check_Sn_asymptotic(SphereDim(n), pol));
  }
  if (wants("gyk")) out.push_back(check_gyk(pol));
  if (wants("routes")) append(out, check_route_agreement(pol));
  if (wants("zero_mean")) {
    for (int n = 2; n <= 4; ++n) out.push_back(check_zero_mean(SphereDim(n), samples, seed, pol));
    out.push_back(check_log_sphere_mean(samples, seed));
    out.push_back(check_se_scaling(samples, seed));
  }
  if (wants("ball_means")) {
    append(out, check_ball_means(SphereDim(2), EnergyKind::log, false, samples, seed, pol));
    append(out, check_ball_means(SphereDim(2), EnergyKind::log, true, samples, seed, pol));
    append(out, check_ball_means(SphereDim(4), EnergyKind::green, false, samples, seed, pol));
    append(out, check_ball_means(SphereDim(3), EnergyKind::green, true, samples, seed, pol));
  }
  if (wants("alpha") || wants("delta")) {
    const PointConfig pair(SphereDim(2), {0.0, 0.0, 1.0, 0.0, 0.0, -1.0});
    const PointConfig cloud = random_uniform_config(SphereDim(3), 10, mix_seed(seed, 77));
    const AlphaDelta ad2 = alpha_delta(pair, 0.5, samples, seed, pol);
    const AlphaDelta ad3 = alpha_delta(cloud, 0.3, samples, seed, pol);
    if (wants("alpha")) {
      out.push_back(alpha_result("n2", ad2, seed));
      out.push_back(alpha_result("n3", ad3, seed));
    }
    if (wants("delta")) {
      out.push_back(delta_result("n2", ad2, seed));
      out.push_back(delta_result("n3", ad3, seed));
    }
  }
  if (wants("bounds")) {
    out.push_back(check_log_inequality());
    out.push_back(check_tightness_s2());
  }
  for (auto& r : out) {
    r.tolerance *= options.tol_scale;
    r.passed = r.max_violation <= r.tolerance;
  }
  return out;
}

std::string format_check(const CheckResult& r) {
  char buf[64];
  std::string line = "CHECK " + r.name + (r.passed ? " PASS" : " FAIL");
  std::snprintf(buf, sizeof buf, " max_violation=%.6g", r.max_violation);
  line += buf;
  std::snprintf(buf, sizeof buf, " tol=%.6g", r.tolerance);
  line += buf;
  line += " seed=" + std::to_string(r.seed);
  return line;
}

}  // namespace spherepot
