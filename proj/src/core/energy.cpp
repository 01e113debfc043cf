// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0

#include "energy.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <numeric>

#include "summation.hpp"

namespace spherepot {

namespace {

constexpr double kCoincident = 1e-14;

double pair_distance(const double* p, const double* q, std::size_t d) {
  double s = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    const double diff = p[k] - q[k];
    s += diff * diff;
  }
  return std::sqrt(s);
}

void check_layout(std::span<const double> coords, std::size_t stride) {
  if (coords.size() % stride != 0 || coords.size() / stride < 2) {
    throw DomainError("coordinate buffer must hold at least two points of dimension " +
                      std::to_string(stride));
  }
}

}  // namespace

PointConfig::PointConfig(SphereDim dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  const std::size_t d = stride();
  if (coords_.size() % d != 0) {
    throw DomainError("coordinate count is not a multiple of n+1 = " + std::to_string(d));
  }
  const std::size_t n_points = coords_.size() / d;
  if (n_points < 2) throw DomainError("a configuration needs N >= 2 points");
  for (std::size_t i = 0; i < n_points; ++i) {
    double norm2 = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double c = coords_[i * d + k];
      if (!std::isfinite(c)) {
        throw DomainError("point " + std::to_string(i) + " has a non-finite coordinate");
      }
      norm2 += c * c;
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12) {
      throw DomainError("point " + std::to_string(i) + " is not on the unit sphere");
    }
  }
  std::vector<std::size_t> order(n_points);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto row = [&](std::size_t i) { return coords_.begin() + static_cast<std::ptrdiff_t>(i * d); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(row(a), row(a) + static_cast<std::ptrdiff_t>(d), row(b),
                                        row(b) + static_cast<std::ptrdiff_t>(d));
  });
  for (std::size_t r = 1; r < n_points; ++r) {
    const std::size_t a = order[r - 1];
    const std::size_t b = order[r];
    if (std::equal(row(a), row(a) + static_cast<std::ptrdiff_t>(d), row(b))) {
      throw CoincidentPointsError(std::min(a, b), std::max(a, b), 0.0);
    }
  }
}

EnergyFunctional::EnergyFunctional(SphereDim dim, EnergyKind kind, SeriesPolicy policy)
    : kind_(kind), kernel_(dim, policy) {}

EnergyReport EnergyFunctional::evaluate(std::span<const double> coords) const {
  const std::size_t d = static_cast<std::size_t>(dim().ambient());
  check_layout(coords, d);
  const std::size_t n_points = coords.size() / d;
  EnergyReport report;
  report.min_chordal_distance = std::numeric_limits<double>::infinity();
  CompensatedSum sum;
  for (std::size_t i = 0; i + 1 < n_points; ++i) {
    for (std::size_t j = i + 1; j < n_points; ++j) {
      const double t = pair_distance(&coords[i * d], &coords[j * d], d);
      if (t < kCoincident) throw CoincidentPointsError(i, j, t);
      report.min_chordal_distance = std::min(report.min_chordal_distance, t);
      if (kind_ == EnergyKind::log) {
        sum.add(-std::log(t));
        continue;
      }
      const KernelEval e = kernel_.eval(t);
      sum.add(e.value);
      if (e.route == KernelRoute::series) {
        ++report.routes.series;
      } else if (e.route == KernelRoute::reflected_series) {
        ++report.routes.reflected_series;
      } else {
        ++report.routes.quadrature;
      }
    }
  }
  report.total = 2.0 * sum.value();
  report.n_pairs = static_cast<std::int64_t>(n_points * (n_points - 1) / 2);
  return report;
}

double EnergyFunctional::value_and_gradient(std::span<const double> coords,
                                            std::span<double> grad) const {
  const std::size_t d = static_cast<std::size_t>(dim().ambient());
  check_layout(coords, d);
  if (grad.size() != coords.size()) throw DomainError("gradient buffer has the wrong size");
  const std::size_t n_points = coords.size() / d;
  std::fill(grad.begin(), grad.end(), 0.0);
  CompensatedSum sum;
  for (std::size_t i = 0; i + 1 < n_points; ++i) {
    const double* p = &coords[i * d];
    for (std::size_t j = i + 1; j < n_points; ++j) {
      const double* q = &coords[j * d];
      const double t = pair_distance(p, q, d);
      if (t < kCoincident) throw CoincidentPointsError(i, j, t);
      double value;
      double factor;  // d(kernel)/dt / t
      if (kind_ == EnergyKind::log) {
        value = -std::log(t);
        factor = -1.0 / (t * t);
      } else {
        const KernelSlope ks = kernel_.eval_with_slope(t);
        value = ks.value;
        factor = ks.radial_factor;
      }
      sum.add(value);
      // Each unordered pair enters the ordered-pair energy twice.
      for (std::size_t k = 0; k < d; ++k) {
        const double g = 2.0 * factor * (p[k] - q[k]);
        grad[i * d + k] += g;
        grad[j * d + k] -= g;
      }
    }
  }
  for (std::size_t i = 0; i < n_points; ++i) {
    double radial = 0.0;
    for (std::size_t k = 0; k < d; ++k) radial += grad[i * d + k] * coords[i * d + k];
    for (std::size_t k = 0; k < d; ++k) grad[i * d + k] -= radial * coords[i * d + k];
  }
  return 2.0 * sum.value();
}

double EnergyFunctional::difference(std::span<const double> from,
                                    std::span<const double> to) const {
  const std::size_t d = static_cast<std::size_t>(dim().ambient());
  check_layout(from, d);
  if (to.size() != from.size()) throw DomainError("difference: configurations differ in size");
  const std::size_t n_points = from.size() / d;

  // Work with directions u = p/|p|, so that renormalization noise in the
  // stored points does not register as motion. step[i] = u'_i - u_i, formed
  // from the exact difference of the stored coordinates.
  std::vector<double> dir(from.size());
  std::vector<double> step(from.size());
  for (std::size_t i = 0; i < n_points; ++i) {
    double n2 = 0.0;
    double n2_new = 0.0;
    double dn2 = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double p = from[i * d + k];
      const double delta = to[i * d + k] - p;
      n2 += p * p;
      n2_new += to[i * d + k] * to[i * d + k];
      dn2 += delta * (2.0 * p + delta);
    }
    const double norm = std::sqrt(n2);
    const double norm_new = std::sqrt(n2_new);
    const double inv_change = -dn2 / (norm * norm_new * (norm + norm_new));
    for (std::size_t k = 0; k < d; ++k) {
      const double p = from[i * d + k];
      dir[i * d + k] = p / norm;
      step[i * d + k] = (to[i * d + k] - p) / norm_new + p * inv_change;
    }
  }

  CompensatedSum sum;
  for (std::size_t i = 0; i + 1 < n_points; ++i) {
    for (std::size_t j = i + 1; j < n_points; ++j) {
      double t2 = 0.0;
      double dt2 = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        const double sep = dir[i * d + k] - dir[j * d + k];
        const double change = step[i * d + k] - step[j * d + k];
        t2 += sep * sep;
        dt2 += change * (2.0 * sep + change);
      }
      const double t = std::sqrt(t2);
      const double t_new = std::sqrt(std::max(0.0, t2 + dt2));
      if (t < kCoincident) throw CoincidentPointsError(i, j, t);
      if (t_new < kCoincident) throw CoincidentPointsError(i, j, t_new);
      const double dt = dt2 / (t + t_new);
      if (kind_ == EnergyKind::log) {
        sum.add(-std::log1p(dt / t));
      } else if (std::abs(dt) <= 1e-3 * t) {
        sum.add(dt / 6.0 *
                (kernel_.derivative(t) + 4.0 * kernel_.derivative(t + 0.5 * dt) +
                 kernel_.derivative(t_new)));
      } else {
        sum.add(kernel_(t_new) - kernel_(t));
      }
    }
  }
  return 2.0 * sum.value();
}

EnergyReport log_energy(const PointConfig& config) {
  return EnergyFunctional(config.dim(), EnergyKind::log).evaluate(config.coords());
}

EnergyReport green_energy(const PointConfig& config, const SeriesPolicy& policy) {
  return EnergyFunctional(config.dim(), EnergyKind::green, policy).evaluate(config.coords());
}

double kappa() { return 0.5 - std::numbers::ln2; }

double recentered_energy_s2(const PointConfig& config) {
  if (config.dim().n() != 2) throw DomainError("recentered energy is defined on S^2 only");
  const double n_points = static_cast<double>(config.size());
  return log_energy(config).total - kappa() * n_points * n_points;
}

std::vector<double> riemannian_gradient(const PointConfig& config, EnergyKind kind,
                                        const SeriesPolicy& policy) {
  std::vector<double> grad(config.coords().size());
  EnergyFunctional(config.dim(), kind, policy).value_and_gradient(config.coords(), grad);
  return grad;
}

}  // namespace spherepot
