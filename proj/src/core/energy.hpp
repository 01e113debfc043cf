// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kernel.hpp"

namespace spherepot {

enum class EnergyKind { log, green };

/// N points on S^n stored row-major, one row of n+1 coordinates per point.
class PointConfig {
 public:
  /// Validates: N >= 2, every row has unit norm within 1e-12, and no two rows
  /// are identical (CoincidentPointsError names the pair).
  PointConfig(SphereDim dim, std::vector<double> coords);

  SphereDim dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return coords_.size() / stride(); }
  std::size_t stride() const noexcept { return static_cast<std::size_t>(dim_.ambient()); }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * stride(), stride()};
  }
  const std::vector<double>& coords() const noexcept { return coords_; }

 private:
  SphereDim dim_;
  std::vector<double> coords_;
};

struct RouteCounts {
  std::int64_t series = 0;
  std::int64_t reflected_series = 0;
  std::int64_t quadrature = 0;
};

/// Sums run over unordered pairs i < j in lexicographic order with
/// compensated accumulation and are doubled at the end, so `total` matches the
/// ordered-pair definition.
struct EnergyReport {
  double total = 0.0;
  double min_chordal_distance = 0.0;
  std::int64_t n_pairs = 0;  // N(N-1)/2
  RouteCounts routes;
};

/// Pairwise energy and tangent gradient for one kernel, evaluated on raw
/// coordinate buffers. This is the hot path of the minimizer; the free
/// functions below wrap it for validated configurations.
class EnergyFunctional {
 public:
  EnergyFunctional(SphereDim dim, EnergyKind kind, SeriesPolicy policy = {});

  SphereDim dim() const noexcept { return kernel_.dim(); }
  EnergyKind kind() const noexcept { return kind_; }

  EnergyReport evaluate(std::span<const double> coords) const;

  /// Energy plus the gradient with respect to each point, projected onto the
  /// tangent space at that point. `grad` has the layout of `coords`.
  double value_and_gradient(std::span<const double> coords, std::span<double> grad) const;

  /// E(to) - E(from), computed pair by pair from the change in chordal
  /// distance so that it stays accurate when the two energies agree to
  /// nearly all digits.
  double difference(std::span<const double> from, std::span<const double> to) const;

 private:
  EnergyKind kind_;
  GreenKernel kernel_;
};

/// Sum over i != j of -ln|p_i - p_j|. Defined for every n; on S^2 it is the
/// classical logarithmic energy.
EnergyReport log_energy(const PointConfig& config);

/// Sum over i != j of G(S^n; p_i, p_j).
EnergyReport green_energy(const PointConfig& config, const SeriesPolicy& policy = {});

/// kappa = 1/2 - ln 2.
double kappa();

/// log_energy - kappa N^2 on S^2.
double recentered_energy_s2(const PointConfig& config);

std::vector<double> riemannian_gradient(const PointConfig& config, EnergyKind kind,
                                        const SeriesPolicy& policy = {});

}  // namespace spherepot
