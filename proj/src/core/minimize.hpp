// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "energy.hpp"

namespace spherepot {

struct MinimizeParams {
  std::int64_t max_iters = 5000;
  double grad_tol = 1e-8;
  double initial_step = 0.0;  // 0 selects 1/N
  double backtrack_factor = 0.5;
  double armijo_c = 1e-4;
  int restarts = 5;
  std::uint64_t seed = 42;

  void validate() const;
};

enum class Termination {
  converged,      // tangent gradient norm <= grad_tol
  max_iters,
  step_underflow, // no step length satisfied the Armijo condition
};

struct Trajectory {
  std::vector<double> energies;  // energies[0] is the starting energy
  PointConfig final_config;
  bool converged = false;
  std::int64_t iterations = 0;
  Termination status = Termination::max_iters;
  double grad_norm = 0.0;
};

/// splitmix64 finalizer; used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

/// N independent uniform points (normalized Gaussian vectors).
PointConfig random_uniform_config(SphereDim dim, std::size_t n_points, std::uint64_t seed);

/// Projected gradient descent with Armijo backtracking; every iterate is
/// renormalized onto the sphere. After an accepted step the next trial length
/// is the Barzilai-Borwein ratio s.s / s.y (or step / backtrack_factor when
/// s.y <= 0).
Trajectory minimize_energy(const PointConfig& start, EnergyKind kind,
                           const MinimizeParams& params, const SeriesPolicy& policy = {});

struct ExperimentRow {
  int n = 0;
  std::int64_t n_points = 0;
  int restart = 0;
  double final_energy = 0.0;
  double finite_bound = 0.0;
  double asymptotic_bound = 0.0;
  bool converged = false;
  std::int64_t iterations = 0;
  Termination status = Termination::max_iters;
};

struct Experiment {
  int n = 0;
  EnergyKind kind = EnergyKind::green;
  std::vector<ExperimentRow> rows;          // ordered by (N, restart)
  std::vector<std::int64_t> n_values;
  std::vector<PointConfig> best_configs;    // one per entry of n_values
  std::vector<double> best_energies;
};

/// Minimizes from params.restarts seeded random starts for every N. Green
/// energy is used for n >= 3 with bounds from sn_step_d_bound and
/// sn_asymptotic_bound. On S^2 the log energy is used; the bound columns are
/// then kappa N^2 + s2_finite_lower_bound_C(N, 1) and s2_asymptotic_bound.
Experiment figure_experiment(SphereDim dim, const std::vector<std::int64_t>& n_values,
                             const MinimizeParams& params, const SeriesPolicy& policy = {});

}  // namespace spherepot
