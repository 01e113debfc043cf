// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0

#include "minimize.hpp"

#include <cmath>
#include <optional>
#include <random>

#include "bounds.hpp"
#include "parallel.hpp"

namespace spherepot {

namespace {

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void retract(std::span<const double> x, std::span<const double> direction, double step,
             std::size_t stride, std::span<double> out) {
  for (std::size_t i = 0; i < x.size(); i += stride) {
    double n2 = 0.0;
    for (std::size_t k = i; k < i + stride; ++k) {
      out[k] = x[k] - step * direction[k];
      n2 += out[k] * out[k];
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (std::size_t k = i; k < i + stride; ++k) out[k] *= inv;
  }
}

}  // namespace

void MinimizeParams::validate() const {
  if (max_iters < 1) throw DomainError("max_iters must be >= 1");
  if (!(grad_tol > 0.0)) throw DomainError("grad_tol must be > 0");
  if (!(initial_step >= 0.0)) throw DomainError("initial_step must be >= 0 (0 selects 1/N)");
  if (!(backtrack_factor > 0.0 && backtrack_factor < 1.0)) {
    throw DomainError("backtrack_factor must lie in (0, 1)");
  }
  if (!(armijo_c > 0.0 && armijo_c < 1.0)) throw DomainError("armijo_c must lie in (0, 1)");
  if (restarts < 1) throw DomainError("restarts must be >= 1");
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

PointConfig random_uniform_config(SphereDim dim, std::size_t n_points, std::uint64_t seed) {
  if (n_points < 2) throw DomainError("random configuration needs N >= 2");
  const std::size_t d = static_cast<std::size_t>(dim.ambient());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<double> coords(n_points * d);
  for (std::size_t i = 0; i < n_points; ++i) {
    double n2 = 0.0;
    do {
      n2 = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        coords[i * d + k] = gauss(rng);
        n2 += coords[i * d + k] * coords[i * d + k];
      }
    } while (n2 < 1e-20);
    const double inv = 1.0 / std::sqrt(n2);
    for (std::size_t k = 0; k < d; ++k) coords[i * d + k] *= inv;
  }
  return PointConfig(dim, std::move(coords));
}

Trajectory minimize_energy(const PointConfig& start, EnergyKind kind,
                           const MinimizeParams& params, const SeriesPolicy& policy) {
  params.validate();
  const EnergyFunctional energy(start.dim(), kind, policy);
  const std::size_t stride = start.stride();
  std::vector<double> x = start.coords();
  std::vector<double> grad(x.size());
  std::vector<double> trial(x.size());
  std::vector<double> trial_grad(x.size());

  Trajectory traj{{}, start, false, 0, Termination::max_iters, 0.0};
  double value = energy.value_and_gradient(x, grad);
  double grad_norm = norm(grad);
  traj.energies.push_back(value);
  double step = params.initial_step > 0.0 ? params.initial_step
                                          : 1.0 / static_cast<double>(start.size());

  while (true) {
    if (grad_norm <= params.grad_tol) {
      traj.status = Termination::converged;
      break;
    }
    if (traj.iterations >= params.max_iters) {
      traj.status = Termination::max_iters;
      break;
    }
    bool accepted = false;
    double trial_value = 0.0;
    while (step * grad_norm > 1e-16) {
      retract(x, grad, step, stride, trial);
      try {
        trial_value = energy.value_and_gradient(trial, trial_grad);
      } catch (const CoincidentPointsError&) {
        step *= params.backtrack_factor;
        continue;
      }
      const double required = params.armijo_c * step * grad_norm * grad_norm;
      const double change = required < 1e-6 * (1.0 + std::abs(value))
                                ? energy.difference(x, trial)
                                : trial_value - value;
      if (change <= -required) {
        accepted = true;
        break;
      }
      step *= params.backtrack_factor;
    }
    if (!accepted) {
      traj.status = Termination::step_underflow;
      break;
    }
    // Barzilai-Borwein trial length for the next iteration.
    double ss = 0.0;
    double sy = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double dx = trial[k] - x[k];
      ss += dx * dx;
      sy += dx * (trial_grad[k] - grad[k]);
    }
    x.swap(trial);
    grad.swap(trial_grad);
    value = trial_value;
    grad_norm = norm(grad);
    traj.energies.push_back(value);
    ++traj.iterations;
    step = sy > 0.0 ? ss / sy : step / params.backtrack_factor;
  }
  traj.converged = traj.status == Termination::converged;
  traj.grad_norm = grad_norm;
  traj.final_config = PointConfig(start.dim(), std::move(x));
  return traj;
}

Experiment figure_experiment(SphereDim dim, const std::vector<std::int64_t>& n_values,
                             const MinimizeParams& params, const SeriesPolicy& policy) {
  params.validate();
  if (n_values.empty()) throw DomainError("figure experiment needs at least one N");
  for (std::int64_t n_points : n_values) {
    if (n_points < 2) throw DomainError("figure experiment needs N >= 2");
  }
  Experiment exp;
  exp.n = dim.n();
  exp.kind = dim.n() == 2 ? EnergyKind::log : EnergyKind::green;
  exp.n_values = n_values;

  const std::size_t restarts = static_cast<std::size_t>(params.restarts);
  const std::size_t tasks = n_values.size() * restarts;
  std::vector<std::optional<Trajectory>> results(tasks);
  parallel_for(tasks, [&](std::size_t task) {
    const std::int64_t n_points = n_values[task / restarts];
    const std::size_t restart = task % restarts;
    const std::uint64_t seed =
        mix_seed(mix_seed(params.seed, static_cast<std::uint64_t>(n_points)), restart);
    const PointConfig start =
        random_uniform_config(dim, static_cast<std::size_t>(n_points), seed);
    results[task] = minimize_energy(start, exp.kind, params, policy);
  });

  for (std::size_t idx = 0; idx < n_values.size(); ++idx) {
    const std::int64_t n_points = n_values[idx];
    double finite;
    double asymptotic;
    if (dim.n() == 2) {
      const double N = static_cast<double>(n_points);
      finite = kappa() * N * N + s2_finite_lower_bound_C(n_points, 1.0).value;
      asymptotic = s2_asymptotic_bound(n_points);
    } else {
      finite = sn_step_d_bound(dim, n_points, std::nullopt, policy).value;
      asymptotic = sn_asymptotic_bound(dim, n_points);
    }
    std::size_t best = idx * restarts;
    for (std::size_t r = 0; r < restarts; ++r) {
      const Trajectory& t = *results[idx * restarts + r];
      exp.rows.push_back({dim.n(), n_points, static_cast<int>(r), t.energies.back(), finite,
                          asymptotic, t.converged, t.iterations, t.status});
      if (t.energies.back() < results[best]->energies.back()) best = idx * restarts + r;
    }
    exp.best_configs.push_back(results[best]->final_config);
    exp.best_energies.push_back(results[best]->energies.back());
  }
  return exp;
}

}  // namespace spherepot
