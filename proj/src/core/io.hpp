// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "minimize.hpp"

namespace spherepot {

// Point files:
//   # sphere-config v1 n=<n> N=<N>
//   <n+1 coordinates, %.17g, single spaces>   (N lines)
// Further lines starting with '#' and blank lines are ignored.
std::string format_config(const PointConfig& config);
PointConfig parse_config(const std::string& text);

PointConfig load_config(const std::string& path);
void save_config(const PointConfig& config, const std::string& path);

// Header n,N,restart,final_energy,finite_bound,asymptotic_bound,converged,iters.
std::string format_experiment_csv(const Experiment& exp);

// Scatter of every restart minimum (one <path class="cross"> each) against
// the finite bound (<polyline class="bound">) and the asymptotic leading term
// (<polyline class="asymptotic">).
std::string format_experiment_svg(const Experiment& exp);

// Writes to path + ".tmp" and renames over path.
void write_file_atomic(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

// %.17g
std::string format_double(double x);

}  // namespace spherepot
