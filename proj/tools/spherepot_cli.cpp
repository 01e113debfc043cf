// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0
//
// spherepot command-line front end. Exit codes: 0 success, 1 invalid input
// or a failed check, 2 numerical failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spherepot/spherepot.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitNumerical = 2;

struct StatusError : std::runtime_error {
  sp_status status;
  StatusError(sp_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
};

void check(sp_status s) {
  if (s != SP_OK) throw StatusError(s, std::string(sp_status_name(s)) + ": " + sp_last_error());
}

int exit_code_for(sp_status s) {
  switch (s) {
    case SP_ERR_TRUNCATION:
    case SP_ERR_QUADRATURE:
    case SP_ERR_INTERNAL:
      return kExitNumerical;
    default:
      return kExitInvalid;
  }
}

struct ConfigDeleter {
  void operator()(sp_config* c) const { sp_config_destroy(c); }
};
struct ExperimentDeleter {
  void operator()(sp_experiment* e) const { sp_experiment_destroy(e); }
};
struct ReportDeleter {
  void operator()(sp_check_report* r) const { sp_check_report_destroy(r); }
};
using ConfigPtr = std::unique_ptr<sp_config, ConfigDeleter>;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void print_kv(const char* key, const std::string& value) {
  std::printf("%-18s %s\n", key, value.c_str());
}

// "8", "4,8,16" or "start:stop:step" (inclusive of stop).
std::vector<int64_t> parse_n_range(const std::string& text) {
  std::vector<int64_t> out;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw CLI::ValidationError("--N", "bad integer '" + s + "'");
    return static_cast<int64_t>(v);
  };
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      const std::size_t colon = text.find(':', start);
      parts.push_back(text.substr(start, colon - start));
      if (colon == std::string::npos) break;
      start = colon + 1;
    }
    if (parts.size() < 2 || parts.size() > 3) {
      throw CLI::ValidationError("--N", "range must be start:stop[:step]");
    }
    const int64_t lo = to_int(parts[0]);
    const int64_t hi = to_int(parts[1]);
    const int64_t step = parts.size() == 3 ? to_int(parts[2]) : 1;
    if (step <= 0 || hi < lo) throw CLI::ValidationError("--N", "empty or descending range");
    for (int64_t v = lo; v <= hi; v += step) out.push_back(v);
  } else {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      out.push_back(to_int(text.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  for (int64_t v : out) {
    if (v < 2) throw CLI::ValidationError("--N", "every N must be >= 2");
  }
  return out;
}

void print_bound(const sp_bound_report& r) {
  print_kv("finite_bound", num(r.value));
  print_kv("a_used", num(r.a_used));
  print_kv("C_used", num(r.C_used));
  print_kv("clamped", r.clamped ? "yes" : "no");
  print_kv("gamma_term", num(r.gamma_term));
  print_kv("delta_term", num(r.delta_term));
  print_kv("ball_ratio", num(r.ball_ratio));
  print_kv("K_radius", num(r.k_radius));
  print_kv("K_complement", num(r.k_complement));
  print_kv("K_antipodal", num(r.k_antipodal));
}

const char* termination_name(sp_termination t) {
  switch (t) {
    case SP_TERM_CONVERGED: return "converged";
    case SP_TERM_MAX_ITERS: return "max_iters";
    case SP_TERM_STEP_UNDERFLOW: return "step_underflow";
  }
  return "unknown";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energies, lower bounds and minimizers for point sets on spheres"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sp_version());

  sp_series_policy policy = sp_series_policy_default();
  app.add_option("--rel-tol", policy.rel_tol, "Series stopping tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-terms", policy.max_terms, "Series term budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // energy
  auto* energy = app.add_subcommand("energy", "Evaluate the energy of a point file");
  std::string energy_in;
  std::string kind_name = "log";
  energy->add_option("file", energy_in, "Point configuration file")->required();
  energy->add_option("--kind", kind_name, "log or green")
      ->check(CLI::IsMember({"log", "green"}))
      ->capture_default_str();

  // bound
  auto* bound = app.add_subcommand("bound", "Evaluate the finite and asymptotic lower bounds");
  int bound_n = 2;
  int64_t bound_N = 2;
  double bound_a = 0.0;
  double bound_C = 0.0;
  bool asymptotic_green = false;
  bound->add_option("--n", bound_n, "Sphere dimension")->required()->check(CLI::Range(2, 1000));
  bound->add_option("--N", bound_N, "Number of points")->required()->check(CLI::Range(int64_t{2}, INT64_MAX));
  auto* a_opt = bound->add_option("--a", bound_a, "Ball radius in (0, pi)");
  bound->add_option("--C", bound_C, "Radius constant, a = sqrt(C) N^(-1/n)")->excludes(a_opt);
  bound->add_flag("--asymptotic-green", asymptotic_green,
                  "Print only the asymptotic Green-energy bound (n >= 3)");

  // minimize
  auto* minimize = app.add_subcommand("minimize", "Restarted descent for the minimal energy");
  int min_n = 2;
  std::string min_N;
  sp_minimize_params params = sp_minimize_params_default();
  std::string min_out;
  std::string min_csv;
  minimize->add_option("--n", min_n, "Sphere dimension")->required()->check(CLI::Range(2, 1000));
  minimize->add_option("--N", min_N, "Number of points (or a range)")->required();
  minimize->add_option("--restarts", params.restarts)->check(CLI::PositiveNumber)->capture_default_str();
  minimize->add_option("--seed", params.seed)->capture_default_str();
  minimize->add_option("--max-iters", params.max_iters)->check(CLI::PositiveNumber)->capture_default_str();
  minimize->add_option("--grad-tol", params.grad_tol)->check(CLI::PositiveNumber)->capture_default_str();
  minimize->add_option("--out", min_out, "Write the best configuration (last N if a range)");
  minimize->add_option("--csv", min_csv, "Write one CSV row per restart");

  // verify
  auto* verify = app.add_subcommand("verify", "Run numerical checks");
  std::string suite = "all";
  uint64_t verify_seed = 42;
  int64_t verify_samples = 1'000'000;
  double tol_scale = 1.0;
  bool list_suites = false;
  verify->add_option("suite", suite, "all or a suite name")->capture_default_str();
  verify->add_option("--seed", verify_seed)->capture_default_str();
  verify->add_option("--samples", verify_samples)->check(CLI::Range(int64_t{1000}, INT64_MAX))->capture_default_str();
  verify->add_option("--tol-scale", tol_scale, "Multiply every tolerance (0 makes checks strict)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_flag("--list", list_suites, "List suite names and exit");

  // figure
  auto* figure = app.add_subcommand("figure", "Minimal energies versus N with the bound curve");
  int fig_n = 4;
  std::string fig_N = "4:24:4";
  sp_minimize_params fig_params = sp_minimize_params_default();
  std::string fig_csv;
  std::string fig_svg;
  figure->add_option("--n", fig_n, "Sphere dimension (>= 3)")->check(CLI::Range(3, 1000))->capture_default_str();
  figure->add_option("--N", fig_N, "start:stop:step, list or single value")->capture_default_str();
  figure->add_option("--restarts", fig_params.restarts)->check(CLI::PositiveNumber)->capture_default_str();
  figure->add_option("--seed", fig_params.seed)->capture_default_str();
  figure->add_option("--max-iters", fig_params.max_iters)->check(CLI::PositiveNumber)->capture_default_str();
  figure->add_option("--csv", fig_csv, "Output CSV path")->required();
  figure->add_option("--svg", fig_svg, "Output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*energy) {
      sp_config* raw = nullptr;
      check(sp_config_load(energy_in.c_str(), &raw));
      ConfigPtr config(raw);
      sp_energy_report report{};
      if (kind_name == "log") {
        check(sp_log_energy(config.get(), &report));
      } else {
        check(sp_green_energy(config.get(), &policy, &report));
      }
      print_kv("energy", num(report.total));
      print_kv("kind", kind_name);
      print_kv("n", std::to_string(sp_config_dim(config.get())));
      print_kv("N", std::to_string(sp_config_size(config.get())));
      print_kv("min_distance", num(report.min_chordal_distance));
      if (kind_name == "log" && sp_config_dim(config.get()) == 2) {
        double recentered = 0.0;
        check(sp_recentered_energy_s2(config.get(), &recentered));
        print_kv("recentered", num(recentered));
      }
      if (kind_name == "green") {
        print_kv("routes", "series=" + std::to_string(report.route_series) +
                               " reflected=" + std::to_string(report.route_reflected) +
                               " quadrature=" + std::to_string(report.route_quadrature));
      }
      return kExitOk;
    }

    if (*bound) {
      const bool have_a = bound->count("--a") > 0;
      const bool have_C = bound->count("--C") > 0;
      if (asymptotic_green) {
        if (bound_n < 3) {
          std::fprintf(stderr, "error: --asymptotic-green needs n >= 3\n");
          return kExitInvalid;
        }
        double v = 0.0;
        check(sp_sn_asymptotic_bound(bound_n, bound_N, &v));
        print_kv("asymptotic_bound", num(v));
        return kExitOk;
      }
      if (have_C && !(bound_C > 0.0)) {
        std::fprintf(stderr, "error: --C must be > 0\n");
        return kExitInvalid;
      }
      sp_bound_report r{};
      double asymptotic = 0.0;
      if (bound_n == 2) {
        if (have_a) {
          check(sp_s2_finite_lower_bound(bound_N, bound_a, &r));
        } else {
          check(sp_s2_finite_lower_bound_C(bound_N, have_C ? bound_C : 1.0, &r));
        }
        check(sp_s2_asymptotic_bound(bound_N, &asymptotic));
      } else {
        if (have_a) {
          check(sp_sn_finite_lower_bound(bound_n, bound_N, bound_a, &policy, &r));
        } else {
          check(sp_sn_step_d_bound(bound_n, bound_N, have_C ? bound_C : 0.0, &policy, &r));
        }
        check(sp_sn_asymptotic_bound(bound_n, bound_N, &asymptotic));
      }
      print_kv("n", std::to_string(bound_n));
      print_kv("N", std::to_string(bound_N));
      print_bound(r);
      print_kv("asymptotic_bound", num(asymptotic));
      if (bound_n == 2) {
        const double N = static_cast<double>(bound_N);
        print_kv("kappa_N2", num(sp_kappa() * N * N));
      }
      return kExitOk;
    }

    if (*minimize) {
      const std::vector<int64_t> values = parse_n_range(min_N);
      sp_experiment* raw = nullptr;
      check(sp_experiment_run(min_n, values.data(), values.size(), &params, &policy, &raw));
      std::unique_ptr<sp_experiment, ExperimentDeleter> exp(raw);
      if (!min_csv.empty()) check(sp_experiment_write_csv(exp.get(), min_csv.c_str()));
      bool all_have_converged = true;
      const size_t rows = sp_experiment_row_count(exp.get());
      const size_t per_n = static_cast<size_t>(params.restarts);
      for (size_t idx = 0; idx < values.size(); ++idx) {
        double best = INFINITY;
        bool any_converged = false;
        sp_experiment_row row{};
        for (size_t r = 0; r < per_n && idx * per_n + r < rows; ++r) {
          check(sp_experiment_row_at(exp.get(), idx * per_n + r, &row));
          best = std::fmin(best, row.final_energy);
          any_converged = any_converged || row.converged;
          if (!row.converged) {
            std::fprintf(stderr, "warning: N=%lld restart %d stopped by %s after %lld iterations\n",
                         static_cast<long long>(row.n_points), row.restart,
                         termination_name(row.status), static_cast<long long>(row.iterations));
          }
        }
        all_have_converged = all_have_converged && any_converged;
        std::printf("N=%lld best_energy=%s finite_bound=%s asymptotic_bound=%s gap=%s\n",
                    static_cast<long long>(values[idx]), num(best).c_str(),
                    num(row.finite_bound).c_str(), num(row.asymptotic_bound).c_str(),
                    num(best - row.finite_bound).c_str());
      }
      if (!min_out.empty()) {
        sp_config* best_raw = nullptr;
        check(sp_experiment_best_config(exp.get(), values.size() - 1, &best_raw));
        ConfigPtr best(best_raw);
        check(sp_config_save(best.get(), min_out.c_str()));
      }
      if (!all_have_converged) {
        std::fprintf(stderr, "error: no restart converged for at least one N\n");
        return kExitNumerical;
      }
      return kExitOk;
    }

    if (*verify) {
      if (list_suites) {
        for (size_t i = 0; sp_verify_suite_name(i) != nullptr; ++i) {
          std::printf("%s\n", sp_verify_suite_name(i));
        }
        return kExitOk;
      }
      sp_check_report* raw = nullptr;
      check(sp_verify(suite.c_str(), verify_seed, verify_samples, tol_scale, &raw));
      std::unique_ptr<sp_check_report, ReportDeleter> report(raw);
      for (size_t i = 0; i < sp_check_report_size(report.get()); ++i) {
        std::printf("%s\n", sp_check_report_line(report.get(), i));
      }
      const size_t failures = sp_check_report_failures(report.get());
      std::printf("SUMMARY %zu checks, %zu failed\n", sp_check_report_size(report.get()), failures);
      return failures == 0 ? kExitOk : kExitInvalid;
    }

    if (*figure) {
      const std::vector<int64_t> values = parse_n_range(fig_N);
      sp_experiment* raw = nullptr;
      check(sp_experiment_run(fig_n, values.data(), values.size(), &fig_params, &policy, &raw));
      std::unique_ptr<sp_experiment, ExperimentDeleter> exp(raw);
      check(sp_experiment_write_csv(exp.get(), fig_csv.c_str()));
      check(sp_experiment_write_svg(exp.get(), fig_svg.c_str()));
      size_t below = 0;
      for (size_t i = 0; i < sp_experiment_row_count(exp.get()); ++i) {
        sp_experiment_row row{};
        check(sp_experiment_row_at(exp.get(), i, &row));
        if (row.final_energy < row.finite_bound) ++below;
      }
      std::printf("rows=%zu below_bound=%zu\n", sp_experiment_row_count(exp.get()), below);
      return kExitOk;
    }
  } catch (const StatusError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e.status);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  }
  return kExitInvalid;
}
