// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT
//
// The sweep engine: a Cartesian grid of (method, beta, delta, gamma) times
// independent trials, each a full solver run with seed base_seed + run_id.
// Runs are independent and execute on a small worker pool; the result rows
// are a pure function of (problem, plan), whatever the schedule.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kmfeas/csv.hpp"
#include "kmfeas/problem.hpp"
#include "kmfeas/solvers.hpp"

namespace kmfeas {

struct ExperimentPlan {
  std::vector<Method> methods{Method::skm};
  std::vector<std::size_t> betas{1};
  std::vector<double> deltas{1.0};
  std::vector<double> gammas{0.0};
  double t_aux = 1.0;
  std::size_t trials = 1;
  std::uint64_t base_seed = 0;
  StoppingRule stop;
  std::size_t stride = 1;      // stopping-rule check cadence inside each run
  bool record_f = false;
  bool record_dist = false;
  std::optional<ProjectionOracle> oracle;
  DenseVector x0;              // start point shared by every run
  bool measure_time = false;   // fill cpu_seconds (breaks byte determinism)
};

std::size_t plan_run_count(const ExperimentPlan& plan);

// Runs the whole plan and returns one row per run, ordered by run_id.
// A run that throws is recorded as status "error:<kind>" and the sweep
// continues. threads = 0 picks a machine-dependent worker count.
std::vector<ResultRow> run_sweep(const FeasibilityProblem& p,
                                 const ExperimentPlan& plan,
                                 std::size_t threads = 1);

// Aggregates used by the CLI summary printout.
struct ConfigSummary {
  Method method = Method::skm;
  std::size_t beta = 1;
  double delta = 1.0;
  double gamma = 0.0;
  std::size_t runs = 0;
  std::size_t converged = 0;
  double mean_iterations = 0.0;
  double median_iterations = 0.0;
  double mean_residual = 0.0;
};

std::vector<ConfigSummary> summarize_sweep(const std::vector<ResultRow>& rows);

}  // namespace kmfeas
