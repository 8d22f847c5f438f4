// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT

#include "kmfeas/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <thread>
#include <tuple>

#include "kmfeas/errors.hpp"

namespace kmfeas {

namespace {

struct RunSpec {
  std::size_t run_id;
  std::size_t trial;
  Method method;
  std::size_t beta;
  double delta;
  double gamma;
};

std::vector<RunSpec> enumerate_runs(const ExperimentPlan& plan) {
  if (plan.methods.empty() || plan.betas.empty() || plan.deltas.empty() ||
      plan.gammas.empty()) {
    throw parameter_error("sweep plan needs nonempty method/beta/delta/gamma grids");
  }
  if (plan.trials < 1) throw parameter_error("sweep plan needs trials >= 1");
  std::vector<RunSpec> runs;
  std::size_t run_id = 0;
  for (Method method : plan.methods) {
    for (std::size_t beta : plan.betas) {
      for (double delta : plan.deltas) {
        for (double gamma : plan.gammas) {
          for (std::size_t trial = 0; trial < plan.trials; ++trial) {
            runs.push_back({run_id++, trial, method, beta, delta, gamma});
          }
        }
      }
    }
  }
  return runs;
}

ResultRow execute_run(const FeasibilityProblem& prob, const ExperimentPlan& plan,
                      const RunSpec& spec) {
  ResultRow row;
  row.run_id = spec.run_id;
  row.trial = spec.trial;
  row.method = spec.method;
  row.beta = spec.beta;
  row.delta = spec.delta;
  row.gamma = spec.gamma;

  SolverParams params;
  params.method = spec.method;
  params.beta = spec.beta;
  params.delta = spec.delta;
  params.gamma = spec.gamma;
  params.t_aux = plan.t_aux;
  params.seed = plan.base_seed + spec.run_id;
  params.stop = plan.stop;

  TraceConfig cfg;
  cfg.stride = plan.stride;
  cfg.record_f = plan.record_f;
  cfg.record_dist = plan.record_dist;
  cfg.oracle = plan.oracle;

  try {
    const auto start = std::chrono::steady_clock::now();
    const Trace trace = run(prob, plan.x0, params, cfg);
    const auto end = std::chrono::steady_clock::now();
    if (plan.measure_time) {
      row.cpu_seconds = std::chrono::duration<double>(end - start).count();
    }
    const TraceRecord& last = trace.records.back();
    row.k = trace.iterations;
    row.residual_norm = trace.final_residual;
    row.fsc = last.fsc;
    row.dist_to_p = last.dist;
    row.f_value = last.f;
    row.status = run_status_name(trace.status);
  } catch (const divergence_error& e) {
    row.k = e.iteration;
    row.residual_norm = std::numeric_limits<double>::quiet_NaN();
    row.fsc = std::numeric_limits<double>::quiet_NaN();
    row.status = "error:divergence";
  } catch (const parameter_error&) {
    row.residual_norm = std::numeric_limits<double>::quiet_NaN();
    row.fsc = std::numeric_limits<double>::quiet_NaN();
    row.status = "error:parameter";
  } catch (const error&) {
    row.residual_norm = std::numeric_limits<double>::quiet_NaN();
    row.fsc = std::numeric_limits<double>::quiet_NaN();
    row.status = "error";
  }
  return row;
}

}  // namespace

std::size_t plan_run_count(const ExperimentPlan& plan) {
  return plan.methods.size() * plan.betas.size() * plan.deltas.size() *
         plan.gammas.size() * plan.trials;
}

std::vector<ResultRow> run_sweep(const FeasibilityProblem& p,
                                 const ExperimentPlan& plan,
                                 std::size_t threads) {
  const std::vector<RunSpec> runs = enumerate_runs(plan);
  FeasibilityProblem normalized_storage;
  if (!p.normalized) normalized_storage = normalize_rows(p);
  const FeasibilityProblem& prob = p.normalized ? p : normalized_storage;
  if (plan.x0.size() != prob.n()) {
    throw dimension_error("sweep plan: x0 has length " + std::to_string(plan.x0.size()) +
                          ", expected " + std::to_string(prob.n()));
  }

  if (threads == 0) {
    threads = std::max<std::size_t>(1, std::min<std::size_t>(
                                           std::thread::hardware_concurrency(), 16));
  }
  threads = std::min(threads, runs.size());

  std::vector<ResultRow> rows(runs.size());
  if (threads <= 1) {
    for (const RunSpec& spec : runs) {
      rows[spec.run_id] = execute_run(prob, plan, spec);
    }
    return rows;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= runs.size()) return;
      rows[runs[i].run_id] = execute_run(prob, plan, runs[i]);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return rows;
}

std::vector<ConfigSummary> summarize_sweep(const std::vector<ResultRow>& rows) {
  using Key = std::tuple<int, std::size_t, double, double>;
  std::map<Key, std::vector<const ResultRow*>> groups;
  for (const ResultRow& r : rows) {
    groups[{static_cast<int>(r.method), r.beta, r.delta, r.gamma}].push_back(&r);
  }
  std::vector<ConfigSummary> out;
  out.reserve(groups.size());
  for (const auto& [key, members] : groups) {
    ConfigSummary s;
    s.method = static_cast<Method>(std::get<0>(key));
    s.beta = std::get<1>(key);
    s.delta = std::get<2>(key);
    s.gamma = std::get<3>(key);
    s.runs = members.size();
    std::vector<double> iters;
    double iter_sum = 0.0;
    double resid_sum = 0.0;
    for (const ResultRow* r : members) {
      if (r->status == "converged") ++s.converged;
      iters.push_back(static_cast<double>(r->k));
      iter_sum += static_cast<double>(r->k);
      resid_sum += r->residual_norm;
    }
    std::sort(iters.begin(), iters.end());
    const std::size_t mid = iters.size() / 2;
    s.median_iterations = iters.size() % 2 == 1
                              ? iters[mid]
                              : 0.5 * (iters[mid - 1] + iters[mid]);
    s.mean_iterations = iter_sum / static_cast<double>(iters.size());
    s.mean_residual = resid_sum / static_cast<double>(iters.size());
    out.push_back(s);
  }
  return out;
}

}  // namespace kmfeas
