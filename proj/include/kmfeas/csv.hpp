// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT
//
// CSV emission for traces and sweep results. Schemas are versioned in a
// leading comment line so downstream plotting can detect drift. All floats
// are written in shortest round-trip form, which keeps equal runs
// byte-identical.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmfeas/solvers.hpp"

namespace kmfeas {

// Shortest decimal string that parses back to exactly v.
std::string format_double(double v);

// Trace schema "# kmfeas-trace v1": columns k, residual_norm, fsc, then
// f / dist / cesaro_f in that order for each metric the config enabled.
std::string trace_to_csv(const Trace& trace, const TraceConfig& cfg);

// One sweep result. Optional metrics print as empty cells; cpu_seconds is
// populated only when timing was requested (wall time is nondeterministic,
// and the default schema must be byte-stable).
struct ResultRow {
  std::size_t run_id = 0;
  std::size_t trial = 0;
  Method method = Method::skm;
  std::size_t beta = 1;
  double delta = 1.0;
  double gamma = 0.0;
  std::size_t k = 0;
  std::optional<double> cpu_seconds;
  double residual_norm = 0.0;
  double fsc = 0.0;
  std::optional<double> dist_to_p;
  std::optional<double> f_value;
  std::string status;  // converged | max_iters | error:<kind>
};

// Sweep schema "# kmfeas-sweep v1": run_id, trial, method, beta, delta,
// gamma, k, cpu_seconds, residual_norm, fsc, dist_to_P, f_value, status.
std::string sweep_to_csv(const std::vector<ResultRow>& rows);

}  // namespace kmfeas
