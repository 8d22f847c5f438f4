// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT
//
// The iteration family. One update step, from iterate x_k with predecessor
// x_{k-1} (x_1 = x_0):
//
//   draw a uniform beta-subset tau, pick i* = argmax positive residual,
//   x_{k+1} = x_k - delta * (a_{i*}^T x_k - b_{i*})+ / ||a_{i*}||^2 * a_{i*}
//             + momentum
//
// where momentum is gamma * (x_k - x_{k-1}) for the heavy-ball variant and
// gamma * (x_k - x_{k-1})_{j_k} e_{j_k} (one uniformly random coordinate)
// for the stochastic variant. gamma = 0 recovers the plain method; beta = 1
// is randomized projection onto a single row; beta = m is the deterministic
// max-violation rule.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kmfeas/linalg.hpp"
#include "kmfeas/problem.hpp"
#include "kmfeas/rng.hpp"
#include "kmfeas/sampling.hpp"

namespace kmfeas {

enum class Method { skm, mskm, sskm };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

// Stop when the positive-residual norm ||(Ax - b)+||_2 falls to the
// threshold: residual_tol absolutely, or residual_tol * ||(Ax0 - b)+||_2
// when relative is set.
struct StoppingRule {
  double residual_tol = 1e-5;
  std::size_t max_iters = 500000;
  bool relative = false;
};

struct SolverParams {
  Method method = Method::skm;
  std::size_t beta = 1;
  double delta = 1.0;   // projection relaxation, 0 < delta < 2
  double gamma = 0.0;   // momentum weight, >= 0
  double t_aux = 1.0;   // auxiliary split parameter used by the rate bounds
  std::uint64_t seed = 0;
  StoppingRule stop;
};

// Current and previous iterate plus the count of update steps applied.
struct SolverState {
  DenseVector x_curr;
  DenseVector x_prev;
  std::size_t k = 0;
};

SolverState make_initial_state(DenseVector x0);

// Per-run randomness: row sampling and coordinate choice consume disjoint
// streams, so enabling the coordinate stream never perturbs row draws (a
// gamma = 0 stochastic-momentum run replays the plain run byte for byte).
struct SolverContext {
  SubsetSampler sampler;
  Rng row_rng;
  Rng coord_rng;
  std::vector<std::size_t> tau_scratch;

  SolverContext(std::size_t m, std::uint64_t seed)
      : sampler(m), row_rng(seed, 0), coord_rng(seed, 1) {}
};

// Parameter checks shared by the steppers and run(): beta range, delta in
// (0, 2), gamma >= 0, and method skm demands gamma == 0.
void validate_params(const FeasibilityProblem& p, const SolverParams& params);

// One update of the plain / heavy-ball method (they share the formula;
// gamma = 0 adds a signed zero per coordinate, which IEEE addition drops).
void step_skm_mskm(const FeasibilityProblem& p, SolverState& s,
                   const SolverParams& params, SolverContext& ctx);

// One update of the stochastic-momentum method.
void step_sskm(const FeasibilityProblem& p, SolverState& s,
               const SolverParams& params, SolverContext& ctx);

// Dispatch on params.method.
void step(const FeasibilityProblem& p, SolverState& s,
          const SolverParams& params, SolverContext& ctx);

// The stochastic momentum term as a full vector: zero except coordinate j,
// which carries gamma * (x_curr[j] - x_prev[j]). Exposed so tests can
// average it over all coordinate choices.
DenseVector sskm_momentum_increment(const DenseVector& x_curr,
                                    const DenseVector& x_prev, double gamma,
                                    std::size_t j);

enum class RunStatus { converged, max_iters };

std::string run_status_name(RunStatus s);

// One metrics row. k counts update steps; k = 0 is the start point.
// Optional fields are present only when their metric was requested.
struct TraceRecord {
  std::size_t k = 0;
  double residual_norm = 0.0;
  double fsc = 0.0;
  std::optional<double> f;
  std::optional<double> dist;
  std::optional<double> cesaro_f;
};

struct Trace {
  std::vector<TraceRecord> records;
  RunStatus status = RunStatus::max_iters;
  std::size_t iterations = 0;      // update steps applied when the run ended
  double final_residual = 0.0;
};

// Metrics are evaluated (and the stopping rule tested) every stride steps;
// the final step of a run is always recorded. dist requires an oracle.
// cesaro_f reports f at the running mean of iterates x_0 .. x_{k-1}.
struct TraceConfig {
  std::size_t stride = 1;
  bool record_f = false;
  bool record_dist = false;
  bool record_cesaro_f = false;
  std::optional<ProjectionOracle> oracle;
};

// Full solve. Rows are normalized internally when needed (the returned
// metrics always refer to the normalized system). Throws divergence_error
// if an iterate stops being finite.
Trace run(const FeasibilityProblem& p, const DenseVector& x0,
          const SolverParams& params, const TraceConfig& trace = {});

// Mean of iterates[start .. end). Errors on an empty range.
DenseVector cesaro_average(const std::vector<DenseVector>& iterates,
                           std::size_t start = 0);

// Streaming mean with O(n) state.
class CesaroAccumulator {
 public:
  void add(const DenseVector& x);
  std::size_t count() const { return count_; }
  // Mean of everything added so far. Errors when empty.
  DenseVector mean() const;

 private:
  DenseVector sum_;
  std::size_t count_ = 0;
};

}  // namespace kmfeas
