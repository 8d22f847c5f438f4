// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT

#include "kmfeas/solvers.hpp"

#include <cmath>
#include <utility>

#include "kmfeas/errors.hpp"

namespace kmfeas {

std::string method_name(Method m) {
  switch (m) {
    case Method::skm: return "skm";
    case Method::mskm: return "mskm";
    case Method::sskm: return "sskm";
  }
  return "skm";
}

Method method_from_name(const std::string& name) {
  if (name == "skm") return Method::skm;
  if (name == "mskm") return Method::mskm;
  if (name == "sskm") return Method::sskm;
  throw parameter_error("unknown method '" + name + "' (expected skm, mskm, or sskm)");
}

std::string run_status_name(RunStatus s) {
  return s == RunStatus::converged ? "converged" : "max_iters";
}

SolverState make_initial_state(DenseVector x0) {
  SolverState s;
  s.x_prev = x0;
  s.x_curr = std::move(x0);
  s.k = 0;
  return s;
}

void validate_params(const FeasibilityProblem& p, const SolverParams& params) {
  if (params.beta < 1 || params.beta > p.m()) {
    throw parameter_error("beta must satisfy 1 <= beta <= m, got beta=" +
                          std::to_string(params.beta) + " with m=" + std::to_string(p.m()));
  }
  if (!(params.delta > 0.0 && params.delta < 2.0)) {
    throw parameter_error("delta must lie in (0, 2), got " + std::to_string(params.delta));
  }
  if (!(params.gamma >= 0.0)) {
    throw parameter_error("gamma must be nonnegative, got " + std::to_string(params.gamma));
  }
  if (params.method == Method::skm && params.gamma != 0.0) {
    throw parameter_error("method skm has no momentum; set gamma=0 or pick mskm/sskm");
  }
  if (!(params.stop.residual_tol >= 0.0)) {
    throw parameter_error("residual tolerance must be nonnegative");
  }
}

namespace {

// Shared projection part of one update. Returns the selected row; fills
// step_scale with delta * r+ / ||a||^2.
std::size_t select_and_scale(const FeasibilityProblem& p, const SolverState& s,
                             const SolverParams& params, SolverContext& ctx,
                             double& step_scale) {
  ctx.sampler.draw(params.beta, ctx.row_rng, ctx.tau_scratch);
  const SampleDraw draw = select_index(p, s.x_curr, ctx.tau_scratch);
  const std::size_t i = *draw.i_star;
  const double* a = p.A.row(i);
  const double r = dot(a, s.x_curr.data(), p.n()) - p.b[i];
  const double rp = r > 0.0 ? r : 0.0;
  step_scale = params.delta * rp / norm2_sq(a, p.n());
  return i;
}

}  // namespace

void step_skm_mskm(const FeasibilityProblem& p, SolverState& s,
                   const SolverParams& params, SolverContext& ctx) {
  double scale = 0.0;
  const std::size_t i = select_and_scale(p, s, params, ctx, scale);
  const double* a = p.A.row(i);
  const double gamma = params.gamma;
  const std::size_t n = p.n();
  // Write the new iterate into the x_prev buffer (each slot is read before
  // it is written), then swap roles.
  for (std::size_t j = 0; j < n; ++j) {
    s.x_prev[j] =
        (s.x_curr[j] - scale * a[j]) + gamma * (s.x_curr[j] - s.x_prev[j]);
  }
  std::swap(s.x_prev, s.x_curr);
  ++s.k;
}

void step_sskm(const FeasibilityProblem& p, SolverState& s,
               const SolverParams& params, SolverContext& ctx) {
  double scale = 0.0;
  const std::size_t i = select_and_scale(p, s, params, ctx, scale);
  const double* a = p.A.row(i);
  const std::size_t n = p.n();
  const std::size_t jk = static_cast<std::size_t>(ctx.coord_rng.next_below(n));
  // Capture the momentum difference before the buffer is overwritten.
  const double momentum = params.gamma * (s.x_curr[jk] - s.x_prev[jk]);
  for (std::size_t j = 0; j < n; ++j) {
    s.x_prev[j] = s.x_curr[j] - scale * a[j];
  }
  s.x_prev[jk] += momentum;
  std::swap(s.x_prev, s.x_curr);
  ++s.k;
}

void step(const FeasibilityProblem& p, SolverState& s,
          const SolverParams& params, SolverContext& ctx) {
  if (params.method == Method::sskm) {
    step_sskm(p, s, params, ctx);
  } else {
    step_skm_mskm(p, s, params, ctx);
  }
}

DenseVector sskm_momentum_increment(const DenseVector& x_curr,
                                    const DenseVector& x_prev, double gamma,
                                    std::size_t j) {
  if (x_curr.size() != x_prev.size()) {
    throw dimension_error("sskm_momentum_increment: iterate lengths differ");
  }
  if (j >= x_curr.size()) {
    throw dimension_error("sskm_momentum_increment: coordinate out of range");
  }
  DenseVector inc(x_curr.size(), 0.0);
  inc[j] = gamma * (x_curr[j] - x_prev[j]);
  return inc;
}

namespace {

struct MetricsScratch {
  DenseVector rplus;
};

TraceRecord evaluate_record(const FeasibilityProblem& p, const DenseVector& x,
                            std::size_t k, const SolverParams& params,
                            const TraceConfig& cfg, const CesaroAccumulator* acc,
                            MetricsScratch& scratch) {
  TraceRecord rec;
  rec.k = k;
  scratch.rplus = positive_residual(p, x);
  rec.residual_norm = norm2(scratch.rplus);
  std::size_t satisfied = 0;
  for (double v : scratch.rplus) {
    if (v <= 0.0) ++satisfied;
  }
  rec.fsc = static_cast<double>(satisfied) / static_cast<double>(p.m());
  if (cfg.record_f) rec.f = f_value(p, x, params.beta);
  if (cfg.record_dist) {
    const ProjectionOracle oracle = cfg.oracle.value_or(ProjectionOracle{});
    rec.dist = distance_to_polyhedron(p, x, oracle);
  }
  if (cfg.record_cesaro_f && acc != nullptr && acc->count() > 0) {
    rec.cesaro_f = f_value(p, acc->mean(), params.beta);
  }
  return rec;
}

}  // namespace

Trace run(const FeasibilityProblem& p, const DenseVector& x0,
          const SolverParams& params, const TraceConfig& trace_cfg) {
  if (x0.size() != p.n()) {
    throw dimension_error("run: x0 has length " + std::to_string(x0.size()) +
                          ", expected " + std::to_string(p.n()));
  }
  if (trace_cfg.stride == 0) throw parameter_error("trace stride must be >= 1");
  validate_params(p, params);

  FeasibilityProblem normalized_storage;
  if (!p.normalized) normalized_storage = normalize_rows(p);
  const FeasibilityProblem& prob = p.normalized ? p : normalized_storage;

  SolverState state = make_initial_state(x0);
  SolverContext ctx(prob.m(), params.seed);
  CesaroAccumulator cesaro;
  MetricsScratch scratch;

  Trace trace;
  TraceRecord start = evaluate_record(prob, state.x_curr, 0, params, trace_cfg,
                                      nullptr, scratch);
  const double r0 = start.residual_norm;
  if (trace_cfg.record_cesaro_f) start.cesaro_f = f_value(prob, state.x_curr, params.beta);
  trace.records.push_back(start);

  const double threshold = params.stop.relative
                               ? params.stop.residual_tol * r0
                               : params.stop.residual_tol;
  if (r0 <= threshold) {
    trace.status = RunStatus::converged;
    trace.iterations = 0;
    trace.final_residual = r0;
    return trace;
  }

  const std::size_t max_iters = params.stop.max_iters;
  double last_residual = r0;
  for (std::size_t k = 1; k <= max_iters; ++k) {
    if (trace_cfg.record_cesaro_f) cesaro.add(state.x_curr);
    step(prob, state, params, ctx);
    if (!all_finite(state.x_curr)) {
      throw divergence_error("iterate became non-finite at step " + std::to_string(k),
                             state.x_prev, k);
    }
    const bool at_stride = (k % trace_cfg.stride == 0);
    if (!at_stride && k != max_iters) continue;

    TraceRecord rec = evaluate_record(prob, state.x_curr, k, params, trace_cfg,
                                      &cesaro, scratch);
    last_residual = rec.residual_norm;
    trace.records.push_back(std::move(rec));
    if (last_residual <= threshold) {
      trace.status = RunStatus::converged;
      trace.iterations = k;
      trace.final_residual = last_residual;
      return trace;
    }
  }
  trace.status = RunStatus::max_iters;
  trace.iterations = max_iters;
  trace.final_residual = last_residual;
  return trace;
}

DenseVector cesaro_average(const std::vector<DenseVector>& iterates,
                           std::size_t start) {
  if (start >= iterates.size()) {
    throw parameter_error("cesaro_average: empty iterate range");
  }
  CesaroAccumulator acc;
  for (std::size_t i = start; i < iterates.size(); ++i) acc.add(iterates[i]);
  return acc.mean();
}

void CesaroAccumulator::add(const DenseVector& x) {
  if (count_ == 0) {
    sum_ = x;
  } else {
    if (x.size() != sum_.size()) {
      throw dimension_error("CesaroAccumulator: iterate length changed");
    }
    for (std::size_t i = 0; i < sum_.size(); ++i) sum_[i] += x[i];
  }
  ++count_;
}

DenseVector CesaroAccumulator::mean() const {
  if (count_ == 0) throw parameter_error("CesaroAccumulator: no iterates added");
  DenseVector out = sum_;
  const double inv = 1.0 / static_cast<double>(count_);
  for (double& v : out) v *= inv;
  return out;
}

}  // namespace kmfeas
