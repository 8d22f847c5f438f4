// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT
//
// Acceptance harness: one self-contained check per release criterion,
// printing exactly one [PASS] / [FAIL] line each. The process exit code is
// the number of failed criteria. An optional argv[1] selects a single
// criterion by its C-id.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "kmfeas/bench.hpp"
#include "kmfeas/csv.hpp"
#include "kmfeas/instances.hpp"
#include "kmfeas/linalg.hpp"
#include "kmfeas/problem.hpp"
#include "kmfeas/rng.hpp"
#include "kmfeas/sampling.hpp"
#include "kmfeas/solvers.hpp"
#include "kmfeas/theory.hpp"

using namespace kmfeas;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(6);
  ss << v;
  return ss.str();
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

FeasibilityProblem normalized_gaussian(std::size_t m, std::size_t n,
                                       std::uint64_t seed) {
  RandomSpec spec;
  spec.kind = RandomKind::gaussian;
  spec.m = m;
  spec.n = n;
  spec.seed = seed;
  return normalize_rows(gen_random(spec).problem);
}

// The shared rate-verification instance: 200 x 20 Gaussian rows around a
// feasible witness, row-normalized, solved from a constant start point.
constexpr std::uint64_t kRateSeed = 20260815;

struct RateBench {
  FeasibilityProblem p;
  DenseVector x0;
  double d0 = 0.0;
  SpectralConstants sc1;  // constants at beta = 1

  RateBench()
      : p(normalized_gaussian(200, 20, kRateSeed)),
        x0(20, 25.0),
        sc1(spectral_constants(p.A, 1)) {
    ProjectionOracle oracle;
    d0 = distance_to_polyhedron(p, x0, oracle);
  }
};

const RateBench& rate_bench() {
  static RateBench bench;
  return bench;
}

// Distance snapshots of one trajectory at the given ascending checkpoints.
std::vector<double> checkpoint_distances(const FeasibilityProblem& p,
                                         const DenseVector& x0,
                                         const SolverParams& params,
                                         const std::vector<std::size_t>& ks) {
  ProjectionOracle oracle;
  SolverState s = make_initial_state(x0);
  SolverContext ctx(p.m(), params.seed);
  std::vector<double> out;
  std::size_t next = 0;
  for (std::size_t k = 1; k <= ks.back(); ++k) {
    step(p, s, params, ctx);
    if (k == ks[next]) {
      out.push_back(distance_to_polyhedron(p, s.x_curr, oracle));
      ++next;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome c01_sampling_oracle() {
  Rng rng(101);
  double worst_f = 0.0, worst_g = 0.0;
  for (std::size_t m = 1; m <= 10; ++m) {
    auto p = normalized_gaussian(m, 3, 300 + m);
    for (std::size_t beta = 1; beta <= m; ++beta) {
      for (int rep = 0; rep < 50; ++rep) {
        DenseVector x(3);
        for (auto& v : x) v = 2.0 * rng.next_gaussian();
        auto oracle = brute_force_expectation(p, x, beta);
        worst_f = std::max(worst_f, std::fabs(f_value(p, x, beta) - oracle.f_value));
        auto g = grad_f(p, x, beta);
        for (std::size_t j = 0; j < 3; ++j)
          worst_g = std::max(worst_g, std::fabs(g[j] - oracle.grad[j]));
      }
    }
  }
  bool pass = worst_f <= 1e-12 && worst_g <= 1e-12;
  return {pass, "max |f - oracle| = " + fmt(worst_f) +
                    ", max |grad - oracle| = " + fmt(worst_g) +
                    " over m <= 10, all beta, 50 points each (tol 1e-12)"};
}

Outcome c02_gradient_fd() {
  auto p = normalized_gaussian(8, 4, 555);
  Rng rng(202);
  const double h = 1e-6;
  double worst = 0.0;
  int tested = 0;
  for (int attempt = 0; attempt < 100000 && tested < 100; ++attempt) {
    DenseVector x(4);
    for (auto& v : x) v = 5.0 * rng.next_gaussian();
    DenseVector raw = matvec(p.A, x);
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] -= p.b[i];
    bool ok = true;
    std::vector<double> pos;
    for (double v : raw) {
      if (std::fabs(v) <= 1e-3) ok = false;
      if (v > 0.0) pos.push_back(v);
    }
    std::sort(pos.begin(), pos.end());
    for (std::size_t i = 1; i < pos.size(); ++i)
      if (pos[i] - pos[i - 1] < 1e-4) ok = false;
    if (!ok || pos.empty()) continue;
    ++tested;
    for (std::size_t beta : {std::size_t{1}, std::size_t{4}, std::size_t{8}}) {
      auto g = grad_f(p, x, beta);
      for (std::size_t j = 0; j < 4; ++j) {
        DenseVector xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        double fd = (f_value(p, xp, beta) - f_value(p, xm, beta)) / (2.0 * h);
        worst = std::max(worst, std::fabs(fd - g[j]) / std::max(1.0, std::fabs(g[j])));
      }
    }
  }
  bool pass = tested == 100 && worst <= 1e-5;
  return {pass, "max relative gap " + fmt(worst) + " at " + std::to_string(tested) +
                    " tie-free points, central step 1e-6 (tol 1e-5)"};
}

Outcome c03_sample_matrix_spectrum() {
  Rng rng(303);
  double min_w = 1.0, max_w = 0.0, min_diff = 1.0;
  for (int inst = 0; inst < 30; ++inst) {
    auto p = normalized_gaussian(6, 3, 900 + inst);
    DenseVector x(3);
    for (auto& v : x) v = 2.0 + rng.next_gaussian();
    auto g = gram(p.A);
    for (std::size_t beta = 1; beta <= 6; ++beta) {
      auto rep = brute_force_expectation(p, x, beta);
      auto eig = sym_eig(rep.W);
      min_w = std::min(min_w, eig.eigenvalues.front());
      max_w = std::max(max_w, eig.eigenvalues.back());
      DenseMatrix diff(3, 3, 0.0);
      const double scale = static_cast<double>(beta) / 6.0;
      for (std::size_t i = 0; i < 9; ++i)
        diff.data[i] = scale * g.data[i] - rep.W.data[i];
      min_diff = std::min(min_diff, sym_eig(diff).eigenvalues.front());
    }
  }
  bool pass = min_w >= -1e-10 && max_w <= 1.0 + 1e-10 && min_diff >= -1e-10;
  return {pass, "W spectrum in [" + fmt(min_w) + ", " + fmt(max_w) +
                    "], min eig of (beta/m) A^T A - W = " + fmt(min_diff) +
                    " over 30 instances, all beta (floor -1e-10)"};
}

Outcome c04_sandwich() {
  Rng rng(404);
  double worst_lo = 0.0, worst_hi = 0.0;  // positive = violation
  for (std::size_t n : {std::size_t{2}, std::size_t{3}, std::size_t{5}}) {
    // Axis-aligned box with one face per coordinate (the open sides are at
    // infinity), so each coordinate appears in exactly one unit row and the
    // spectral surrogate of the Hoffman constant is exact for this geometry.
    FeasibilityProblem p;
    p.A = DenseMatrix(n, n, 0.0);
    p.b = DenseVector(n);
    for (std::size_t j = 0; j < n; ++j) {
      const bool upper = j % 2 == 0;
      p.A.at(j, j) = upper ? 1.0 : -1.0;
      p.b[j] = upper ? 1.0 + 0.25 * static_cast<double>(j)
                     : 0.5 * static_cast<double>(j);
    }
    p.normalized = true;
    ProjectionOracle box;
    box.kind = ProjectionKind::exact_box;
    for (std::size_t beta : {std::size_t{1}, (n + 1) / 2, n}) {
      auto sc = spectral_constants(p.A, beta);
      for (int rep = 0; rep < 100; ++rep) {
        DenseVector x(n);
        for (auto& v : x) v = 6.0 * rng.next_gaussian();
        double d = distance_to_polyhedron(p, x, box);
        double f = f_value(p, x, beta);
        worst_lo = std::max(worst_lo, 0.5 * sc.mu1 * d * d - f);
        worst_hi = std::max(worst_hi, f - 0.5 * sc.mu2 * d * d);
      }
    }
  }
  bool pass = worst_lo <= 1e-12 && worst_hi <= 1e-12;
  return {pass, "max lower-side violation " + fmt(worst_lo) +
                    ", max upper-side violation " + fmt(worst_hi) +
                    " across box instances (slack 1e-12)"};
}

Outcome c05_plain_mean_square_rate() {
  const auto& bench = rate_bench();
  const std::vector<std::size_t> ks{10, 50, 200};
  const double d0_sq = bench.d0 * bench.d0;
  double worst_ratio = 0.0;
  std::string at;
  for (double delta : {0.5, 1.0, 1.5}) {
    const double h = h_delta(delta, bench.sc1.mu1);
    for (std::size_t beta : {std::size_t{1}, std::size_t{5}, std::size_t{20}}) {
      std::vector<double> sum_sq(ks.size(), 0.0);
      for (int trial = 0; trial < 200; ++trial) {
        SolverParams params;
        params.method = Method::skm;
        params.beta = beta;
        params.delta = delta;
        params.seed = 7000 + static_cast<std::uint64_t>(trial);
        auto d = checkpoint_distances(bench.p, bench.x0, params, ks);
        for (std::size_t i = 0; i < ks.size(); ++i) sum_sq[i] += d[i] * d[i];
      }
      for (std::size_t i = 0; i < ks.size(); ++i) {
        double mean = sum_sq[i] / 200.0;
        double bound = 1.05 * std::pow(h, static_cast<double>(ks[i])) * d0_sq;
        double ratio = mean / bound;
        if (ratio > worst_ratio) {
          worst_ratio = ratio;
          at = "delta=" + fmt(delta) + " beta=" + std::to_string(beta) +
               " k=" + std::to_string(ks[i]);
        }
      }
    }
  }
  return {worst_ratio <= 1.0,
          "max mean d^2 over 1.05 h^k d0^2 = " + fmt(worst_ratio) + " at " + at +
              " (200 trials per configuration)"};
}

Outcome c06_momentum_mean_rate() {
  const auto& bench = rate_bench();
  RegionQuery q;
  q.n = 1;
  q.delta = 0.5;
  q.gamma = 0.05;
  q.t_aux = 1.0;
  q.mu1 = bench.sc1.mu1;
  q.mu2 = bench.sc1.mu2;
  if (!region_Q(q))
    return {false, "(delta=0.5, gamma=0.05) is outside the mean-contraction "
                   "region; cap = " + fmt(region_Q_gamma_bound(q))};
  auto rate = rate_l1(q);
  const std::vector<std::size_t> ks{10, 50, 200};
  std::vector<double> sum_d(ks.size(), 0.0);
  for (int trial = 0; trial < 200; ++trial) {
    SolverParams params;
    params.method = Method::mskm;
    params.beta = 1;
    params.delta = 0.5;
    params.gamma = 0.05;
    params.seed = 8000 + static_cast<std::uint64_t>(trial);
    auto d = checkpoint_distances(bench.p, bench.x0, params, ks);
    for (std::size_t i = 0; i < ks.size(); ++i) sum_d[i] += d[i];
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    double mean = sum_d[i] / 200.0;
    double bound = 1.05 * std::pow(rate.rho2, static_cast<double>(ks[i])) * bench.d0;
    worst = std::max(worst, mean / bound);
  }
  return {worst <= 1.0, "momentum cap " + fmt(region_Q_gamma_bound(q)) +
                            " admits gamma=0.05; rho2 = " + fmt(rate.rho2) +
                            "; max mean d over 1.05 rho2^k d0 = " + fmt(worst)};
}

Outcome c07_momentum_mean_square_rate() {
  const auto& bench = rate_bench();
  RegionQuery q;
  q.n = 1;
  q.delta = 0.5;
  q.gamma = 0.05;
  q.t_aux = 1.0;
  q.mu1 = bench.sc1.mu1;
  q.mu2 = bench.sc1.mu2;
  if (!region_RS(q))
    return {false, "(delta=0.5, gamma=0.05, t=1) is outside the mean-square region"};
  auto rate = rate_l2(q);
  const std::vector<std::size_t> ks{10, 50, 200};
  std::vector<double> sum_sq(ks.size(), 0.0);
  for (int trial = 0; trial < 200; ++trial) {
    SolverParams params;
    params.method = Method::mskm;
    params.beta = 1;
    params.delta = 0.5;
    params.gamma = 0.05;
    params.t_aux = 1.0;
    params.seed = 9000 + static_cast<std::uint64_t>(trial);
    auto d = checkpoint_distances(bench.p, bench.x0, params, ks);
    for (std::size_t i = 0; i < ks.size(); ++i) sum_sq[i] += d[i] * d[i];
  }
  double worst = 0.0;
  const double d0_sq = bench.d0 * bench.d0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    double mean = sum_sq[i] / 200.0;
    double bound = 1.05 * (1.0 + rate.alpha) *
                   std::pow(rate.rho, static_cast<double>(ks[i])) * d0_sq;
    worst = std::max(worst, mean / bound);
  }
  return {worst <= 1.0, "rho = " + fmt(rate.rho) + ", alpha = " + fmt(rate.alpha) +
                            " (" + rate_l2_case_name(rate.case_tag) +
                            "); max mean d^2 over 1.05 (1+alpha) rho^k d0^2 = " +
                            fmt(worst)};
}

Outcome c08_cesaro_bound() {
  const auto& bench = rate_bench();
  const double delta = 0.5, gamma = 0.3;
  const std::size_t beta = 1;
  const double f0 = f_value(bench.p, bench.x0, beta);
  const double d0_sq = bench.d0 * bench.d0;
  const std::vector<std::size_t> ks{50, 500};
  std::vector<double> sum_f(ks.size(), 0.0);
  for (int trial = 0; trial < 200; ++trial) {
    SolverParams params;
    params.method = Method::mskm;
    params.beta = beta;
    params.delta = delta;
    params.gamma = gamma;
    params.seed = 10000 + static_cast<std::uint64_t>(trial);
    SolverState s = make_initial_state(bench.x0);
    SolverContext ctx(bench.p.m(), params.seed);
    CesaroAccumulator acc;
    std::size_t next = 0;
    for (std::size_t k = 1; k <= ks.back(); ++k) {
      acc.add(s.x_curr);
      step(bench.p, s, params, ctx);
      if (k == ks[next]) {
        sum_f[next] += f_value(bench.p, acc.mean(), beta);
        ++next;
      }
    }
  }
  double worst = 0.0;
  std::string parts;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    CesaroParams c;
    c.delta = delta;
    c.gamma = gamma;
    c.d0_sq = d0_sq;
    c.f0 = f0;
    c.k = ks[i];
    double bound = cesaro_bound(CesaroKind::mskm, c);
    double mean = sum_f[i] / 200.0;
    worst = std::max(worst, mean / bound);
    parts += (i ? ", " : "") + std::string("k=") + std::to_string(ks[i]) + ": " +
             fmt(mean) + " <= " + fmt(bound);
  }
  return {worst <= 1.0, "mean f(averaged iterate) vs bound at " + parts +
                            " (max ratio " + fmt(worst) + ")"};
}

Outcome c09_gamma_zero_reduction() {
  const std::size_t ms[10] = {20, 25, 30, 35, 40, 45, 50, 55, 60, 65};
  const std::size_t ns[10] = {4, 5, 6, 4, 8, 5, 10, 6, 8, 12};
  const double deltas[10] = {0.5, 0.8, 1.0, 1.2, 1.5, 0.7, 0.9, 1.1, 1.3, 1.0};
  int identical = 0;
  for (int cfg = 0; cfg < 10; ++cfg) {
    auto p = normalized_gaussian(ms[cfg], ns[cfg], 4000 + cfg);
    DenseVector x0(ns[cfg], 30.0);
    TraceConfig tc;
    std::string first;
    bool all_equal = true;
    for (Method m : {Method::skm, Method::mskm, Method::sskm}) {
      SolverParams params;
      params.method = m;
      params.beta = 1 + static_cast<std::size_t>(cfg) % ms[cfg];
      params.delta = deltas[cfg];
      params.gamma = 0.0;
      params.seed = 555 + static_cast<std::uint64_t>(cfg);
      params.stop.max_iters = 2000;
      params.stop.residual_tol = 1e-6;
      auto csv = trace_to_csv(run(p, x0, params, tc), tc);
      if (first.empty())
        first = csv;
      else if (csv != first)
        all_equal = false;
    }
    identical += all_equal;
  }
  return {identical == 10, std::to_string(identical) +
                               " of 10 configurations produced byte-identical "
                               "traces for all three methods at gamma = 0"};
}

Outcome c10_coordinate_momentum() {
  Rng rng(1010);
  double worst = 0.0;
  for (std::size_t n = 1; n <= 20; ++n) {
    DenseVector xc(n), xp(n);
    for (auto& v : xc) v = rng.next_gaussian();
    for (auto& v : xp) v = rng.next_gaussian();
    const double gamma = 0.3 + 0.02 * static_cast<double>(n);
    DenseVector avg(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      auto inc = sskm_momentum_increment(xc, xp, gamma, j);
      for (std::size_t i = 0; i < n; ++i) avg[i] += inc[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      double expected = (gamma / static_cast<double>(n)) * (xc[i] - xp[i]);
      worst = std::max(worst, std::fabs(avg[i] / static_cast<double>(n) - expected));
    }
  }
  return {worst <= 1e-14, "max deviation of the coordinate-averaged momentum "
                          "from (gamma/n)(x_k - x_{k-1}) = " + fmt(worst) +
                          " for n <= 20 (tol 1e-14)"};
}

Outcome c11_momentum_speedup() {
  RandomSpec spec;
  spec.kind = RandomKind::correlated;
  spec.m = 1000;
  spec.n = 100;
  spec.seed = 777;
  auto p = normalize_rows(gen_random(spec).problem);
  DenseVector x0(100, 5.0);

  auto run_iters = [&](double gamma, Method method, std::uint64_t seed) {
    SolverParams params;
    params.method = method;
    params.beta = 50;
    params.delta = 0.5;
    params.gamma = gamma;
    params.seed = seed;
    params.stop.residual_tol = 1e-5;
    params.stop.max_iters = 400000;
    auto t = run(p, x0, params);
    return static_cast<double>(t.iterations);
  };

  std::vector<double> plain, momentum;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    plain.push_back(run_iters(0.0, Method::skm, seed));
    momentum.push_back(run_iters(0.4, Method::mskm, seed));
  }
  double med_plain = median_of(plain);
  double med_momentum = median_of(momentum);
  return {med_momentum < med_plain,
          "median iterations to 1e-5 over 10 seeds: momentum " + fmt(med_momentum) +
              " vs plain " + fmt(med_plain)};
}

Outcome c12_certificate_arithmetic() {
  CertificateInputs c;
  c.sigma = 10.0;
  c.n = 2;
  c.alpha = 0.0;
  c.rho_bar = 0.25;
  auto rep = certificate_bound(c, 40);
  double err_k = std::fabs(rep.min_k - 17.5) / 17.5;
  double err_p = std::fabs(rep.p_bound - 1.6858739404357614e-07) / 1.6858739404357614e-07;

  // Zero-momentum reduction: the probability bound must equal the explicit
  // closed form sqrt(1/n) 2^(2 sigma - 2) h^(k/2) across a grid.
  double err_grid = 0.0;
  for (double sigma : {6.0, 12.0, 20.0}) {
    for (std::size_t n : {std::size_t{1}, std::size_t{3}, std::size_t{8}}) {
      for (double delta : {0.5, 1.0, 1.5}) {
        const double h = h_delta(delta, 0.2);
        CertificateInputs g;
        g.sigma = sigma;
        g.n = n;
        g.rho_bar = h;
        for (std::size_t k : {std::size_t{10}, std::size_t{60}, std::size_t{240}}) {
          double expected = std::sqrt(1.0 / static_cast<double>(n)) *
                            std::pow(2.0, 2.0 * sigma - 2.0) * std::pow(h, k / 2.0);
          double got = certificate_bound(g, k).p_bound;
          err_grid = std::max(err_grid, std::fabs(got - expected) / expected);
        }
      }
    }
  }
  bool pass = err_k <= 1e-12 && err_p <= 1e-12 && err_grid <= 1e-12;
  return {pass, "min_k rel err " + fmt(err_k) + ", p(40) rel err " + fmt(err_p) +
                    ", zero-momentum grid rel err " + fmt(err_grid) +
                    " (tol 1e-12)"};
}

Outcome c13_infeasibility_floor() {
  // Infeasible gap {x <= 0, x >= 1}; the max violation can never drop below
  // the encoding floor for rational data.
  FeasibilityProblem p;
  p.A = DenseMatrix(2, 1, 0.0);
  p.A.at(0, 0) = 1.0;
  p.A.at(1, 0) = -1.0;
  p.b = DenseVector{0.0, -1.0};
  const double sigma = encoding_length(p);
  const double floor = std::pow(2.0, 1.0 - sigma);
  auto pn = normalize_rows(p);

  SolverParams params;
  params.method = Method::skm;
  params.beta = 1;
  params.delta = 1.0;
  params.seed = 3;
  SolverState s = make_initial_state(DenseVector{0.5});
  SolverContext ctx(2, params.seed);
  double min_theta = theta_max_violation(pn, s.x_curr);
  for (int k = 0; k < 10000; ++k) {
    step_skm_mskm(pn, s, params, ctx);
    min_theta = std::min(min_theta, theta_max_violation(pn, s.x_curr));
  }
  return {min_theta >= floor,
          "min theta over 10,000 steps = " + fmt(min_theta) +
              " >= detection floor 2^(1-sigma) = " + fmt(floor) +
              " (sigma = " + fmt(sigma) + ")"};
}

Outcome c14_sweep_determinism() {
  RandomSpec spec;
  spec.kind = RandomKind::correlated;
  spec.m = 1000;
  spec.n = 100;
  spec.seed = 777;
  auto p = normalize_rows(gen_random(spec).problem);

  ExperimentPlan plan;
  plan.methods = {Method::skm, Method::mskm};
  plan.betas = {50};
  plan.deltas = {0.5};
  plan.gammas = {0.0, 0.4};
  plan.trials = 10;
  plan.base_seed = 1;
  plan.stop.residual_tol = 1e-5;
  plan.stop.max_iters = 400000;
  plan.stride = 25;
  plan.x0 = DenseVector(100, 5.0);

  auto first = sweep_to_csv(run_sweep(p, plan, 4));
  auto second = sweep_to_csv(run_sweep(p, plan, 2));
  bool pass = first == second && !first.empty();
  return {pass, std::to_string(plan_run_count(plan)) + "-run sweep emitted " +
                    std::to_string(first.size()) +
                    " CSV bytes; repeat invocation " +
                    (pass ? "matched byte for byte" : "DIFFERED")};
}

struct Criterion {
  const char* id;
  const char* name;
  Outcome (*fn)();
};

const Criterion kCriteria[] = {
    {"C01", "sampling-oracle-equivalence", c01_sampling_oracle},
    {"C02", "gradient-finite-difference", c02_gradient_fd},
    {"C03", "sample-matrix-spectrum", c03_sample_matrix_spectrum},
    {"C04", "objective-distance-sandwich", c04_sandwich},
    {"C05", "plain-mean-square-rate", c05_plain_mean_square_rate},
    {"C06", "momentum-mean-rate", c06_momentum_mean_rate},
    {"C07", "momentum-mean-square-rate", c07_momentum_mean_square_rate},
    {"C08", "cesaro-objective-bound", c08_cesaro_bound},
    {"C09", "gamma-zero-reduction", c09_gamma_zero_reduction},
    {"C10", "coordinate-momentum-expectation", c10_coordinate_momentum},
    {"C11", "momentum-speedup", c11_momentum_speedup},
    {"C12", "certificate-arithmetic", c12_certificate_arithmetic},
    {"C13", "infeasibility-floor", c13_infeasibility_floor},
    {"C14", "sweep-determinism", c14_sweep_determinism},
};

}  // namespace

int main(int argc, char** argv) {
  int failures = 0;
  bool matched = false;
  for (const auto& c : kCriteria) {
    if (argc > 1 && std::strcmp(argv[1], c.id) != 0) continue;
    matched = true;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("unexpected exception: ") + e.what()};
    }
    const std::chrono::duration<double> secs =
        std::chrono::steady_clock::now() - start;
    std::printf("[%s] %s %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", c.id,
                c.name, secs.count(), o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  if (argc > 1 && !matched) {
    std::fprintf(stderr, "unknown criterion id '%s'\n", argv[1]);
    return 64;
  }
  return failures;
}
