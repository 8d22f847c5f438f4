// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT
//
// Command-line driver. Subcommands:
//   generate  write a random / LP-derived problem file
//   solve     run one configuration, optionally emitting a metrics trace CSV
//   sweep     grid of (method, beta, delta, gamma) x trials -> results CSV
//   rates     evaluate the convergence-rate reports for given parameters
//   certify   encoding-length feasibility certificate table
//
// Exit codes: 0 ok; 1 parameter-region violation under --strict; 2 I/O or
// parse failure; 3 divergence; 4 invalid configuration. KMFEAS_THREADS caps
// the sweep worker pool.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kmfeas/bench.hpp"
#include "kmfeas/csv.hpp"
#include "kmfeas/errors.hpp"
#include "kmfeas/instances.hpp"
#include "kmfeas/problem.hpp"
#include "kmfeas/solvers.hpp"
#include "kmfeas/theory.hpp"

namespace {

using namespace kmfeas;

constexpr int kExitOk = 0;
constexpr int kExitRegion = 1;
constexpr int kExitIo = 2;
constexpr int kExitDivergence = 3;
constexpr int kExitConfig = 4;

std::size_t env_threads() {
  const char* raw = std::getenv("KMFEAS_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;  // auto
  const long v = std::strtol(raw, nullptr, 10);
  if (v < 1) return 0;
  return static_cast<std::size_t>(v);
}

FileFormat parse_format(const std::string& name) {
  if (name == "txt") return FileFormat::txt;
  if (name == "csv") return FileFormat::csv;
  throw parameter_error("unknown format '" + name + "' (expected txt or csv)");
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw io_error("failed writing '" + path + "'");
}

struct MetricsSelection {
  bool f = false;
  bool dist = false;
  bool cesaro = false;
};

MetricsSelection parse_metrics(const std::string& csv_list) {
  MetricsSelection sel;
  std::stringstream ss(csv_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "residual" || item == "fsc") continue;  // always recorded
    if (item == "f") {
      sel.f = true;
    } else if (item == "dist") {
      sel.dist = true;
    } else if (item == "cesaro") {
      sel.cesaro = true;
    } else {
      throw parameter_error("unknown metric '" + item +
                            "' (expected residual, fsc, dist, f, cesaro)");
    }
  }
  return sel;
}

// Shared problem-source flags: a file or a generated instance.
struct ProblemSource {
  std::string path;
  std::string format = "txt";
  std::string random_kind;
  std::size_t m = 0;
  std::size_t n = 0;
  double mix_sigma = 0.5;
  std::uint64_t gen_seed = 0;

  void add_flags(CLI::App* cmd, bool require) {
    auto* p = cmd->add_option("--problem", path, "problem file (Ax <= b)");
    cmd->add_option("--format", format, "problem file format: txt or csv")
        ->check(CLI::IsMember({"txt", "csv"}));
    auto* k = cmd->add_option("--random", random_kind,
                              "generate instead of reading: correlated or gaussian")
                  ->check(CLI::IsMember({"correlated", "gaussian"}));
    cmd->add_option("--m", m, "generated row count");
    cmd->add_option("--n", n, "generated column count");
    cmd->add_option("--mix-sigma", mix_sigma, "witness mix weight in [0, 1]");
    cmd->add_option("--gen-seed", gen_seed, "generation seed");
    p->excludes(k);
    if (require) {
      // one of the two must be given; checked in load()
    }
  }

  FeasibilityProblem load() const {
    if (!path.empty()) return read_problem(path, parse_format(format));
    if (!random_kind.empty()) {
      RandomSpec spec;
      spec.kind = random_kind == "correlated" ? RandomKind::correlated
                                              : RandomKind::gaussian;
      spec.m = m;
      spec.n = n;
      spec.mix_sigma = mix_sigma;
      spec.seed = gen_seed;
      return gen_random(spec).problem;
    }
    throw parameter_error("no problem source: pass --problem FILE or --random KIND");
  }
};

// Report the momentum-region membership; under strict mode a violation is
// fatal. Returns true when (delta, gamma, t) lies in the union of the two
// admissible regions.
bool check_region(const FeasibilityProblem& normalized, const SolverParams& params,
                  bool verbose) {
  const SpectralConstants sc = spectral_constants(normalized.A, params.beta);
  RegionQuery q;
  q.n = params.method == Method::sskm ? normalized.n() : 1;
  q.delta = params.delta;
  q.gamma = params.gamma;
  q.t_aux = params.t_aux;
  q.mu1 = sc.mu1;
  q.mu2 = sc.mu2;
  const bool in_q = region_Q(q);
  const bool in_rs = region_RS(q);
  if (!in_q && !in_rs && verbose) {
    std::cerr << "warning: (delta=" << params.delta << ", gamma=" << params.gamma
              << ", t=" << params.t_aux << ") lies outside both admissible regions\n"
              << "  mean-contraction cap:        gamma < " << region_Q_gamma_bound(q)
              << " (have gamma=" << params.gamma << ")\n"
              << "  mean-square momentum cap:    gamma < " << region_R_gamma_bound(q)
              << "\n"
              << "  mean-square chain: " << q.gamma * q.mu2 / q.mu1 << " < "
              << 2.0 * static_cast<double>(q.n) / (1.0 + q.t_aux) -
                     static_cast<double>(q.n) * q.delta + q.gamma
              << " <= "
              << (static_cast<double>(q.n) + q.gamma) /
                     (q.delta * q.mu1 * (1.0 + q.t_aux))
              << " must hold\n";
  }
  return in_q || in_rs;
}

std::vector<double> parse_double_list(const std::vector<double>& v, double fallback) {
  if (v.empty()) return {fallback};
  return v;
}

// --- generate ----------------------------------------------------------------

int cmd_generate(const std::string& kind, std::size_t m, std::size_t n,
                 double mix_sigma, std::uint64_t seed, const std::string& from_lp,
                 const std::string& out, const std::string& format,
                 bool normalize) {
  FeasibilityProblem problem;
  if (!from_lp.empty()) {
    problem = lp_to_feasibility(read_lp(from_lp));
  } else {
    RandomSpec spec;
    spec.kind = kind == "correlated" ? RandomKind::correlated : RandomKind::gaussian;
    spec.m = m;
    spec.n = n;
    spec.mix_sigma = mix_sigma;
    spec.seed = seed;
    GeneratedInstance inst = gen_random(spec);
    problem = std::move(inst.problem);
  }
  if (normalize) problem = normalize_rows(problem);
  write_problem(problem, out, parse_format(format));
  std::cout << "wrote " << out << " (" << problem.m() << " x " << problem.n()
            << (problem.normalized ? ", normalized" : "") << ")\n";
  return kExitOk;
}

// --- solve ---------------------------------------------------------------------

int cmd_solve(const ProblemSource& source, SolverParams params, double x0_fill,
              const MetricsSelection& metrics, std::size_t stride,
              const std::string& out, bool strict, bool no_region_check) {
  const FeasibilityProblem raw = source.load();
  const FeasibilityProblem problem = raw.normalized ? raw : normalize_rows(raw);

  if (!no_region_check && (params.gamma > 0.0 || strict)) {
    const bool inside = check_region(problem, params, true);
    if (!inside && strict) {
      std::cerr << "error: --strict demands parameters inside an admissible region\n";
      return kExitRegion;
    }
  }

  TraceConfig cfg;
  cfg.stride = stride;
  cfg.record_f = metrics.f;
  cfg.record_dist = metrics.dist;
  cfg.record_cesaro_f = metrics.cesaro;
  if (metrics.dist) cfg.oracle = ProjectionOracle{};

  const DenseVector x0(problem.n(), x0_fill);
  const auto start = std::chrono::steady_clock::now();
  const Trace trace = run(problem, x0, params, cfg);
  const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;

  std::cout << "method=" << method_name(params.method) << " m=" << problem.m()
            << " n=" << problem.n() << " beta=" << params.beta
            << " delta=" << params.delta << " gamma=" << params.gamma << "\n"
            << "status=" << run_status_name(trace.status)
            << " iterations=" << trace.iterations
            << " residual=" << format_double(trace.final_residual)
            << " wall_seconds=" << wall.count() << "\n";
  if (!out.empty()) {
    write_text_file(out, trace_to_csv(trace, cfg));
    std::cout << "trace written to " << out << "\n";
  }
  return kExitOk;
}

// --- sweep ---------------------------------------------------------------------

int cmd_sweep(const ProblemSource& source, ExperimentPlan plan, double x0_fill,
              const std::string& out, bool strict, bool no_region_check) {
  const FeasibilityProblem raw = source.load();
  const FeasibilityProblem problem = raw.normalized ? raw : normalize_rows(raw);
  plan.x0.assign(problem.n(), x0_fill);

  if (!no_region_check && strict) {
    SolverParams probe;
    probe.t_aux = plan.t_aux;
    for (Method method : plan.methods) {
      for (std::size_t beta : plan.betas) {
        for (double delta : plan.deltas) {
          for (double gamma : plan.gammas) {
            if (method == Method::skm && gamma > 0.0) continue;  // recorded as row error
            probe.method = method;
            probe.beta = beta;
            probe.delta = delta;
            probe.gamma = gamma;
            if (!check_region(problem, probe, true)) {
              std::cerr << "error: --strict demands every grid point inside an "
                           "admissible region\n";
              return kExitRegion;
            }
          }
        }
      }
    }
  }

  const std::vector<ResultRow> rows = run_sweep(problem, plan, env_threads());
  const std::string csv = sweep_to_csv(rows);
  if (out.empty()) {
    std::cout << csv;
  } else {
    write_text_file(out, csv);
  }

  for (const ConfigSummary& s : summarize_sweep(rows)) {
    std::cout << "config method=" << method_name(s.method) << " beta=" << s.beta
              << " delta=" << s.delta << " gamma=" << s.gamma << ": " << s.converged
              << "/" << s.runs << " converged, median_iters=" << s.median_iterations
              << " mean_iters=" << s.mean_iterations
              << " mean_residual=" << s.mean_residual << "\n";
  }
  if (!out.empty()) std::cout << "rows written to " << out << "\n";
  return kExitOk;
}

// --- rates ---------------------------------------------------------------------

int cmd_rates(const ProblemSource& source, const std::string& method_name_str,
              std::size_t beta, std::vector<double> deltas,
              std::vector<double> gammas, double t_aux, const std::string& out) {
  const FeasibilityProblem raw = source.load();
  const FeasibilityProblem problem = raw.normalized ? raw : normalize_rows(raw);
  const Method method = method_from_name(method_name_str);
  const SpectralConstants sc = spectral_constants(problem.A, beta);
  deltas = parse_double_list(deltas, 1.0);
  gammas = parse_double_list(gammas, 0.0);

  std::string csv =
      "# kmfeas-rates v1\n"
      "n,delta,gamma,t,mu1,mu2,in_Q,in_RS,rho1,rho2,l2_case,alpha,rho,valid_l1,"
      "valid_l2\n";
  const bool grid_mode = deltas.size() * gammas.size() > 1 || !out.empty();
  for (double delta : deltas) {
    for (double gamma : gammas) {
      RegionQuery q;
      q.n = method == Method::sskm ? problem.n() : 1;
      q.delta = delta;
      q.gamma = gamma;
      q.t_aux = t_aux;
      q.mu1 = sc.mu1;
      q.mu2 = sc.mu2;
      const bool in_q = region_Q(q);
      const bool in_rs = region_RS(q);
      const RateL1Report l1 = rate_l1(q);
      const RateL2Report l2 = rate_l2(q);
      if (!grid_mode) {
        std::cout << "m=" << sc.m << " n_cols=" << problem.n() << " beta=" << beta
                  << "\n"
                  << "mu1=" << format_double(sc.mu1) << " mu2=" << format_double(sc.mu2)
                  << " h=" << format_double(h_delta(delta, sc.mu1)) << "\n"
                  << "in_Q=" << (in_q ? "yes" : "no")
                  << " gamma_cap_Q=" << format_double(region_Q_gamma_bound(q))
                  << " in_RS=" << (in_rs ? "yes" : "no")
                  << " gamma_cap_R=" << format_double(region_R_gamma_bound(q)) << "\n"
                  << "mean: rho1=" << format_double(l1.rho1)
                  << " rho2=" << format_double(l1.rho2)
                  << " valid=" << (l1.valid ? "yes" : "no") << "\n"
                  << "mean_square: case=" << rate_l2_case_name(l2.case_tag)
                  << " alpha=" << format_double(l2.alpha)
                  << " rho=" << format_double(l2.rho)
                  << " valid=" << (l2.valid ? "yes" : "no") << "\n";
      }
      csv += std::to_string(q.n) + "," + format_double(delta) + "," +
             format_double(gamma) + "," + format_double(t_aux) + "," +
             format_double(sc.mu1) + "," + format_double(sc.mu2) + "," +
             (in_q ? "1" : "0") + "," + (in_rs ? "1" : "0") + "," +
             format_double(l1.rho1) + "," + format_double(l1.rho2) + "," +
             rate_l2_case_name(l2.case_tag) + "," + format_double(l2.alpha) + "," +
             format_double(l2.rho) + "," + (l1.valid ? "1" : "0") + "," +
             (l2.valid ? "1" : "0") + "\n";
    }
  }
  if (!out.empty()) {
    write_text_file(out, csv);
    std::cout << "rates written to " << out << "\n";
  } else if (grid_mode) {
    std::cout << csv;
  }
  return kExitOk;
}

// --- certify ---------------------------------------------------------------------

int cmd_certify(const ProblemSource& source, std::vector<std::size_t> ks,
                double rho_bar, std::size_t beta, double delta, double gamma,
                double t_aux, const std::string& method_name_str,
                const std::string& log_base, const std::string& out) {
  const FeasibilityProblem raw = source.load();
  const double sigma = encoding_length(raw);

  // psi is the largest original row norm; the normalized variant has psi = 1.
  double psi = 0.0;
  for (std::size_t i = 0; i < raw.m(); ++i) {
    psi = std::max(psi, norm2(raw.A.row(i), raw.n()));
  }
  if (raw.normalized) psi = 1.0;

  CertificateInputs inputs;
  inputs.sigma = sigma;
  inputs.n = raw.n();
  inputs.psi = psi;

  if (rho_bar > 0.0) {
    inputs.rho_bar = rho_bar;
    inputs.alpha = 0.0;
  } else {
    const FeasibilityProblem problem = raw.normalized ? raw : normalize_rows(raw);
    const Method method = method_from_name(method_name_str);
    const SpectralConstants sc = spectral_constants(problem.A, beta);
    RegionQuery q;
    q.n = method == Method::sskm ? problem.n() : 1;
    q.delta = delta;
    q.gamma = gamma;
    q.t_aux = t_aux;
    q.mu1 = sc.mu1;
    q.mu2 = sc.mu2;
    const RateL1Report l1 = rate_l1(q);
    const RateL2Report l2 = rate_l2(q);
    // Mean-square contraction per step: the sharper of rho2^2 (mean bound
    // squared) and the direct mean-square rho, when each is admissible.
    double candidate = 2.0;
    if (l1.valid) candidate = std::min(candidate, l1.rho2 * l1.rho2);
    if (l2.valid) candidate = std::min(candidate, l2.rho);
    if (candidate >= 1.0) {
      throw no_certificate_error(
          "no admissible contraction rate at these parameters; certificate unavailable");
    }
    inputs.rho_bar = candidate;
    inputs.alpha = l2.valid ? l2.alpha : 0.0;
  }

  const LogBase base = log_base == "e" ? LogBase::natural : LogBase::two;
  if (ks.empty()) ks = {10, 100, 1000};
  std::sort(ks.begin(), ks.end());

  const CertificateReport first = certificate_bound(inputs, ks.front(), base);
  std::cout << "sigma=" << format_double(sigma) << " psi=" << format_double(inputs.psi)
            << " rho_bar=" << format_double(inputs.rho_bar)
            << " alpha=" << format_double(inputs.alpha) << " log_base=" << log_base
            << "\n"
            << "min_k=" << format_double(first.min_k) << "\n";
  std::string csv = "# kmfeas-certify v1\nk,p_bound,min_k\n";
  for (std::size_t k : ks) {
    const CertificateReport rep = certificate_bound(inputs, k, base);
    std::cout << "k=" << k << " p_bound=" << format_double(rep.p_bound) << "\n";
    csv += std::to_string(k) + "," + format_double(rep.p_bound) + "," +
           format_double(rep.min_k) + "\n";
  }
  if (!out.empty()) {
    write_text_file(out, csv);
    std::cout << "certificate table written to " << out << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kmfeas: randomized projection solvers for linear feasibility"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a problem file");
  std::string gen_kind = "gaussian";
  std::size_t gen_m = 100, gen_n = 10;
  double gen_mix = 0.5;
  std::uint64_t gen_seed = 0;
  std::string gen_from_lp, gen_out, gen_format = "txt";
  bool gen_normalize = false;
  gen->add_option("--kind", gen_kind, "correlated or gaussian")
      ->check(CLI::IsMember({"correlated", "gaussian"}));
  gen->add_option("--m", gen_m, "row count");
  gen->add_option("--n", gen_n, "column count");
  gen->add_option("--mix-sigma", gen_mix, "witness mix weight in [0, 1]");
  gen->add_option("--seed", gen_seed, "generation seed");
  gen->add_option("--from-lp", gen_from_lp, "stack an LP file instead of sampling");
  gen->add_option("--out", gen_out, "output path")->required();
  gen->add_option("--format", gen_format, "txt or csv")
      ->check(CLI::IsMember({"txt", "csv"}));
  gen->add_flag("--normalize", gen_normalize, "normalize rows before writing");

  // shared solver flags
  ProblemSource solve_src, sweep_src, rates_src, certify_src;
  std::string method = "skm";
  std::size_t beta = 1;
  double delta = 1.0, gamma = 0.0, t_aux = 1.0;
  double tol = 1e-5;
  bool rel_tol = false;
  std::size_t max_iters = 500000;
  std::uint64_t seed = 0;
  std::string metrics = "residual,fsc";
  std::size_t stride = 1;
  std::string out;
  bool strict = false, no_region_check = false, times = false;
  double x0_fill = 0.0;

  auto* solve = app.add_subcommand("solve", "run one configuration");
  solve_src.add_flags(solve, true);
  solve->add_option("--method", method, "skm, mskm, or sskm")
      ->check(CLI::IsMember({"skm", "mskm", "sskm"}));
  solve->add_option("--beta", beta, "sample size");
  solve->add_option("--delta", delta, "projection relaxation in (0, 2)");
  solve->add_option("--gamma", gamma, "momentum weight");
  solve->add_option("--t", t_aux, "auxiliary rate-split parameter");
  solve->add_option("--tol", tol, "residual tolerance (default 1e-5)");
  solve->add_flag("--rel-tol", rel_tol, "tolerance relative to the start residual");
  solve->add_option("--max-iters", max_iters, "iteration cap");
  solve->add_option("--seed", seed, "run seed");
  solve->add_option("--metrics", metrics,
                    "comma list of residual,fsc,dist,f,cesaro");
  solve->add_option("--stride", stride, "record/check every s-th step");
  solve->add_option("--x0", x0_fill, "constant fill of the start point");
  solve->add_option("--out", out, "trace CSV path");
  solve->add_flag("--strict", strict, "fail when outside the admissible regions");
  solve->add_flag("--no-region-check", no_region_check,
                  "skip the spectral region check");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "grid of configurations x trials");
  std::vector<std::string> sweep_methods{"skm"};
  std::vector<std::size_t> sweep_betas{1};
  std::vector<double> sweep_deltas{1.0};
  std::vector<double> sweep_gammas{0.0};
  std::size_t trials = 1;
  sweep_src.add_flags(sweep, true);
  sweep->add_option("--method", sweep_methods, "methods in the grid (comma list)")
      ->delimiter(',')
      ->check(CLI::IsMember({"skm", "mskm", "sskm"}));
  sweep->add_option("--beta", sweep_betas, "sample sizes in the grid")->delimiter(',');
  sweep->add_option("--delta", sweep_deltas, "relaxations in the grid")->delimiter(',');
  sweep->add_option("--gamma", sweep_gammas, "momentum weights in the grid")->delimiter(',');
  sweep->add_option("--t", t_aux, "auxiliary rate-split parameter");
  sweep->add_option("--trials", trials, "independent trials per grid point");
  sweep->add_option("--seed", seed, "base seed; run seeds are base + run_id");
  sweep->add_option("--tol", tol, "residual tolerance");
  sweep->add_flag("--rel-tol", rel_tol, "tolerance relative to the start residual");
  sweep->add_option("--max-iters", max_iters, "iteration cap");
  sweep->add_option("--metrics", metrics, "comma list; dist and f recorded per row");
  sweep->add_option("--stride", stride, "stopping-rule check cadence");
  sweep->add_option("--x0", x0_fill, "constant fill of the start point");
  sweep->add_option("--out", out, "results CSV path (stdout when absent)");
  sweep->add_flag("--strict", strict, "fail when a grid point leaves the regions");
  sweep->add_flag("--no-region-check", no_region_check,
                  "skip the spectral region check");
  sweep->add_flag("--times", times,
                  "fill cpu_seconds (makes output machine-dependent)");

  // rates
  auto* rates = app.add_subcommand("rates", "convergence-rate calculator");
  std::vector<double> rate_deltas, rate_gammas;
  rates_src.add_flags(rates, true);
  rates->add_option("--method", method, "skm, mskm, or sskm")
      ->check(CLI::IsMember({"skm", "mskm", "sskm"}));
  rates->add_option("--beta", beta, "sample size");
  rates->add_option("--delta", rate_deltas, "relaxation grid")->delimiter(',');
  rates->add_option("--gamma", rate_gammas, "momentum grid")->delimiter(',');
  rates->add_option("--t", t_aux, "auxiliary rate-split parameter");
  rates->add_option("--out", out, "CSV path for grid mode");

  // certify
  auto* certify = app.add_subcommand("certify", "feasibility certificate table");
  std::vector<std::size_t> cert_ks;
  double cert_rho_bar = 0.0;
  std::string log_base = "2";
  certify_src.add_flags(certify, true);
  certify->add_option("--k", cert_ks, "iteration counts to tabulate")->delimiter(',');
  certify->add_option("--rho-bar", cert_rho_bar,
                      "contraction rate; derived from --method/--beta/--delta/"
                      "--gamma/--t when omitted");
  certify->add_option("--method", method, "skm, mskm, or sskm")
      ->check(CLI::IsMember({"skm", "mskm", "sskm"}));
  certify->add_option("--beta", beta, "sample size");
  certify->add_option("--delta", delta, "projection relaxation");
  certify->add_option("--gamma", gamma, "momentum weight");
  certify->add_option("--t", t_aux, "auxiliary rate-split parameter");
  certify->add_option("--log-base", log_base, "2 or e")
      ->check(CLI::IsMember({"2", "e"}));
  certify->add_option("--out", out, "CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return cmd_generate(gen_kind, gen_m, gen_n, gen_mix, gen_seed, gen_from_lp,
                          gen_out, gen_format, gen_normalize);
    }
    if (solve->parsed()) {
      SolverParams params;
      params.method = method_from_name(method);
      params.beta = beta;
      params.delta = delta;
      params.gamma = gamma;
      params.t_aux = t_aux;
      params.seed = seed;
      params.stop.residual_tol = tol;
      params.stop.relative = rel_tol;
      params.stop.max_iters = max_iters;
      return cmd_solve(solve_src, params, x0_fill, parse_metrics(metrics), stride,
                       out, strict, no_region_check);
    }
    if (sweep->parsed()) {
      ExperimentPlan plan;
      plan.methods.clear();
      for (const std::string& name : sweep_methods) {
        plan.methods.push_back(method_from_name(name));
      }
      plan.betas = sweep_betas;
      plan.deltas = sweep_deltas;
      plan.gammas = sweep_gammas;
      plan.t_aux = t_aux;
      plan.trials = trials;
      plan.base_seed = seed;
      plan.stop.residual_tol = tol;
      plan.stop.relative = rel_tol;
      plan.stop.max_iters = max_iters;
      plan.stride = stride;
      const MetricsSelection sel = parse_metrics(metrics);
      plan.record_f = sel.f;
      plan.record_dist = sel.dist;
      if (sel.dist) plan.oracle = ProjectionOracle{};
      plan.measure_time = times;
      return cmd_sweep(sweep_src, plan, x0_fill, out, strict, no_region_check);
    }
    if (rates->parsed()) {
      return cmd_rates(rates_src, method, beta, rate_deltas, rate_gammas, t_aux, out);
    }
    if (certify->parsed()) {
      return cmd_certify(certify_src, cert_ks, cert_rho_bar, beta, delta, gamma,
                         t_aux, method, log_base, out);
    }
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const divergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}
