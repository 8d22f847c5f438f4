// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT

#include "kmfeas/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kmfeas/errors.hpp"

namespace kmfeas {

namespace {

void check_beta(std::size_t beta, std::size_t m) {
  if (beta < 1 || beta > m) {
    throw parameter_error("sample size beta must satisfy 1 <= beta <= m, got beta=" +
                          std::to_string(beta) + " with m=" + std::to_string(m));
  }
}

void check_normalized(const FeasibilityProblem& p, const char* op) {
  if (!p.normalized) {
    throw contract_error(std::string(op) + " requires unit row norms; call normalize_rows first");
  }
}

// Row order that makes residuals ascending; ties resolved by row index so
// the weight assignment is reproducible.
std::vector<std::size_t> ascending_residual_order(const DenseVector& rplus) {
  std::vector<std::size_t> order(rplus.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&rplus](std::size_t a, std::size_t b) {
    if (rplus[a] != rplus[b]) return rplus[a] < rplus[b];
    return a < b;
  });
  return order;
}

// Shared weighted accumulation over sorted positions beta+j, j = 0..m-beta.
// Calls visit(row, weight) and returns the weight total; dividing by the
// total normalizes by C(m, beta) without ever forming it. Whenever the
// running weight threatens to overflow, everything accumulated so far is
// scaled down in lockstep: rescale(factor) must multiply the caller's
// accumulator by factor so visit contributions stay commensurable.
template <typename Visit, typename Rescale>
double accumulate_order_weights(const std::vector<std::size_t>& order,
                                std::size_t beta, Visit&& visit,
                                Rescale&& rescale) {
  const std::size_t m = order.size();
  constexpr double kRescaleGuard = 1e250;
  constexpr double kRescale = 1e-250;
  double w = 1.0;
  double wsum = 0.0;
  for (std::size_t j = 0; j + beta <= m; ++j) {
    const std::size_t row = order[beta - 1 + j];
    visit(row, w);
    wsum += w;
    w *= static_cast<double>(beta + j) / static_cast<double>(j + 1);
    if (w > kRescaleGuard) {
      w *= kRescale;
      wsum *= kRescale;
      rescale(kRescale);
    }
  }
  return wsum;
}

}  // namespace

SubsetSampler::SubsetSampler(std::size_t m) : pool_(m), swaps_() {
  if (m == 0) throw parameter_error("SubsetSampler needs at least one row");
  std::iota(pool_.begin(), pool_.end(), std::size_t{0});
}

void SubsetSampler::draw(std::size_t beta, Rng& rng, std::vector<std::size_t>& out) {
  const std::size_t m = pool_.size();
  check_beta(beta, m);
  out.resize(beta);
  swaps_.resize(beta);
  for (std::size_t j = 0; j < beta; ++j) {
    const std::size_t r = j + static_cast<std::size_t>(rng.next_below(m - j));
    std::swap(pool_[j], pool_[r]);
    out[j] = pool_[j];
    swaps_[j] = r;
  }
  // Undo the swaps so the pool is the identity permutation again.
  for (std::size_t j = beta; j-- > 0;) {
    std::swap(pool_[j], pool_[swaps_[j]]);
  }
  std::sort(out.begin(), out.end());
}

std::vector<std::size_t> draw_sample(std::size_t m, std::size_t beta, Rng& rng) {
  SubsetSampler sampler(m);
  std::vector<std::size_t> out;
  sampler.draw(beta, rng, out);
  return out;
}

SampleDraw select_index(const FeasibilityProblem& p, const DenseVector& x,
                        const std::vector<std::size_t>& tau) {
  if (tau.empty()) throw parameter_error("select_index needs a nonempty sample");
  if (x.size() != p.n()) {
    throw dimension_error("select_index: x has length " + std::to_string(x.size()) +
                          ", expected " + std::to_string(p.n()));
  }
  SampleDraw draw;
  draw.tau = tau;
  std::size_t best = tau.front();
  double best_val = -1.0;
  for (std::size_t i : tau) {
    if (i >= p.m()) {
      throw dimension_error("select_index: row index " + std::to_string(i) +
                            " out of range for m=" + std::to_string(p.m()));
    }
    const double r = dot(p.A.row(i), x.data(), p.n()) - p.b[i];
    const double rp = r > 0.0 ? r : 0.0;
    // Strict comparison over ascending tau keeps the lowest index on ties.
    if (rp > best_val) {
      best_val = rp;
      best = i;
    }
  }
  draw.i_star = best;
  return draw;
}

double f_value(const FeasibilityProblem& p, const DenseVector& x,
               std::size_t beta) {
  check_normalized(p, "f_value");
  check_beta(beta, p.m());
  const DenseVector rplus = positive_residual(p, x);
  const std::vector<std::size_t> order = ascending_residual_order(rplus);
  double acc = 0.0;
  const double wsum = accumulate_order_weights(
      order, beta,
      [&](std::size_t row, double w) { acc += w * rplus[row] * rplus[row]; },
      [&](double factor) { acc *= factor; });
  return 0.5 * acc / wsum;
}

DenseVector grad_f(const FeasibilityProblem& p, const DenseVector& x,
                   std::size_t beta) {
  check_normalized(p, "grad_f");
  check_beta(beta, p.m());
  const DenseVector rplus = positive_residual(p, x);
  const std::vector<std::size_t> order = ascending_residual_order(rplus);
  const std::size_t n = p.n();
  DenseVector g(n, 0.0);
  const double wsum = accumulate_order_weights(
      order, beta,
      [&](std::size_t row, double w) {
        axpy(w * rplus[row], p.A.row(row), g.data(), n);
      },
      [&](double factor) {
        for (double& v : g) v *= factor;
      });
  for (double& v : g) v /= wsum;
  return g;
}

ExpectationReport brute_force_expectation(const FeasibilityProblem& p,
                                          const DenseVector& x,
                                          std::size_t beta) {
  const std::size_t m = p.m();
  const std::size_t n = p.n();
  check_beta(beta, m);
  if (x.size() != n) {
    throw dimension_error("brute_force_expectation: x has length " +
                          std::to_string(x.size()) + ", expected " + std::to_string(n));
  }
  double count = 1.0;
  for (std::size_t j = 0; j < beta; ++j) {
    count *= static_cast<double>(m - j) / static_cast<double>(j + 1);
    if (count > 1e6) {
      throw guard_error("brute_force_expectation: C(m, beta) exceeds 1e6 subsets");
    }
  }

  const DenseVector rplus = positive_residual(p, x);
  ExpectationReport rep;
  rep.grad.assign(n, 0.0);
  rep.W = DenseMatrix(n, n);

  // Lexicographic enumeration of all beta-subsets of {0, ..., m-1}.
  std::vector<std::size_t> c(beta);
  std::iota(c.begin(), c.end(), std::size_t{0});
  std::size_t total = 0;
  for (;;) {
    std::size_t i_star = c[0];
    double best = rplus[c[0]];
    for (std::size_t j = 1; j < beta; ++j) {
      if (rplus[c[j]] > best) {  // strict: lowest index wins ties
        best = rplus[c[j]];
        i_star = c[j];
      }
    }
    rep.f_value += best * best;
    const double* a = p.A.row(i_star);
    axpy(best, a, rep.grad.data(), n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) {
        rep.W.at(r, s) += a[r] * a[s];
      }
    }
    ++total;

    // Advance to the next combination.
    std::size_t j = beta;
    while (j-- > 0) {
      if (c[j] != j + m - beta) break;
      if (j == 0) {
        j = beta;  // signal: enumeration finished
        break;
      }
    }
    if (j == beta) break;
    ++c[j];
    for (std::size_t t = j + 1; t < beta; ++t) c[t] = c[t - 1] + 1;
  }

  const double inv = 1.0 / static_cast<double>(total);
  rep.f_value *= 0.5 * inv;
  for (double& v : rep.grad) v *= inv;
  for (double& v : rep.W.data) v *= inv;
  return rep;
}

}  // namespace kmfeas
