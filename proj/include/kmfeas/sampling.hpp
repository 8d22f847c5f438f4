// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT
//
// The sampling distribution behind the solver family: uniform beta-subsets
// of rows, the max-violation selection rule inside a sample, and two
// independent evaluations of the induced expectations: a closed form over
// sorted residuals and a definitional brute-force enumeration used as the
// oracle in tests.
//
// Note on the beta = 1 special case: rows are normalized at load, so
// row-norm-proportional sampling coincides with the uniform sampling
// implemented here.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kmfeas/linalg.hpp"
#include "kmfeas/problem.hpp"
#include "kmfeas/rng.hpp"

namespace kmfeas {

// One sample: the sorted index set tau and, after selection, the row with
// the largest positive residual inside tau.
struct SampleDraw {
  std::vector<std::size_t> tau;
  std::optional<std::size_t> i_star;
};

// Draws sorted uniform beta-subsets of [0, m) in O(beta log beta) per draw
// via partial Fisher-Yates over a persistent index pool (restored after each
// draw, so a draw depends only on the RNG stream, not on draw history).
class SubsetSampler {
 public:
  explicit SubsetSampler(std::size_t m);

  std::size_t m() const { return pool_.size(); }
  // Writes the subset into out (sorted ascending). beta must be in [1, m].
  void draw(std::size_t beta, Rng& rng, std::vector<std::size_t>& out);

 private:
  std::vector<std::size_t> pool_;
  std::vector<std::size_t> swaps_;
};

// One-shot convenience wrapper over SubsetSampler.
std::vector<std::size_t> draw_sample(std::size_t m, std::size_t beta, Rng& rng);

// Picks argmax over tau of the positive residual (a_i^T x - b_i)+, ties
// broken by lowest row index. i_star is set even when the max positive
// residual is zero (the projection step is then zero and only momentum
// moves the iterate).
SampleDraw select_index(const FeasibilityProblem& p, const DenseVector& x,
                        const std::vector<std::size_t>& tau);

// f(x) = half the expected squared selected positive residual, evaluated by
// the closed form over the ascending-sorted positive residuals: the subset
// maximum lands on sorted position beta+j with binomial weight
// C(beta-1+j, beta-1), accumulated through the ratio recurrence
// w_{j+1} = w_j * (beta+j)/(j+1) with periodic rescaling (no overflow up to
// m ~ 50,000). Rows must be normalized.
double f_value(const FeasibilityProblem& p, const DenseVector& x,
               std::size_t beta);

// Gradient of f: same weights applied to residual * row. Ties among equal
// residuals distribute weight per the stable (value, row index) sort order;
// any consistent tiebreak gives the same f and a valid subgradient.
DenseVector grad_f(const FeasibilityProblem& p, const DenseVector& x,
                   std::size_t beta);

// Exact expectations over every beta-subset.
struct ExpectationReport {
  double f_value = 0.0;
  DenseVector grad;
  DenseMatrix W;  // E[a_{i*} a_{i*}^T], n x n
};

// Definitional oracle: enumerate all C(m, beta) subsets, apply the selection
// rule, average. Guarded to C(m, beta) <= 1e6.
ExpectationReport brute_force_expectation(const FeasibilityProblem& p,
                                          const DenseVector& x,
                                          std::size_t beta);

}  // namespace kmfeas
