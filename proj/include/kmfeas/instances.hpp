// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT
//
// Test-instance generation and ingestion: seeded random systems built
// around known feasible witnesses, reductions from classification and LP
// data to Ax <= b, and plain-text / CSV problem files with bit-exact
// round trips.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kmfeas/linalg.hpp"
#include "kmfeas/problem.hpp"

namespace kmfeas {

enum class RandomKind { correlated, gaussian };

// Recipe for a random instance. Entries of A and both witness points come
// from the named distribution (correlated: uniform on [0.9, 1.0], which
// yields poorly conditioned nearly-parallel rows; gaussian: standard
// normal); b = mix_sigma * A x1 + (1 - mix_sigma) * A x2, so the mix point
// is feasible by construction.
struct RandomSpec {
  RandomKind kind = RandomKind::gaussian;
  std::size_t m = 1;
  std::size_t n = 1;
  double mix_sigma = 0.5;
  std::uint64_t seed = 0;
};

struct GeneratedInstance {
  FeasibilityProblem problem;  // not normalized; caller normalizes
  DenseVector x1;
  DenseVector x2;
};

GeneratedInstance gen_random(const RandomSpec& spec);

// Binary classification data to the homogeneous system Ax <= -margin:
// row i = -label_i * point_i, so feasible x are (margin-)separating
// normal vectors. labels must be +1 or -1.
FeasibilityProblem svm_to_feasibility(const DenseMatrix& points,
                                      const std::vector<int>& labels,
                                      double margin = 0.0);

// min c^T x  s.t.  Ax = b, l <= x <= u, with known optimal value p_star.
// Bounds may be +/-infinity.
struct LpInstance {
  DenseMatrix A;  // p x q
  DenseVector b;  // p
  DenseVector l;  // q
  DenseVector u;  // q
  DenseVector c;  // q
  double p_star = 0.0;
};

// Stack the LP optimality conditions into one inequality system:
// rows A; -A; e_j for finite u_j; -e_j for finite l_j; c^T, with right-hand
// sides b; -b; u_j; -l_j; p_star. A point is feasible iff it is LP-feasible
// with objective value <= p_star, i.e. optimal when p_star is the optimum.
// Infinite bounds contribute no row.
FeasibilityProblem lp_to_feasibility(const LpInstance& lp);

enum class FileFormat { txt, csv };

// Problem file: line 1 "m n", then m lines of n floats (rows of A), then one
// line of m floats (b). '#' starts a comment. CSV replaces whitespace
// separators with commas. Floats are written shortest-round-trip, so
// write-then-read reproduces every bit.
FeasibilityProblem read_problem(const std::string& path,
                                FileFormat format = FileFormat::txt);
void write_problem(const FeasibilityProblem& p, const std::string& path,
                   FileFormat format = FileFormat::txt);

// LP file: "p q", then A rows, b, l, u, c (with inf / -inf sentinels in the
// bound lines), and a final line with p_star.
LpInstance read_lp(const std::string& path);
void write_lp(const LpInstance& lp, const std::string& path);

}  // namespace kmfeas
