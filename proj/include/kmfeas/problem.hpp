// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT
//
// The feasibility-problem data model: row normalization, residuals,
// violation metrics, and distance-to-polyhedron oracles.

#pragma once

#include <cstddef>

#include "kmfeas/linalg.hpp"

namespace kmfeas {

// Original row scales kept around after normalization. psi is the largest
// original row norm; it enters the non-normalized certificate variant.
struct NormalizationRecord {
  DenseVector row_norms;  // strictly positive, one per row
  double psi = 1.0;       // max(row_norms)
};

// The system Ax <= b. `normalized` marks that every row of A (and the
// matching entry of b) has been divided by the row's 2-norm; solvers and the
// sampling expectations require that state. No zero rows, ever.
struct FeasibilityProblem {
  DenseMatrix A;
  DenseVector b;
  bool normalized = false;
  NormalizationRecord scale;

  std::size_t m() const { return A.rows; }
  std::size_t n() const { return A.cols; }
};

enum class ProjectionKind { exact_box, exact_halfspace, dykstra_general };

// How to evaluate d(x, P). The exact kinds require matching structure
// (a box described by single-coefficient rows / a single halfspace); the
// Dykstra kind works on any nonempty polyhedron at iterative cost.
struct ProjectionOracle {
  ProjectionKind kind = ProjectionKind::dykstra_general;
  std::size_t max_sweeps = 100000;
  double tolerance = 1e-10;
};

// Divide each row and its right-hand side by the row norm; the solution set
// is unchanged. The record keeps the original norms and their max. Throws
// degenerate_error naming the first zero row.
FeasibilityProblem normalize_rows(const FeasibilityProblem& p);

// Componentwise max(Ax - b, 0).
DenseVector positive_residual(const FeasibilityProblem& p, const DenseVector& x);

// Largest single-constraint violation; zero exactly on P.
double theta_max_violation(const FeasibilityProblem& p, const DenseVector& x);

// Fraction of satisfied constraints in [0, 1]; boundary rows count satisfied.
double fsc(const FeasibilityProblem& p, const DenseVector& x);

// d(x, P) via the configured oracle. P must be nonempty (caller asserts).
// Throws contract_error when an exact kind does not match the structure,
// nonconvergence_error (carrying the best estimate) when Dykstra hits its cap.
double distance_to_polyhedron(const FeasibilityProblem& p, const DenseVector& x,
                              const ProjectionOracle& oracle);

}  // namespace kmfeas
