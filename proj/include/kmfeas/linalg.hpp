// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT
//
// Dense vector/matrix arithmetic and a symmetric eigensolver sized for
// desk-scale instances. Vectors are plain std::vector<double>; matrices are
// row-major. The eigensolver is a cyclic Jacobi iteration: no external
// dependency, and exact enough (reconstruction residual <= 1e-8 * max|S|)
// for the Gram matrices this library sees.

#pragma once

#include <cstddef>
#include <vector>

#include "kmfeas/errors.hpp"

namespace kmfeas {

using DenseVector = std::vector<double>;

// Row-major dense matrix of 64-bit floats.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // rows*cols entries, row-major

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  double* row(std::size_t i) { return data.data() + i * cols; }
  const double* row(std::size_t i) const { return data.data() + i * cols; }
};

// --- vector kernels -------------------------------------------------------

double dot(const DenseVector& a, const DenseVector& b);
double dot(const double* a, const double* b, std::size_t n);
double norm2_sq(const DenseVector& v);
double norm2_sq(const double* v, std::size_t n);
double norm2(const DenseVector& v);
double norm2(const double* v, std::size_t n);
// y += alpha * x
void axpy(double alpha, const DenseVector& x, DenseVector& y);
void axpy(double alpha, const double* x, double* y, std::size_t n);
bool all_finite(const DenseVector& v);
bool all_finite(const DenseMatrix& a);

DenseVector matvec(const DenseMatrix& a, const DenseVector& x);
// Gram matrix A^T A (cols x cols).
DenseMatrix gram(const DenseMatrix& a);

// --- symmetric eigendecomposition ------------------------------------------

// Eigenvalues ascending; eigenvectors[:, j] pairs with eigenvalues[j] and the
// columns are orthonormal to 1e-8 in the max norm.
struct EigenDecomposition {
  DenseVector eigenvalues;
  DenseMatrix eigenvectors;
};

// Cyclic Jacobi sweeps on a copy of S. Throws dimension_error if S is not
// square or not symmetric to 1e-12 relative to max|S|.
EigenDecomposition sym_eig(const DenseMatrix& s);

// --- spectral constants -----------------------------------------------------

// Spectrum-derived constants of A^T A for a given sample size beta.
// hoffman_sq = 1/lambda_min_plus relates distance to residual norm,
// d(x,P)^2 <= hoffman_sq * ||(Ax-b)+||^2; exact for consistent systems,
// an upper-bound surrogate otherwise (rate bounds may then be loose but
// stay valid in the domination direction).
struct SpectralConstants {
  double lambda_min_plus = 0.0;  // smallest eigenvalue above the zero cutoff
  double lambda_max = 0.0;
  double hoffman_sq = 0.0;       // 1 / lambda_min_plus
  double mu1 = 0.0;              // lambda_min_plus / m
  double mu2 = 0.0;              // min(1, (beta/m) * lambda_max)
  std::size_t m = 0;
  std::size_t beta = 0;
};

// Eigenvalues below 1e-10 * lambda_max count as zero when locating
// lambda_min_plus (rank deficiency from stacked transforms is expected).
// Throws degenerate_error when the whole spectrum is numerically zero,
// parameter_error when beta is outside [1, m].
SpectralConstants spectral_constants(const DenseMatrix& a, std::size_t beta);

// Per-step mean-square contraction factor 1 - (2*delta - delta^2) * mu1.
// Requires 0 <= delta <= 2 and 0 < mu1 <= 1; minimized at delta = 1.
double h_delta(double delta, double mu1);

}  // namespace kmfeas
