// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT

#include "kmfeas/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace kmfeas {

double dot(const DenseVector& a, const DenseVector& b) {
  if (a.size() != b.size()) {
    throw dimension_error("dot: length mismatch " + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()));
  }
  return dot(a.data(), b.data(), a.size());
}

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double norm2_sq(const DenseVector& v) { return dot(v.data(), v.data(), v.size()); }

double norm2_sq(const double* v, std::size_t n) { return dot(v, v, n); }

double norm2(const DenseVector& v) { return std::sqrt(norm2_sq(v)); }

double norm2(const double* v, std::size_t n) { return std::sqrt(dot(v, v, n)); }

void axpy(double alpha, const DenseVector& x, DenseVector& y) {
  if (x.size() != y.size()) {
    throw dimension_error("axpy: length mismatch");
  }
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

bool all_finite(const DenseVector& v) {
  for (double e : v) {
    if (!std::isfinite(e)) return false;
  }
  return true;
}

bool all_finite(const DenseMatrix& a) {
  for (double e : a.data) {
    if (!std::isfinite(e)) return false;
  }
  return true;
}

DenseVector matvec(const DenseMatrix& a, const DenseVector& x) {
  if (x.size() != a.cols) {
    throw dimension_error("matvec: vector length " + std::to_string(x.size()) +
                          " vs matrix cols " + std::to_string(a.cols));
  }
  DenseVector y(a.rows, 0.0);
  for (std::size_t i = 0; i < a.rows; ++i) y[i] = dot(a.row(i), x.data(), a.cols);
  return y;
}

DenseMatrix gram(const DenseMatrix& a) {
  DenseMatrix g(a.cols, a.cols, 0.0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double* r = a.row(i);
    for (std::size_t j = 0; j < a.cols; ++j) {
      const double rj = r[j];
      if (rj == 0.0) continue;
      double* gj = g.row(j);
      for (std::size_t k = 0; k < a.cols; ++k) gj[k] += rj * r[k];
    }
  }
  return g;
}

namespace {

double max_abs(const DenseMatrix& a) {
  double m = 0.0;
  for (double e : a.data) m = std::max(m, std::abs(e));
  return m;
}

// Sum of squared off-diagonal entries.
double off_diag_sq(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) {
      if (i != j) s += a.at(i, j) * a.at(i, j);
    }
  }
  return s;
}

}  // namespace

EigenDecomposition sym_eig(const DenseMatrix& s) {
  if (s.rows != s.cols) {
    throw dimension_error("sym_eig: matrix is " + std::to_string(s.rows) + "x" +
                          std::to_string(s.cols) + ", expected square");
  }
  const std::size_t n = s.rows;
  const double scale = max_abs(s);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(s.at(i, j) - s.at(j, i)) > 1e-12 * std::max(scale, 1.0)) {
        throw dimension_error("sym_eig: matrix not symmetric at (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  DenseMatrix m = s;
  DenseMatrix q(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) q.at(i, i) = 1.0;

  double frob_sq = 0.0;
  for (double e : s.data) frob_sq += e * e;
  const double stop = 1e-26 * std::max(frob_sq, 1e-300);

  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps && off_diag_sq(m) > stop; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t r = p + 1; r < n; ++r) {
        const double apq = m.at(p, r);
        if (apq == 0.0) continue;
        const double app = m.at(p, p);
        const double aqq = m.at(r, r);
        // Classic two-sided rotation choosing the smaller angle.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double mkp = m.at(k, p);
          const double mkq = m.at(k, r);
          m.at(k, p) = c * mkp - sn * mkq;
          m.at(k, r) = sn * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double mpk = m.at(p, k);
          const double mqk = m.at(r, k);
          m.at(p, k) = c * mpk - sn * mqk;
          m.at(r, k) = sn * mpk + c * mqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double qkp = q.at(k, p);
          const double qkq = q.at(k, r);
          q.at(k, p) = c * qkp - sn * qkq;
          q.at(k, r) = sn * qkp + c * qkq;
        }
      }
    }
  }

  // Sort ascending, permuting eigenvector columns alongside.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.at(a, a) < m.at(b, b);
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = DenseMatrix(n, n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = m.at(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) {
      out.eigenvectors.at(i, j) = q.at(i, order[j]);
    }
  }
  return out;
}

SpectralConstants spectral_constants(const DenseMatrix& a, std::size_t beta) {
  if (a.rows == 0 || a.cols == 0) {
    throw dimension_error("spectral_constants: empty matrix");
  }
  if (beta < 1 || beta > a.rows) {
    throw parameter_error("spectral_constants: beta " + std::to_string(beta) +
                          " outside [1, " + std::to_string(a.rows) + "]");
  }
  const EigenDecomposition eig = sym_eig(gram(a));
  const double lambda_max = eig.eigenvalues.back();
  if (!(lambda_max > 0.0)) {
    throw degenerate_error("spectral_constants: spectrum numerically zero");
  }
  const double cutoff = 1e-10 * lambda_max;
  double lambda_min_plus = lambda_max;
  for (double lam : eig.eigenvalues) {
    if (lam > cutoff) {
      lambda_min_plus = lam;
      break;
    }
  }

  SpectralConstants c;
  c.lambda_min_plus = lambda_min_plus;
  c.lambda_max = lambda_max;
  c.hoffman_sq = 1.0 / lambda_min_plus;
  c.m = a.rows;
  c.beta = beta;
  c.mu1 = lambda_min_plus / static_cast<double>(a.rows);
  c.mu2 = std::min(1.0, (static_cast<double>(beta) / static_cast<double>(a.rows)) *
                            lambda_max);
  return c;
}

double h_delta(double delta, double mu1) {
  if (!(delta >= 0.0) || !(delta <= 2.0)) {
    throw parameter_error("h_delta: delta " + std::to_string(delta) +
                          " outside [0, 2]");
  }
  if (!(mu1 > 0.0) || !(mu1 <= 1.0)) {
    throw parameter_error("h_delta: mu1 " + std::to_string(mu1) +
                          " outside (0, 1]");
  }
  return 1.0 - (2.0 * delta - delta * delta) * mu1;
}

}  // namespace kmfeas
