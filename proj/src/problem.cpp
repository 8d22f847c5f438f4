// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT

#include "kmfeas/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace kmfeas {

namespace {

void check_point_dim(const FeasibilityProblem& p, const DenseVector& x) {
  if (x.size() != p.n()) {
    throw dimension_error("point length " + std::to_string(x.size()) +
                          " vs problem n " + std::to_string(p.n()));
  }
}

}  // namespace

FeasibilityProblem normalize_rows(const FeasibilityProblem& p) {
  FeasibilityProblem out;
  out.A = DenseMatrix(p.m(), p.n());
  out.b.resize(p.m());
  out.scale.row_norms.resize(p.m());
  double psi = 0.0;
  for (std::size_t i = 0; i < p.m(); ++i) {
    const double nrm = norm2(p.A.row(i), p.n());
    if (nrm == 0.0) {
      throw degenerate_error("normalize_rows: row " + std::to_string(i) +
                             " is zero");
    }
    out.scale.row_norms[i] = nrm;
    psi = std::max(psi, nrm);
    const double inv = 1.0 / nrm;
    const double* src = p.A.row(i);
    double* dst = out.A.row(i);
    for (std::size_t j = 0; j < p.n(); ++j) dst[j] = src[j] * inv;
    out.b[i] = p.b[i] * inv;
  }
  out.scale.psi = psi;
  out.normalized = true;
  return out;
}

DenseVector positive_residual(const FeasibilityProblem& p, const DenseVector& x) {
  check_point_dim(p, x);
  DenseVector r(p.m());
  for (std::size_t i = 0; i < p.m(); ++i) {
    r[i] = std::max(dot(p.A.row(i), x.data(), p.n()) - p.b[i], 0.0);
  }
  return r;
}

double theta_max_violation(const FeasibilityProblem& p, const DenseVector& x) {
  check_point_dim(p, x);
  double theta = 0.0;
  for (std::size_t i = 0; i < p.m(); ++i) {
    theta = std::max(theta, dot(p.A.row(i), x.data(), p.n()) - p.b[i]);
  }
  return std::max(theta, 0.0);
}

double fsc(const FeasibilityProblem& p, const DenseVector& x) {
  check_point_dim(p, x);
  std::size_t satisfied = 0;
  for (std::size_t i = 0; i < p.m(); ++i) {
    if (dot(p.A.row(i), x.data(), p.n()) <= p.b[i]) ++satisfied;
  }
  return static_cast<double>(satisfied) / static_cast<double>(p.m());
}

namespace {

double distance_exact_halfspace(const FeasibilityProblem& p,
                                const DenseVector& x) {
  if (p.m() != 1) {
    throw contract_error(
        "distance oracle exact-halfspace requires exactly one row, got " +
        std::to_string(p.m()));
  }
  const double nrm = norm2(p.A.row(0), p.n());
  if (nrm == 0.0) throw degenerate_error("distance oracle: zero row");
  const double r = std::max(dot(p.A.row(0), x.data(), p.n()) - p.b[0], 0.0);
  return r / nrm;
}

// Interprets each row as a single-coordinate bound and clamps componentwise.
double distance_exact_box(const FeasibilityProblem& p, const DenseVector& x) {
  const double inf = std::numeric_limits<double>::infinity();
  DenseVector lo(p.n(), -inf), hi(p.n(), inf);
  for (std::size_t i = 0; i < p.m(); ++i) {
    const double* row = p.A.row(i);
    std::size_t nz = p.n();  // sentinel: none found yet
    for (std::size_t j = 0; j < p.n(); ++j) {
      if (row[j] != 0.0) {
        if (nz != p.n()) {
          throw contract_error("distance oracle exact-box: row " +
                               std::to_string(i) + " has several nonzeros");
        }
        nz = j;
      }
    }
    if (nz == p.n()) {
      throw degenerate_error("distance oracle exact-box: row " +
                             std::to_string(i) + " is zero");
    }
    const double c = row[nz];
    const double bound = p.b[i] / c;
    if (c > 0.0) {
      hi[nz] = std::min(hi[nz], bound);
    } else {
      lo[nz] = std::max(lo[nz], bound);
    }
  }
  double d_sq = 0.0;
  for (std::size_t j = 0; j < p.n(); ++j) {
    if (lo[j] > hi[j]) {
      throw contract_error("distance oracle exact-box: empty box at coordinate " +
                           std::to_string(j));
    }
    const double z = std::clamp(x[j], lo[j], hi[j]);
    d_sq += (x[j] - z) * (x[j] - z);
  }
  return std::sqrt(d_sq);
}

// Dykstra's alternating projections onto the m halfspaces. Converges to the
// exact projection for intersections of convex sets; stops when a full sweep
// moves the iterate less than the tolerance.
double distance_dykstra(const FeasibilityProblem& p, const DenseVector& x,
                        const ProjectionOracle& oracle) {
  const std::size_t m = p.m(), n = p.n();
  DenseVector y = x;
  DenseVector prev(n);
  DenseMatrix corrections(m, n, 0.0);
  DenseVector row_norm_sq(m);
  for (std::size_t i = 0; i < m; ++i) {
    row_norm_sq[i] = dot(p.A.row(i), p.A.row(i), n);
    if (row_norm_sq[i] == 0.0) {
      throw degenerate_error("distance oracle: zero row " + std::to_string(i));
    }
  }

  for (std::size_t sweep = 0; sweep < oracle.max_sweeps; ++sweep) {
    prev = y;
    for (std::size_t i = 0; i < m; ++i) {
      double* q = corrections.row(i);
      const double* a = p.A.row(i);
      // w = y + q_i, projected onto the halfspace; q_i becomes w - proj.
      double viol = -p.b[i];
      for (std::size_t j = 0; j < n; ++j) viol += a[j] * (y[j] + q[j]);
      const double step = std::max(viol, 0.0) / row_norm_sq[i];
      for (std::size_t j = 0; j < n; ++j) {
        const double w = y[j] + q[j];
        const double proj = w - step * a[j];
        q[j] = w - proj;
        y[j] = proj;
      }
    }
    double moved_sq = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      moved_sq += (y[j] - prev[j]) * (y[j] - prev[j]);
    }
    if (std::sqrt(moved_sq) <= oracle.tolerance) {
      DenseVector diff(n);
      for (std::size_t j = 0; j < n; ++j) diff[j] = x[j] - y[j];
      return norm2(diff);
    }
  }
  DenseVector diff(n);
  for (std::size_t j = 0; j < n; ++j) diff[j] = x[j] - y[j];
  throw nonconvergence_error("distance oracle: Dykstra hit sweep cap " +
                                 std::to_string(oracle.max_sweeps),
                             norm2(diff));
}

}  // namespace

double distance_to_polyhedron(const FeasibilityProblem& p, const DenseVector& x,
                              const ProjectionOracle& oracle) {
  check_point_dim(p, x);
  if (oracle.tolerance <= 0.0) {
    throw parameter_error("distance oracle: tolerance must be positive");
  }
  switch (oracle.kind) {
    case ProjectionKind::exact_halfspace:
      return distance_exact_halfspace(p, x);
    case ProjectionKind::exact_box:
      return distance_exact_box(p, x);
    case ProjectionKind::dykstra_general: {
      if (theta_max_violation(p, x) == 0.0) return 0.0;
      return distance_dykstra(p, x, oracle);
    }
  }
  throw parameter_error("distance oracle: unknown kind");
}

}  // namespace kmfeas
