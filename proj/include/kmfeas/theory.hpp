// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT
//
// The guarantee engine. Everything here is closed-form arithmetic on the
// spectral constants mu1 = lambda_min_plus(A^T A)/m and
// mu2 = min(1, (beta/m) lambda_max(A^T A)) of a row-normalized system:
// admissible parameter regions for the momentum weight, per-step contraction
// reports for the mean and mean-square senses, sublinear bounds for the
// averaged iterate, and a feasibility certificate that turns a contraction
// rate plus the input encoding length into an explicit iteration count.

#pragma once

#include <cstddef>
#include <string>

#include "kmfeas/linalg.hpp"
#include "kmfeas/problem.hpp"

namespace kmfeas {

// Point in parameter space at which regions and rates are evaluated.
// n is the ambient dimension for the stochastic-momentum variant; the
// heavy-ball variant is the n = 1 slice. Invariants: n >= 1,
// 0 < mu1 <= mu2 <= 1.
struct RegionQuery {
  std::size_t n = 1;
  double delta = 1.0;
  double gamma = 0.0;
  double t_aux = 0.0;  // auxiliary split parameter, >= 0 (> 0 when gamma > 0)
  double mu1 = 0.0;
  double mu2 = 0.0;
};

// Momentum cap of the mean-contraction region:
//   sqrt(n) * (1 - sqrt(h)) / (1 - sqrt(h) + delta * sqrt(mu2)),
// h = h_delta(delta, mu1). Requires 0 < delta < 2.
double region_Q_gamma_bound(const RegionQuery& q);

// Membership in the mean-contraction region: 0 <= gamma < the bound above.
bool region_Q(const RegionQuery& q);

// Momentum cap of the mean-square region:
//   (-1 + sqrt(4nt + 4nt^2 + 1)) / (2(1 + t)).
double region_R_gamma_bound(const RegionQuery& q);

// Membership in the mean-square region: gamma under the cap above and the
// two-sided chain
//   gamma * mu2/mu1 < 2n/(1+t) - n*delta + gamma <= (n + gamma)/(delta*mu1*(1+t))
// (strict on the left, weak on the right). Requires t_aux >= 0, 0 < delta < 2.
bool region_RS(const RegionQuery& q);

// Two-term recurrence splitting of the mean bound. For gamma = 0 the pair
// collapses to rho1 = 0, rho2 = sqrt(h) exactly.
struct RateL1Report {
  double pi1 = 0.0;     // sqrt(h)
  double pi2 = 0.0;     // gamma / sqrt(n)  (upper off-diagonal)
  double pi3 = 0.0;     // delta * sqrt(mu2)
  double pi4 = 0.0;     // gamma / sqrt(n)
  double gamma1 = 0.0;  // (pi1 - pi4 + sqrt(D)) / (2 pi3)
  double gamma2 = 0.0;  // (pi1 - pi4 - sqrt(D)) / (2 pi3)
  double gamma3 = 0.0;  // pi3 / sqrt(D)
  double rho1 = 0.0;    // (pi1 + pi4 - sqrt(D)) / 2
  double rho2 = 0.0;    // (pi1 + pi4 + sqrt(D)) / 2, the decisive rate
  bool valid = false;   // rho2 < 1 is guaranteed iff the query lies in Q_n
};

RateL1Report rate_l1(const RegionQuery& q);

enum class RateL2Case { gamma_zero, small_delta, large_delta };

std::string rate_l2_case_name(RateL2Case c);

// Mean-square bound E[d_{k}^2] <= (1 + alpha) * rho^k * d_0^2.
struct RateL2Report {
  double beta1 = 0.0;
  double beta2 = 0.0;
  double beta3 = 0.0;
  double alpha = 0.0;
  double rho = 0.0;
  RateL2Case case_tag = RateL2Case::gamma_zero;
  bool valid = false;  // rho < 1 is guaranteed iff the query lies in RS
};

// Case split at delta = 1/(mu2 (1+t)) (boundary goes to the small-delta
// formula; both agree there). gamma > 0 with t_aux = 0 is a parameter_error.
RateL2Report rate_l2(const RegionQuery& q);

// Evaluate a specific case formula regardless of where delta falls; used to
// check continuity across the case boundary.
RateL2Report rate_l2_case(const RegionQuery& q, RateL2Case which);

enum class CesaroKind { mskm, sskm };

// Inputs of the averaged-iterate objective bound.
struct CesaroParams {
  std::size_t n = 1;    // ambient dimension (stochastic variant only)
  double delta = 1.0;
  double gamma = 0.0;
  double zeta = 0.0;    // auxiliary weight of the stochastic variant, >= 0
  double d0_sq = 0.0;   // squared start distance d(x_0, P)^2
  double f0 = 0.0;      // f(x_0)
  std::size_t k = 1;    // averaging horizon, >= 1
};

// Upper bound on E[f(mean of x_0 .. x_{k-1})], O(1/k). The two kinds
// coincide at gamma = 0, zeta = 0: d0_sq / (2 delta k (2 - delta)).
// parameter_error names the violated admissibility inequality.
double cesaro_bound(CesaroKind kind, const CesaroParams& c);

// Bit-length surrogate of the input data:
//   sum log(|a_ij| + 1) + sum log(|b_i| + 1) + log(m n) + 2  (natural logs).
// For integer data this lower-bounds the true binary encoding length.
double encoding_length(const FeasibilityProblem& p);

enum class LogBase { two, natural };

// Certificate of the halting rule: with sigma = encoding_length, psi the
// largest row norm of the unnormalized data, and a per-step mean-square
// contraction rho_bar in (0, 1),
//   min_k  = (4 sigma - 4 - log n + log(1 + alpha) + 2 log psi) / log(1/rho_bar)
//   p_bound = sqrt((1 + alpha)/n) * 2^(2 sigma - 2) * psi * rho_bar^(k/2)
// p_bound bounds the probability that a still-infeasible-looking iterate at
// step k belongs to a feasible instance, via the detection threshold
// theta >= 2^(1 - sigma) valid for infeasible rational input. min_k depends
// on the log base (default 2, matching the power-of-two threshold); p_bound
// does not.
struct CertificateInputs {
  double sigma = 0.0;
  std::size_t n = 1;
  double alpha = 0.0;
  double rho_bar = 0.0;
  double psi = 1.0;
};

struct CertificateReport {
  double min_k = 0.0;
  double p_bound = 0.0;
};

// Evaluated in log space; representable even when 2^(2 sigma - 2) is not.
// Throws no_certificate_error unless 0 < rho_bar < 1.
CertificateReport certificate_bound(const CertificateInputs& c, std::size_t k,
                                    LogBase base = LogBase::two);

}  // namespace kmfeas
