// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT

#include "kmfeas/theory.hpp"

#include <algorithm>
#include <cmath>

#include "kmfeas/errors.hpp"

namespace kmfeas {

namespace {

void validate_query(const RegionQuery& q) {
  if (q.n < 1) throw parameter_error("region query needs n >= 1");
  if (!(q.mu1 > 0.0 && q.mu1 <= q.mu2 && q.mu2 <= 1.0)) {
    throw parameter_error("region query needs 0 < mu1 <= mu2 <= 1, got mu1=" +
                          std::to_string(q.mu1) + ", mu2=" + std::to_string(q.mu2));
  }
  if (!(q.delta > 0.0 && q.delta < 2.0)) {
    throw parameter_error("delta must lie in (0, 2), got " + std::to_string(q.delta));
  }
  if (!(q.t_aux >= 0.0)) {
    throw parameter_error("t_aux must be nonnegative, got " + std::to_string(q.t_aux));
  }
}

}  // namespace

double region_Q_gamma_bound(const RegionQuery& q) {
  validate_query(q);
  const double h = h_delta(q.delta, q.mu1);
  const double sqrt_h = std::sqrt(h);
  const double one_minus = 1.0 - sqrt_h;
  return std::sqrt(static_cast<double>(q.n)) * one_minus /
         (one_minus + q.delta * std::sqrt(q.mu2));
}

bool region_Q(const RegionQuery& q) {
  const double bound = region_Q_gamma_bound(q);
  return q.gamma >= 0.0 && q.gamma < bound;
}

double region_R_gamma_bound(const RegionQuery& q) {
  validate_query(q);
  const double n = static_cast<double>(q.n);
  const double t = q.t_aux;
  return (-1.0 + std::sqrt(4.0 * n * t + 4.0 * n * t * t + 1.0)) /
         (2.0 * (1.0 + t));
}

bool region_RS(const RegionQuery& q) {
  const double r_bound = region_R_gamma_bound(q);
  if (!(q.gamma >= 0.0 && q.gamma < r_bound)) return false;
  const double n = static_cast<double>(q.n);
  const double t = q.t_aux;
  const double mid = 2.0 * n / (1.0 + t) - n * q.delta + q.gamma;
  const double left = q.gamma * q.mu2 / q.mu1;
  const double right = (n + q.gamma) / (q.delta * q.mu1 * (1.0 + t));
  return left < mid && mid <= right;
}

RateL1Report rate_l1(const RegionQuery& q) {
  validate_query(q);
  RateL1Report rep;
  const double h = h_delta(q.delta, q.mu1);
  const double sqrt_n = std::sqrt(static_cast<double>(q.n));
  rep.pi1 = std::sqrt(h);
  rep.pi2 = q.gamma / sqrt_n;
  rep.pi3 = q.delta * std::sqrt(q.mu2);
  rep.pi4 = q.gamma / sqrt_n;
  const double d = (rep.pi1 - rep.pi4) * (rep.pi1 - rep.pi4) +
                   4.0 * rep.pi2 * rep.pi3;
  const double sqrt_d = std::sqrt(d);
  rep.gamma1 = (rep.pi1 - rep.pi4 + sqrt_d) / (2.0 * rep.pi3);
  rep.gamma2 = (rep.pi1 - rep.pi4 - sqrt_d) / (2.0 * rep.pi3);
  rep.gamma3 = rep.pi3 / sqrt_d;
  rep.rho1 = 0.5 * (rep.pi1 + rep.pi4 - sqrt_d);
  rep.rho2 = 0.5 * (rep.pi1 + rep.pi4 + sqrt_d);
  rep.valid = region_Q(q);
  return rep;
}

std::string rate_l2_case_name(RateL2Case c) {
  switch (c) {
    case RateL2Case::gamma_zero: return "gamma_zero";
    case RateL2Case::small_delta: return "small_delta";
    case RateL2Case::large_delta: return "large_delta";
  }
  return "gamma_zero";
}

namespace {

// The three coefficients shared by both momentum cases.
void rate_l2_coefficients(const RegionQuery& q, RateL2Report& rep) {
  const double n = static_cast<double>(q.n);
  const double t = q.t_aux;
  const double gn = q.gamma / n;
  rep.beta1 = 1.0 + gn + q.delta * q.mu1 * ((1.0 + t) * (q.delta - gn) - 2.0);
  rep.beta2 = gn * (q.delta * (1.0 + t) * q.mu2 - 1.0);
  rep.beta3 = (t * q.gamma * q.gamma + q.gamma * q.gamma + q.gamma) / n;
}

}  // namespace

RateL2Report rate_l2_case(const RegionQuery& q, RateL2Case which) {
  validate_query(q);
  RateL2Report rep;
  rep.case_tag = which;
  if (which == RateL2Case::gamma_zero) {
    rate_l2_coefficients(q, rep);
    rep.alpha = 0.0;
    rep.rho = h_delta(q.delta, q.mu1);
    rep.valid = true;  // delta in (0,2) already enforced; rho < 1 follows
    return rep;
  }
  if (q.gamma > 0.0 && q.t_aux == 0.0) {
    throw parameter_error("rate_l2 with gamma > 0 needs t_aux > 0");
  }
  rate_l2_coefficients(q, rep);
  const double ratio = q.t_aux > 0.0 ? rep.beta3 / q.t_aux : 0.0;
  if (which == RateL2Case::small_delta) {
    rep.alpha = std::max(0.0, ratio - rep.beta1 - rep.beta2);
    rep.rho = std::max(rep.beta1 + rep.beta2, ratio);
  } else {
    const double disc = std::sqrt(rep.beta1 * rep.beta1 + 4.0 * rep.beta2);
    rep.alpha = std::max({0.0, ratio - rep.beta1, 0.5 * (-rep.beta1 + disc)});
    rep.rho = std::max(ratio, 0.5 * (rep.beta1 + disc));
  }
  rep.valid = region_RS(q);
  return rep;
}

RateL2Report rate_l2(const RegionQuery& q) {
  validate_query(q);
  if (q.gamma == 0.0) return rate_l2_case(q, RateL2Case::gamma_zero);
  const bool small = q.delta <= 1.0 / (q.mu2 * (1.0 + q.t_aux));
  return rate_l2_case(q, small ? RateL2Case::small_delta : RateL2Case::large_delta);
}

double cesaro_bound(CesaroKind kind, const CesaroParams& c) {
  if (c.k < 1) throw parameter_error("cesaro_bound: averaging horizon k must be >= 1");
  if (!(c.d0_sq >= 0.0) || !(c.f0 >= 0.0)) {
    throw parameter_error("cesaro_bound: d0_sq and f0 must be nonnegative");
  }
  const double k = static_cast<double>(c.k);
  if (kind == CesaroKind::mskm) {
    if (!(c.gamma >= 0.0 && c.gamma < 1.0)) {
      throw parameter_error("cesaro_bound: heavy-ball momentum needs 0 <= gamma < 1");
    }
    if (!(c.delta > 0.0 && c.delta < 2.0 * (1.0 - c.gamma))) {
      throw parameter_error("cesaro_bound: step size needs 0 < delta < 2*(1 - gamma)");
    }
    const double om = 1.0 - c.gamma;
    return (om * om * c.d0_sq + 2.0 * c.delta * c.gamma * c.f0) /
           (2.0 * c.delta * k * (2.0 - 2.0 * c.gamma - c.delta));
  }
  // stochastic-momentum kind
  if (c.n < 1) throw parameter_error("cesaro_bound: ambient dimension n must be >= 1");
  const double n = static_cast<double>(c.n);
  if (!(c.gamma >= 0.0 && c.gamma < std::sqrt(n))) {
    throw parameter_error("cesaro_bound: coordinate momentum needs 0 <= gamma < sqrt(n)");
  }
  if (!(c.zeta >= 0.0)) {
    throw parameter_error("cesaro_bound: zeta must be nonnegative");
  }
  const double nmg = n - c.gamma;
  const double couple = c.gamma * c.gamma * (n - 1.0) / (nmg * nmg) +
                        c.zeta * c.gamma * c.gamma / n;
  if (!(couple <= c.zeta)) {
    throw parameter_error(
        "cesaro_bound: zeta too small, needs gamma^2 (n-1)/(n-gamma)^2 + zeta gamma^2 / n <= zeta");
  }
  const double weight = n * n + c.zeta * nmg * nmg;
  const double delta_cap = std::min(2.0, 2.0 * n * nmg / weight);
  if (!(c.delta > 0.0 && c.delta < delta_cap)) {
    throw parameter_error(
        "cesaro_bound: step size needs 0 < delta < min(2, 2n(n - gamma)/(n^2 + zeta (n - gamma)^2))");
  }
  const double denom =
      2.0 * c.delta * k * n *
      (2.0 * n * nmg - c.zeta * c.delta * nmg * nmg - c.delta * n * n);
  return (n * nmg * nmg * c.d0_sq + 2.0 * c.gamma * c.delta * weight * c.f0) / denom;
}

double encoding_length(const FeasibilityProblem& p) {
  if (p.m() == 0 || p.n() == 0) {
    throw dimension_error("encoding_length: empty system");
  }
  double s = 0.0;
  for (double e : p.A.data) s += std::log(std::abs(e) + 1.0);
  for (double e : p.b) s += std::log(std::abs(e) + 1.0);
  s += std::log(static_cast<double>(p.m()) * static_cast<double>(p.n()));
  return s + 2.0;
}

CertificateReport certificate_bound(const CertificateInputs& c, std::size_t k,
                                    LogBase base) {
  if (!(c.rho_bar > 0.0 && c.rho_bar < 1.0)) {
    throw no_certificate_error("certificate needs a contraction rate in (0, 1), got rho_bar=" +
                               std::to_string(c.rho_bar));
  }
  if (!(c.sigma > 0.0)) throw parameter_error("certificate needs sigma > 0");
  if (c.n < 1) throw parameter_error("certificate needs n >= 1");
  if (!(c.alpha >= 0.0)) throw parameter_error("certificate needs alpha >= 0");
  if (!(c.psi > 0.0)) {
    throw parameter_error("certificate needs psi > 0 (psi is the max original row norm)");
  }

  const double n = static_cast<double>(c.n);
  const auto lg = [base](double v) {
    return base == LogBase::two ? std::log2(v) : std::log(v);
  };
  CertificateReport rep;
  rep.min_k = (4.0 * c.sigma - 4.0 - lg(n) + lg(1.0 + c.alpha) + 2.0 * lg(c.psi)) /
              lg(1.0 / c.rho_bar);
  // p_bound in base-2 log space: the 2^(2 sigma - 2) factor is structural
  // and does not depend on the log-base toggle.
  const double log2_p = 0.5 * std::log2((1.0 + c.alpha) / n) + (2.0 * c.sigma - 2.0) +
                        std::log2(c.psi) +
                        0.5 * static_cast<double>(k) * std::log2(c.rho_bar);
  rep.p_bound = std::exp2(log2_p);
  return rep;
}

}  // namespace kmfeas
