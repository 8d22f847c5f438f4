// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT
//
// Error taxonomy. Every failure mode the library raises derives from
// kmfeas::error so callers can catch one base type; the concrete classes
// map onto distinct caller reactions (fix the call, fix the data, retry
// with different parameters, give up and report).

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kmfeas {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched or non-square shapes.
class dimension_error : public error {
 public:
  using error::error;
};

// A scalar argument outside its admissible range (delta, gamma, t, beta...).
class parameter_error : public error {
 public:
  using error::error;
};

// Data not in the state an operation requires (e.g. rows not normalized,
// oracle kind not matching the problem structure).
class contract_error : public error {
 public:
  using error::error;
};

// Structurally unusable input: zero row, numerically zero spectrum.
class degenerate_error : public error {
 public:
  using error::error;
};

// File ingestion failure; message names the offending line.
class parse_error : public error {
 public:
  using error::error;
};

class io_error : public error {
 public:
  using error::error;
};

// Combinatorial guard exceeded (brute-force enumeration too large).
class guard_error : public error {
 public:
  using error::error;
};

// Iterate left the finite range. Carries the last finite iterate so the
// caller can report where the run stood.
class divergence_error : public error {
 public:
  divergence_error(const std::string& what, std::vector<double> last_finite,
                   std::size_t iteration)
      : error(what), last_finite(std::move(last_finite)), iteration(iteration) {}
  std::vector<double> last_finite;
  std::size_t iteration = 0;
};

// An iterative subroutine hit its cap; carries the best estimate so far.
class nonconvergence_error : public error {
 public:
  nonconvergence_error(const std::string& what, double best_estimate)
      : error(what), best_estimate(best_estimate) {}
  double best_estimate = 0.0;
};

// Certificate quantities requested for a non-contracting rate.
class no_certificate_error : public error {
 public:
  using error::error;
};

}  // namespace kmfeas
