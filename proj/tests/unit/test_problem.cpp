// kmfeas: randomized projection solvers for linear feasibility (Ax <= b).
// SPDX-License-Identifier: MIT

#include <doctest.h>

#include <cmath>
#include <string>

#include "kmfeas/errors.hpp"
#include "kmfeas/instances.hpp"
#include "kmfeas/problem.hpp"
#include "kmfeas/rng.hpp"
#include "kmfeas/solvers.hpp"

using namespace kmfeas;

namespace {

FeasibilityProblem make_problem(std::size_t m, std::size_t n,
                                std::initializer_list<double> a,
                                std::initializer_list<double> rhs) {
  FeasibilityProblem p;
  p.A = DenseMatrix(m, n, 0.0);
  std::size_t i = 0;
  for (double v : a) p.A.data[i++] = v;
  REQUIRE(i == m * n);
  p.b = DenseVector(rhs);
  REQUIRE(p.b.size() == m);
  return p;
}

// Gap instance {x <= 0, x >= 1}: empty intersection with unit rows.
FeasibilityProblem gap_problem() {
  auto p = make_problem(2, 1, {1.0, -1.0}, {0.0, -1.0});
  p.normalized = true;
  return p;
}

}  // namespace

TEST_SUITE("problem") {

TEST_CASE("normalize_rows divides each row and rhs by the row norm") {
  auto p = make_problem(1, 2, {3.0, 4.0}, {10.0});
  auto q = normalize_rows(p);
  CHECK(q.A.at(0, 0) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(q.A.at(0, 1) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(q.b[0] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(q.normalized);
  CHECK(q.scale.row_norms[0] == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("normalize_rows records psi as the largest original row norm") {
  auto p = make_problem(2, 2, {3.0, 4.0, 1.0, 0.0}, {1.0, 1.0});
  auto q = normalize_rows(p);
  CHECK(q.scale.psi == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(q.scale.row_norms[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("normalize_rows is idempotent") {
  auto p = make_problem(2, 2, {3.0, 4.0, 0.5, -0.25}, {7.0, -1.0});
  auto q = normalize_rows(p);
  auto r = normalize_rows(q);
  for (std::size_t i = 0; i < q.A.data.size(); ++i)
    CHECK(std::fabs(r.A.data[i] - q.A.data[i]) <= 1e-15);
  for (std::size_t i = 0; i < q.b.size(); ++i)
    CHECK(std::fabs(r.b[i] - q.b[i]) <= 1e-15);
  // Re-normalizing unit rows reports unit norms.
  CHECK(r.scale.psi == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("normalize_rows rejects a zero row and names it") {
  auto p = make_problem(2, 2, {1.0, 0.0, 0.0, 0.0}, {1.0, 1.0});
  try {
    normalize_rows(p);
    FAIL("expected degenerate_error");
  } catch (const degenerate_error& e) {
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
}

TEST_CASE("positive_residual clips satisfied rows to zero") {
  auto p = make_problem(2, 2, {1.0, 0.0, 0.0, 1.0}, {1.0, 1.0});
  auto r = positive_residual(p, DenseVector{3.0, 0.0});
  CHECK(r[0] == 2.0);
  CHECK(r[1] == 0.0);

  auto q = make_problem(1, 2, {1.0, 1.0}, {0.0});
  auto r2 = positive_residual(q, DenseVector{-1.0, 3.0});
  CHECK(r2[0] == 2.0);

  CHECK_THROWS_AS(positive_residual(p, DenseVector{1.0}), dimension_error);
}

TEST_CASE("theta_max_violation on the gap instance") {
  auto p = gap_problem();
  CHECK(theta_max_violation(p, DenseVector{0.5}) == doctest::Approx(0.5).epsilon(1e-15));
  // Outside the gap the nearer constraint still bites.
  CHECK(theta_max_violation(p, DenseVector{2.0}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(theta_max_violation(p, DenseVector{-3.0}) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("fsc counts satisfied rows, boundary included") {
  auto p = make_problem(2, 2, {1.0, 0.0, 0.0, 1.0}, {1.0, 1.0});
  CHECK(fsc(p, DenseVector{0.0, 2.0}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(fsc(p, DenseVector{1.0, 1.0}) == 1.0);  // both rows tight
  CHECK(fsc(p, DenseVector{2.0, 2.0}) == 0.0);
}

TEST_CASE("distance to a single halfspace is the positive residual") {
  auto p = make_problem(1, 2, {1.0, 0.0}, {1.0});
  p.normalized = true;
  ProjectionOracle exact;
  exact.kind = ProjectionKind::exact_halfspace;
  CHECK(distance_to_polyhedron(p, DenseVector{3.0, 0.0}, exact) ==
        doctest::Approx(2.0).epsilon(1e-15));
  CHECK(distance_to_polyhedron(p, DenseVector{0.5, 7.0}, exact) == 0.0);

  ProjectionOracle dyk;
  dyk.kind = ProjectionKind::dykstra_general;
  CHECK(distance_to_polyhedron(p, DenseVector{3.0, 0.0}, dyk) ==
        doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("distance to the unit box matches the clamp formula and Dykstra") {
  // Box [0,1]^2 as four axis rows: x <= 1, y <= 1, -x <= 0, -y <= 0.
  auto p = make_problem(4, 2, {1, 0, 0, 1, -1, 0, 0, -1}, {1.0, 1.0, 0.0, 0.0});
  p.normalized = true;
  ProjectionOracle box;
  box.kind = ProjectionKind::exact_box;
  const DenseVector x{2.0, 2.0};
  double d_box = distance_to_polyhedron(p, x, box);
  CHECK(d_box == doctest::Approx(1.4142135623730951).epsilon(1e-15));

  ProjectionOracle dyk;
  dyk.kind = ProjectionKind::dykstra_general;
  double d_dyk = distance_to_polyhedron(p, x, dyk);
  CHECK(std::fabs(d_box - d_dyk) <= 1e-6);

  CHECK(distance_to_polyhedron(p, DenseVector{0.25, 0.75}, box) == 0.0);
}

TEST_CASE("exact oracles reject mismatched structure") {
  auto two_rows = make_problem(2, 2, {1, 0, 0, 1}, {1.0, 1.0});
  two_rows.normalized = true;
  ProjectionOracle half;
  half.kind = ProjectionKind::exact_halfspace;
  CHECK_THROWS_AS(distance_to_polyhedron(two_rows, DenseVector{0, 0}, half), contract_error);

  auto diag = make_problem(1, 2, {0.6, 0.8}, {1.0});
  diag.normalized = true;
  ProjectionOracle box;
  box.kind = ProjectionKind::exact_box;
  CHECK_THROWS_AS(distance_to_polyhedron(diag, DenseVector{0, 0}, box), contract_error);
}

TEST_CASE("Dykstra reports its best estimate when the sweep cap is too small") {
  auto p = make_problem(4, 2, {1, 0, 0, 1, -1, 0, 0, -1}, {1.0, 1.0, 0.0, 0.0});
  p.normalized = true;
  ProjectionOracle tight;
  tight.kind = ProjectionKind::dykstra_general;
  tight.max_sweeps = 1;
  tight.tolerance = 1e-14;
  try {
    distance_to_polyhedron(p, DenseVector{9.0, 9.0}, tight);
    FAIL("expected nonconvergence_error");
  } catch (const nonconvergence_error& e) {
    CHECK(e.best_estimate > 0.0);
    CHECK(std::isfinite(e.best_estimate));
  }
}

TEST_CASE("theta never exceeds the Euclidean distance on normalized instances") {
  ProjectionOracle dyk;
  Rng rng(314);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    RandomSpec spec;
    spec.kind = RandomKind::gaussian;
    spec.m = 12;
    spec.n = 3;
    spec.seed = seed;
    auto inst = gen_random(spec);
    auto p = normalize_rows(inst.problem);
    for (int rep = 0; rep < 10; ++rep) {
      DenseVector x(3);
      for (auto& v : x) v = 3.0 * rng.next_gaussian();
      double th = theta_max_violation(p, x);
      double d = distance_to_polyhedron(p, x, dyk);
      CHECK(th <= d + 1e-8);
    }
  }
}

TEST_CASE("zero residual, full fsc and zero theta coincide") {
  Rng rng(217);
  // Hand-built instance with a strictly interior witness: the 0.5 margin
  // dwarfs roundoff, so its positive residual is exactly zero.
  FeasibilityProblem raw;
  raw.A = DenseMatrix(15, 4);
  for (auto& v : raw.A.data) v = rng.next_gaussian();
  DenseVector witness(4);
  for (auto& v : witness) v = rng.next_gaussian();
  raw.b = matvec(raw.A, witness);
  for (auto& v : raw.b) v += 0.5;
  auto p = normalize_rows(raw);

  CHECK(norm2(positive_residual(p, witness)) == 0.0);
  CHECK(fsc(p, witness) == 1.0);
  CHECK(theta_max_violation(p, witness) == 0.0);

  for (int rep = 0; rep < 20; ++rep) {
    DenseVector x(4);
    for (auto& v : x) v = 4.0 * rng.next_gaussian();
    bool zero_res = norm2(positive_residual(p, x)) == 0.0;
    CHECK(zero_res == (fsc(p, x) == 1.0));
    CHECK(zero_res == (theta_max_violation(p, x) == 0.0));
  }
}

TEST_CASE("solver trajectories are invariant under pre-normalization") {
  RandomSpec spec;
  spec.kind = RandomKind::gaussian;
  spec.m = 20;
  spec.n = 5;
  spec.seed = 33;
  auto inst = gen_random(spec);
  auto pre = normalize_rows(inst.problem);

  SolverParams params;
  params.method = Method::mskm;
  params.beta = 4;
  params.delta = 1.2;
  params.gamma = 0.2;
  params.seed = 77;
  params.stop.max_iters = 300;
  params.stop.residual_tol = 0.0;

  DenseVector x0(5, 10.0);
  TraceConfig cfg;
  auto t_raw = run(inst.problem, x0, params, cfg);
  auto t_pre = run(pre, x0, params, cfg);
  REQUIRE(t_raw.records.size() == t_pre.records.size());
  for (std::size_t i = 0; i < t_raw.records.size(); ++i) {
    CHECK(t_raw.records[i].residual_norm == t_pre.records[i].residual_norm);
    CHECK(t_raw.records[i].fsc == t_pre.records[i].fsc);
  }
}

}  // TEST_SUITE
