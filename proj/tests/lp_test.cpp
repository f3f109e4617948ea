// Copyright 2026 The tcmg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tcmg/lp.hpp"

#include "brute.hpp"
#include "doctest.h"
#include "graph_zoo.hpp"
#include "tcmg/matching.hpp"

namespace tcmg {
namespace {

// Variables x_0..x_{n-1} >= 0 and a free epsilon last; maximize epsilon with x(V) = 1.
LinearProgram epsilon_lp(int n) {
  LinearProgram lp(n + 1);
  lp.objective[n] = 1;
  lp.lower[n] = std::nullopt;
  std::vector<Rational> ones(n + 1, Rational(1));
  ones[n] = 0;
  lp.add_constraint(ones, Relation::kEqual, 1, "total");
  return lp;
}

std::vector<Rational> set_row(int n, std::initializer_list<int> members) {
  std::vector<Rational> row(n + 1);
  for (int i : members) row[i] = 1;
  row[n] = -1;
  return row;
}

TEST_CASE("two players, one edge") {
  LinearProgram lp = epsilon_lp(2);
  lp.add_constraint(set_row(2, {0, 1}), Relation::kGreaterEqual, 1, "e");
  const LpSolution s = solve(lp);
  REQUIRE(s.optimal());
  CHECK(s.value == 0);
  CHECK(certifies_optimality(lp, s));
}

TEST_CASE("triangle least core") {
  LinearProgram lp = epsilon_lp(3);
  lp.add_constraint(set_row(3, {0, 1}), Relation::kGreaterEqual, 1, "01");
  lp.add_constraint(set_row(3, {0, 2}), Relation::kGreaterEqual, 1, "02");
  lp.add_constraint(set_row(3, {1, 2}), Relation::kGreaterEqual, 1, "12");
  const LpSolution s = solve(lp);
  REQUIRE(s.optimal());
  CHECK(s.value == frac(-1, 3));
  CHECK(s.point == std::vector<Rational>{frac(1, 3), frac(1, 3), frac(1, 3), frac(-1, 3)});
  CHECK(certifies_optimality(lp, s));
  const auto labels = s.tight_labels(lp);
  CHECK(labels.size() == 4);

  const FaceProbe p = max_over_optimal_face(lp, s.value, lp.constraints[1].row);
  CHECK(p.value == 1);  // x0 + x1 - eps on the single optimal point
  std::vector<Rational> pair = {1, 1, 0, 0};
  CHECK(max_over_optimal_face(lp, s.value, pair).value == frac(2, 3));
  CHECK(max_over_optimal_face(lp, s.value, lp.objective).value == s.value);
}

TEST_CASE("infeasible and unbounded") {
  LinearProgram lp(1);
  lp.add_constraint({1}, Relation::kGreaterEqual, 1, "a");
  lp.add_constraint({1}, Relation::kLessEqual, 0, "b");
  CHECK(solve(lp).status == LpStatus::kInfeasible);

  LinearProgram up(2);
  up.objective = {1, 0};
  up.add_constraint({1, -1}, Relation::kLessEqual, 3, "c");
  CHECK(solve(up).status == LpStatus::kUnbounded);
}

TEST_CASE("free variables and bounds") {
  LinearProgram lp(2);
  lp.objective = {-1, -1};
  lp.lower = {std::nullopt, Rational(-5)};
  lp.add_constraint({1, 1}, Relation::kGreaterEqual, -7, "a");
  lp.add_constraint({1, 0}, Relation::kGreaterEqual, frac(-3, 2), "b");
  const LpSolution s = solve(lp);
  REQUIRE(s.optimal());
  CHECK(s.value == frac(13, 2));
  CHECK(s.point == std::vector<Rational>{frac(-3, 2), -5});
  CHECK(s.point[0] >= frac(-3, 2));
  CHECK(s.point[1] >= -5);
  CHECK(certifies_optimality(lp, s));

  LinearProgram ub(2);
  ub.objective = {1, 2};
  ub.upper = {Rational(3), Rational(1)};
  ub.add_constraint({1, 1}, Relation::kLessEqual, 10, "a");
  const LpSolution t = solve(ub);
  REQUIRE(t.optimal());
  CHECK(t.value == 5);
  CHECK(certifies_optimality(ub, t));
}

TEST_CASE("tampered solution fails the certificate") {
  LinearProgram lp = epsilon_lp(3);
  lp.add_constraint(set_row(3, {0, 1}), Relation::kGreaterEqual, 1, "01");
  lp.add_constraint(set_row(3, {1, 2}), Relation::kGreaterEqual, 1, "12");
  LpSolution s = solve(lp);
  REQUIRE(s.optimal());
  CHECK(certifies_optimality(lp, s));
  s.value += 1;
  CHECK_FALSE(certifies_optimality(lp, s));
}

TEST_CASE("input validation") {
  LinearProgram lp(2);
  lp.add_constraint({1, 0}, Relation::kEqual, 0, "dup");
  lp.add_constraint({0, 1}, Relation::kEqual, 0, "dup");
  CHECK_THROWS_AS(solve(lp), std::invalid_argument);
  LinearProgram bad(2);
  bad.constraints.push_back({{1, 2, 3}, Relation::kEqual, 0, "x"});
  CHECK_THROWS_AS(solve(bad), std::invalid_argument);
}

TEST_CASE("face of an infeasible level") {
  LinearProgram lp = epsilon_lp(2);
  lp.add_constraint(set_row(2, {0, 1}), Relation::kGreaterEqual, 1, "e");
  CHECK_THROWS_AS(max_over_optimal_face(lp, 5, lp.objective), std::invalid_argument);
  CHECK_THROWS_AS(max_over_optimal_face(lp, 0, {1, 0}), std::invalid_argument);
}

TEST_CASE("full dimensional face leaves a loose row loose") {
  // max 0 over the simplex: every point is optimal.
  LinearProgram lp(3);
  lp.add_constraint({1, 1, 1}, Relation::kEqual, 1, "total");
  lp.add_constraint({1, 0, 0}, Relation::kGreaterEqual, 0, "x0");
  const FaceProbe p = max_over_optimal_face(lp, 0, {1, 0, 0});
  CHECK(p.value == 1);
}

TEST_CASE("pivot limit") {
  LinearProgram lp = epsilon_lp(3);
  lp.add_constraint(set_row(3, {0, 1}), Relation::kGreaterEqual, 1, "01");
  SolverLimits limits;
  limits.max_pivots = 0;
  CHECK_THROWS_AS(solve(lp, limits), LimitExceeded);
}

SeparationOracle matching_oracle(const Graph& g, int t) {
  return [g, t](const std::vector<Rational>& point) -> std::optional<Constraint> {
    const int n = g.vertex_count();
    const std::vector<Rational> costs(point.begin(), point.begin() + n);
    const CostedMatching m = min_cost_matching_of_size(g, costs, t);
    if (m.cost >= 1 + point[n]) return std::nullopt;
    std::vector<Rational> row(n + 1);
    std::string label = "M";
    for (Vertex v : m.matching.covered()) {
      row[v] = 1;
      label += ":" + std::to_string(v);
    }
    row[n] = -1;
    return Constraint{row, Relation::kGreaterEqual, 1, label};
  };
}

// Adds x_i - eps >= 0 for every player.
LinearProgram singleton_lp(int n) {
  LinearProgram lp = epsilon_lp(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> row(n + 1);
    row[i] = 1;
    row[n] = -1;
    lp.add_constraint(row, Relation::kGreaterEqual, 0, "v" + std::to_string(i));
  }
  return lp;
}

TEST_CASE("separation on the six-cycle at threshold two") {
  const Graph g = zoo::cycle(6);
  const LinearProgram base = singleton_lp(6);
  const SeparationResult r = solve_with_separation(base, matching_oracle(g, 2));
  REQUIRE(r.solution.optimal());
  CHECK(r.solution.value == frac(-1, 3));
  CHECK(r.cuts.size() <= brute::matchings_of_size(g, 2).size());

  LinearProgram full = base;
  for (const auto& m : brute::matchings_of_size(g, 2)) {
    std::vector<Rational> row(7);
    for (const Edge& e : m) row[e.u] = row[e.v] = 1;
    row[6] = -1;
    std::string label = "m";
    for (const Edge& e : m) label += ":" + std::to_string(e.u) + "-" + std::to_string(e.v);
    full.add_constraint(row, Relation::kGreaterEqual, 1, label);
  }
  CHECK(solve(full).value == r.solution.value);

  // Already complete: nothing to add.
  const SeparationResult again = solve_with_separation(full, matching_oracle(g, 2));
  CHECK(again.cuts.empty());
  CHECK(again.solution.value == frac(-1, 3));

  const SeparationResult none = solve_with_separation(
      base, [](const std::vector<Rational>&) { return std::optional<Constraint>{}; });
  CHECK(none.cuts.empty());
  CHECK(none.solution.value == solve(base).value);
}

TEST_CASE("separation cut limit") {
  const LinearProgram base = singleton_lp(6);
  SolverLimits limits;
  limits.max_cuts = 0;
  CHECK_THROWS_AS(solve_with_separation(base, matching_oracle(zoo::cycle(6), 2), limits),
                  LimitExceeded);
}

TEST_CASE("separation agrees with the explicit family on small games") {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : zoo::connected_graphs(n)) {
      const int vs = brute::max_matching(g);
      for (int t = 1; t <= vs; ++t) {
        if (2 * t == n) continue;  // cut rows then equal x(V) - eps
        const LinearProgram base = singleton_lp(n);
        LinearProgram full = base;
        int k = 0;
        for (const auto& m : brute::matchings_of_size(g, t)) {
          std::vector<Rational> row(n + 1);
          for (const Edge& e : m) row[e.u] = row[e.v] = 1;
          row[n] = -1;
          full.add_constraint(row, Relation::kGreaterEqual, 1, std::to_string(k++));
        }
        const LpSolution a = solve(full);
        const SeparationResult b = solve_with_separation(base, matching_oracle(g, t));
        REQUIRE(a.optimal());
        REQUIRE(b.solution.optimal());
        CHECK(a.value == b.solution.value);
        CHECK(certifies_optimality(full, a));
      }
    }
  }
}

TEST_CASE("determinism") {
  LinearProgram lp = epsilon_lp(4);
  lp.add_constraint(set_row(4, {0, 1}), Relation::kGreaterEqual, 1, "01");
  lp.add_constraint(set_row(4, {2, 3}), Relation::kGreaterEqual, 1, "23");
  lp.add_constraint(set_row(4, {1, 2}), Relation::kGreaterEqual, 1, "12");
  const LpSolution a = solve(lp);
  const LpSolution b = solve(lp);
  CHECK(a.point == b.point);
  CHECK(a.pivots == b.pivots);
}

}  // namespace
}  // namespace tcmg
