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

#ifndef TCMG_LP_HPP_
#define TCMG_LP_HPP_

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcmg/rational.hpp"

namespace tcmg {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Constraint {
  std::vector<Rational> row;
  Relation relation = Relation::kGreaterEqual;
  Rational rhs;
  std::string label;
};

// maximize objective . x  subject to the constraints and per-variable bounds.
// A lower bound of nullopt makes the variable free; upper bounds are optional.
struct LinearProgram {
  explicit LinearProgram(int n = 0)
      : variable_count(n), objective(n), lower(n, Rational(0)), upper(n) {}

  int add_constraint(std::vector<Rational> row, Relation relation, Rational rhs,
                     std::string label = {});

  int variable_count;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  std::vector<std::optional<Rational>> lower;
  std::vector<std::optional<Rational>> upper;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> point;
  // Multipliers certifying optimality: for row i, duals[i] >= 0 on <=,
  // <= 0 on >=, free on =. upper_duals[j] >= 0 prices x_j <= upper[j].
  std::vector<Rational> duals;
  std::vector<Rational> upper_duals;
  std::vector<int> tight;  // constraint indices with zero slack at point
  long pivots = 0;

  bool optimal() const { return status == LpStatus::kOptimal; }
  std::vector<std::string> tight_labels(const LinearProgram& lp) const;
};

struct SolverLimits {
  long max_pivots = 1'000'000;
  int max_cuts = 10'000;
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact two-phase simplex on the condensed (dictionary) tableau with
// Bland's rule. Every optimal answer is checked against its dual
// certificate before it is returned; a failed check throws std::logic_error.
// Throws std::invalid_argument on dimension mismatch or duplicate labels and
// LimitExceeded past max_pivots.
LpSolution solve(const LinearProgram& lp, const SolverLimits& limits = {});

// Primal feasibility, dual feasibility and equal objectives, all exact.
bool certifies_optimality(const LinearProgram& lp, const LpSolution& solution);

// Returns a violated member of an implicit constraint family, or nullopt
// when the point satisfies the whole family.
using SeparationOracle = std::function<std::optional<Constraint>(const std::vector<Rational>&)>;

struct SeparationResult {
  LpSolution solution;
  std::vector<Constraint> cuts;  // generated rows, in generation order
};

// Cutting-plane loop: solve, ask the oracle, append the cut, repeat. Throws
// std::logic_error if the oracle returns a constraint the point satisfies
// and LimitExceeded after max_cuts rounds.
SeparationResult solve_with_separation(const LinearProgram& base, const SeparationOracle& oracle,
                                       const SolverLimits& limits = {});

struct FaceProbe {
  Rational value;
  std::vector<Rational> point;  // a maximizer of the probe on the face
};

// Maximizes probe . x over { x feasible : objective . x = optimum }.
// Throws std::invalid_argument when `optimum` is not attained and
// std::domain_error when the probe is unbounded on the face.
FaceProbe max_over_optimal_face(const LinearProgram& lp, const Rational& optimum,
                                const std::vector<Rational>& probe,
                                const SolverLimits& limits = {});

}  // namespace tcmg

#endif  // TCMG_LP_HPP_
