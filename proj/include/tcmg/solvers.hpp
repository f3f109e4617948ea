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

#ifndef TCMG_SOLVERS_HPP_
#define TCMG_SOLVERS_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tcmg/game.hpp"
#include "tcmg/graph.hpp"
#include "tcmg/lp.hpp"
#include "tcmg/matching.hpp"
#include "tcmg/rational.hpp"

namespace tcmg {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedMethod : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SolverOptions {
  std::size_t oracle_cap = 12;         // max players for brute force
  int small_t_cap = 3;                 // essential-coalition path needs T <= this
  std::size_t essential_cap = 100000;  // max size-T matchings enumerated
  std::size_t mig_column_cap = 100000;
  SolverLimits lp;
};

enum class LeastCoreMethod {
  kCoreFormula,
  kClosedFormEcg,
  kClosedFormPerfect,
  kClosedFormBipartite,
  kConstraintGeneration,
  kBruteForce,
};

enum class LeastCoreStrategy { kAuto, kConstraintGeneration, kClosedForm, kBruteForce };

std::string_view method_name(LeastCoreMethod m);

struct LeastCoreResult {
  Rational epsilon;
  Imputation point;
  LeastCoreMethod method = LeastCoreMethod::kConstraintGeneration;
  std::vector<Coalition> certificate;  // tight minimal winning coalitions
};

LeastCoreResult least_core(const TcmGame& game,
                           LeastCoreStrategy strategy = LeastCoreStrategy::kAuto,
                           const SolverOptions& options = {});

// T = 1 only; throws std::invalid_argument otherwise.
LeastCoreResult ecg_least_core(const TcmGame& game);

// Bipartite graphs only; throws std::invalid_argument otherwise.
LeastCoreResult bipartite_least_core(const TcmGame& game);

LeastCoreResult perfect_matching_least_core(const TcmGame& game);

// Cutting planes over the size-T matching constraints, with separation by
// minimum-cost matching.
LeastCoreResult constraint_generation_least_core(const TcmGame& game,
                                                 const SolverLimits& limits = {});

struct ConvexWitness {
  std::vector<Matching> matchings;  // all of M_T, in enumeration order
  std::vector<Rational> weights;    // one per matching, summing to 1
  std::vector<int> positive;        // indices with positive weight
};

// Writes (2T/n, ..., 2T/n) as a convex combination of size-T matching
// indicators, if possible. Throws CapExceeded past `cap` matchings.
std::optional<ConvexWitness> uniform_convex_combination(const TcmGame& game,
                                                        std::size_t cap = 100000);

enum class NucleolusMethod {
  kCoreFormula,
  kSpecializedPerfect,
  kSpecializedBipartite,
  kSpecializedEcg,
  kEssential,
  kBruteForce,
};

enum class NucleolusStrategy { kAuto, kSpecialized, kEssential, kBruteForce };

std::string_view method_name(NucleolusMethod m);

struct NucleolusRound {
  Rational epsilon;
  // Specialized path.
  std::vector<Edge> fixed_edges;
  std::vector<Vertex> fixed_vertices;
  // Essential and brute-force paths.
  std::vector<Coalition> fixed_coalitions;
};

struct NucleolusResult {
  Imputation point;
  std::vector<NucleolusRound> rounds;
  NucleolusMethod method = NucleolusMethod::kBruteForce;
  std::vector<std::string> warnings;
};

NucleolusResult nucleolus(const TcmGame& game, NucleolusStrategy strategy = NucleolusStrategy::kAuto,
                          const SolverOptions& options = {});

// Edge and vertex program for perfect-matching, bipartite or T = 1 games
// with empty core. Throws UnsupportedMethod for other games.
NucleolusResult specialized_nucleolus(const TcmGame& game, const SolverLimits& limits = {});

// Sequential program over singletons, minimal winning coalitions, each of
// those plus one outside player, and V.
NucleolusResult essential_nucleolus(const TcmGame& game, std::size_t cap = 100000,
                                    const SolverLimits& limits = {});

struct MembershipVerdict {
  bool accepted = false;
  std::optional<Matching> violating_matching;
  std::optional<Vertex> violating_vertex;  // x_i < epsilon
  std::optional<Rational> min_matching_cost;
};

MembershipVerdict verify_least_core_membership(const TcmGame& game, const Imputation& x,
                                               const Rational& epsilon);

struct MigEquilibrium {
  Rational value;  // alpha
  Imputation interceptor;
  // Matcher mixed strategy, support only. Empty when the column cap was hit.
  std::optional<std::vector<std::pair<Matching, Rational>>> matcher;
  std::optional<Rational> delta;
  std::vector<std::string> warnings;
};

// Throws std::logic_error if a certificate fails its exact check.
MigEquilibrium mig_equilibrium(const TcmGame& game, const SolverOptions& options = {});

}  // namespace tcmg

#endif  // TCMG_SOLVERS_HPP_
