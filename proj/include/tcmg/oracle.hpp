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

#ifndef TCMG_ORACLE_HPP_
#define TCMG_ORACLE_HPP_

#include <compare>
#include <cstddef>
#include <vector>

#include "tcmg/game.hpp"
#include "tcmg/solvers.hpp"

namespace tcmg {

// Reads TCMG_ORACLE_CAP, falling back to `fallback` when unset.
// Throws std::invalid_argument on a malformed value.
std::size_t oracle_cap_from_env(std::size_t fallback = 12);

struct ExcessEntry {
  Coalition coalition;
  Rational excess;
};

// Every proper nonempty coalition, ascending by excess, ties by bitmask.
struct ExcessProfile {
  std::vector<ExcessEntry> entries;
};

ExcessProfile excess_profile(const TcmGame& game, const Imputation& x);

// Lexicographic order of the excess sequences; greater is better.
// Throws std::invalid_argument on a length mismatch.
std::strong_ordering lex_compare(const ExcessProfile& a, const ExcessProfile& b);

// Throws CapExceeded when the game has more than `cap` players.
LeastCoreResult brute_force_least_core(const TcmGame& game, std::size_t cap = 12,
                                       const SolverLimits& limits = {});

struct OracleNucleolus {
  NucleolusResult result;
  ExcessProfile profile;
};

OracleNucleolus brute_force_nucleolus(const TcmGame& game, std::size_t cap = 12,
                                      const SolverLimits& limits = {});

// Sequential program restricted to `family`. V and the empty set are
// ignored.
NucleolusResult nucleolus_over_family(const TcmGame& game, const std::vector<Coalition>& family,
                                      const SolverLimits& limits = {});

// Value of the intercept game from the full payoff matrix over every
// size-T matching. Throws CapExceeded past `matching_cap` matchings.
Rational brute_force_mig_value(const TcmGame& game, std::size_t matching_cap = 100000,
                               const SolverLimits& limits = {});

}  // namespace tcmg

#endif  // TCMG_ORACLE_HPP_
