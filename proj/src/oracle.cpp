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

#include "tcmg/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "tcmg/sequential.hpp"

namespace tcmg {
namespace {

void check_cap(const TcmGame& game, std::size_t cap) {
  const auto n = static_cast<std::size_t>(game.player_count());
  if (n > cap || n >= static_cast<std::size_t>(kMaskBits)) {
    throw CapExceeded("brute force limited to " + std::to_string(cap) + " players, game has " +
                      std::to_string(n));
  }
}

}  // namespace

std::size_t oracle_cap_from_env(std::size_t fallback) {
  const char* raw = std::getenv("TCMG_ORACLE_CAP");
  if (raw == nullptr || *raw == '\0') return fallback;
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || raw[used] != '\0') {
    throw std::invalid_argument(std::string("TCMG_ORACLE_CAP is not a count: ") + raw);
  }
  return value;
}

ExcessProfile excess_profile(const TcmGame& game, const Imputation& x) {
  const int n = game.player_count();
  if (n >= 31) throw CapExceeded("excess profile limited to 30 players");
  ExcessProfile out;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    Coalition s = Coalition::from_mask(mask);
    Rational e = x.total(s) - game.value_of_mask(mask);
    out.entries.push_back({std::move(s), std::move(e)});
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const ExcessEntry& a, const ExcessEntry& b) {
    if (a.excess != b.excess) return a.excess < b.excess;
    return a.coalition.mask() < b.coalition.mask();
  });
  return out;
}

std::strong_ordering lex_compare(const ExcessProfile& a, const ExcessProfile& b) {
  if (a.entries.size() != b.entries.size()) {
    throw std::invalid_argument("excess profiles differ in length");
  }
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const int c = cmp(a.entries[i].excess, b.entries[i].excess);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

LeastCoreResult brute_force_least_core(const TcmGame& game, std::size_t cap,
                                       const SolverLimits& limits) {
  check_cap(game, cap);
  const int n = game.player_count();
  const int eps = n;
  LinearProgram lp(n + 1);
  lp.lower[eps] = std::nullopt;
  lp.objective[eps] = 1;
  {
    std::vector<Rational> row(n + 1, Rational(1));
    row[eps] = 0;
    lp.add_constraint(std::move(row), Relation::kEqual, 1);
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    std::vector<Rational> row(n + 1, Rational(0));
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) row[i] = 1;
    }
    row[eps] = -1;
    lp.add_constraint(std::move(row), Relation::kGreaterEqual, game.value_of_mask(mask));
  }
  const LpSolution s = solve(lp, limits);
  if (!s.optimal()) throw std::logic_error("least-core program not optimal");

  LeastCoreResult out;
  out.method = LeastCoreMethod::kBruteForce;
  out.epsilon = s.value;
  out.point = Imputation(std::vector<Rational>(s.point.begin(), s.point.begin() + n));
  if (n != 2 * game.threshold()) {
    const CostedMatching cm =
        min_cost_matching_of_size(game.graph(), out.point.payoffs(), game.threshold());
    if (cm.cost == 1 + out.epsilon) out.certificate.push_back(cm.matching.covered());
  }
  return out;
}

NucleolusResult nucleolus_over_family(const TcmGame& game, const std::vector<Coalition>& family,
                                      const SolverLimits& limits) {
  const int n = game.player_count();
  std::vector<SlpRow> rows;
  for (const Coalition& s : family) {
    if (s.empty() || s.size() == n) continue;
    rows.push_back({s, Rational(game.value(s))});
  }
  const SlpResult slp = run_sequential_lp(n, rows, limits);
  NucleolusResult out;
  out.method = NucleolusMethod::kBruteForce;
  out.point = Imputation(slp.point);
  for (const SlpRound& sr : slp.rounds) {
    NucleolusRound round;
    round.epsilon = sr.epsilon;
    for (int k : sr.fixed_rows) round.fixed_coalitions.push_back(rows[k].members);
    out.rounds.push_back(std::move(round));
  }
  return out;
}

OracleNucleolus brute_force_nucleolus(const TcmGame& game, std::size_t cap,
                                      const SolverLimits& limits) {
  check_cap(game, cap);
  const int n = game.player_count();
  std::vector<Coalition> family;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) family.push_back(Coalition::from_mask(mask));
  OracleNucleolus out;
  out.result = nucleolus_over_family(game, family, limits);
  out.profile = excess_profile(game, out.result.point);
  return out;
}

Rational brute_force_mig_value(const TcmGame& game, std::size_t matching_cap,
                               const SolverLimits& limits) {
  const int n = game.player_count();
  const MatchingEnumeration all =
      enumerate_matchings_of_size(game.graph(), game.threshold(), matching_cap);
  if (all.truncated) {
    throw CapExceeded("more than " + std::to_string(matching_cap) + " size-T matchings");
  }
  const int alpha = n;
  LinearProgram lp(n + 1);
  lp.lower[alpha] = std::nullopt;
  lp.objective[alpha] = 1;
  {
    std::vector<Rational> row(n + 1, Rational(1));
    row[alpha] = 0;
    lp.add_constraint(std::move(row), Relation::kEqual, 1);
  }
  for (const Matching& m : all.matchings) {
    std::vector<Rational> row(n + 1, Rational(0));
    for (Vertex v : m.covered()) row[v] = 1;
    row[alpha] = -1;
    lp.add_constraint(std::move(row), Relation::kGreaterEqual, 0);
  }
  const LpSolution s = solve(lp, limits);
  if (!s.optimal()) throw std::logic_error("intercept game program not optimal");
  return s.value;
}

}  // namespace tcmg
