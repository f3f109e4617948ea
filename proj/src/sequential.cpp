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

#include "tcmg/sequential.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace tcmg {
namespace {

// Row-echelon basis over the rationals.
class SpanBasis {
 public:
  explicit SpanBasis(int n) : n_(n) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  // Adds v if independent. Returns true when it was added.
  bool add(std::vector<Rational> v) {
    const int p = reduce(v);
    if (p < 0) return false;
    const Rational lead = v[p];
    for (Rational& a : v) a /= lead;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  bool spans(std::vector<Rational> v) const { return reduce(v) < 0; }

 private:
  // Reduces v in place; returns the first nonzero column or -1.
  int reduce(std::vector<Rational>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const int p = pivots_[k];
      if (sgn(v[p]) == 0) continue;
      const Rational f = v[p];
      for (int j = 0; j < n_; ++j) {
        if (sgn(rows_[k][j]) != 0) v[j] -= f * rows_[k][j];
      }
    }
    for (int j = 0; j < n_; ++j) {
      if (sgn(v[j]) != 0) return j;
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

std::vector<Rational> indicator(int n, const Coalition& s) {
  std::vector<Rational> v(n, Rational(0));
  for (Vertex i : s) v[i] = 1;
  return v;
}

}  // namespace

SlpResult run_sequential_lp(int n, const std::vector<SlpRow>& rows, const SolverLimits& limits) {
  if (n < 1) throw std::invalid_argument("sequential program needs at least one player");
  for (const SlpRow& r : rows) {
    if (!r.members.empty() && r.members.members().back() >= n) {
      throw std::invalid_argument("row member out of range");
    }
  }

  // Identical rows share one representative.
  std::vector<int> rep(rows.size());
  std::vector<std::vector<int>> copies(rows.size());
  {
    std::map<std::pair<Coalition, Rational>, int> seen;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto [it, fresh] = seen.try_emplace({rows[i].members, rows[i].base}, static_cast<int>(i));
      rep[i] = it->second;
      copies[it->second].push_back(static_cast<int>(i));
    }
  }

  SpanBasis basis(n);
  basis.add(std::vector<Rational>(n, Rational(1)));
  std::vector<int> free_rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rep[i] == static_cast<int>(i) && !basis.spans(indicator(n, rows[i].members))) {
      free_rows.push_back(static_cast<int>(i));
    }
  }
  std::vector<std::pair<int, Rational>> fixed;  // row, level

  SlpResult out;
  while (true) {
    if (free_rows.empty()) {
      throw std::logic_error("sequential program: rows do not determine a unique point");
    }
    if (static_cast<int>(out.rounds.size()) >= n) {
      throw std::logic_error("sequential program: no convergence within n rounds");
    }

    const int eps = n;
    LinearProgram lp(n + 1);
    lp.lower[eps] = std::nullopt;
    lp.objective[eps] = 1;
    lp.add_constraint(indicator(n + 1, Coalition::all(n)), Relation::kEqual, 1);
    for (const auto& [r, level] : fixed) {
      lp.add_constraint(indicator(n + 1, rows[r].members), Relation::kEqual,
                        rows[r].base + level);
    }
    const int first_free = static_cast<int>(lp.constraints.size());
    for (int r : free_rows) {
      std::vector<Rational> row = indicator(n + 1, rows[r].members);
      row[eps] = -1;
      lp.add_constraint(std::move(row), Relation::kGreaterEqual, rows[r].base);
    }

    const LpSolution sol = solve(lp, limits);
    if (!sol.optimal()) throw std::logic_error("sequential program: round LP not optimal");
    const Rational level = sol.value;

    // Positive dual weight forces tightness on the whole face; the rest of
    // the tight rows go through the face probe.
    std::vector<bool> is_fixed(free_rows.size(), false);
    std::vector<int> candidates;
    for (std::size_t k = 0; k < free_rows.size(); ++k) {
      const int c = first_free + static_cast<int>(k);
      Rational slack = -rows[free_rows[k]].base;
      for (int j = 0; j <= n; ++j) slack += lp.constraints[c].row[j] * sol.point[j];
      if (sgn(slack) != 0) continue;
      if (sgn(sol.duals[c]) != 0) {
        is_fixed[k] = true;
      } else {
        candidates.push_back(static_cast<int>(k));
      }
    }
    while (!candidates.empty()) {
      std::vector<Rational> probe(n + 1, Rational(0));
      for (int k : candidates) {
        for (Vertex v : rows[free_rows[k]].members) probe[v] += 1;
      }
      const FaceProbe fp = max_over_optimal_face(lp, level, probe, limits);
      std::vector<int> still;
      for (int k : candidates) {
        Rational slack = -rows[free_rows[k]].base - fp.point[eps];
        for (Vertex v : rows[free_rows[k]].members) slack += fp.point[v];
        if (sgn(slack) == 0) still.push_back(k);
      }
      if (still.size() == candidates.size()) {
        for (int k : candidates) is_fixed[k] = true;
        break;
      }
      candidates = std::move(still);
    }

    SlpRound round;
    round.epsilon = level;
    std::vector<int> remaining;
    for (std::size_t k = 0; k < free_rows.size(); ++k) {
      const int r = free_rows[k];
      if (is_fixed[k]) {
        fixed.emplace_back(r, level);
        basis.add(indicator(n, rows[r].members));
        round.fixed_rows.insert(round.fixed_rows.end(), copies[r].begin(), copies[r].end());
      } else {
        remaining.push_back(r);
      }
    }
    if (round.fixed_rows.empty()) {
      throw std::logic_error("sequential program: round fixed no row");
    }
    std::sort(round.fixed_rows.begin(), round.fixed_rows.end());
    out.rounds.push_back(std::move(round));

    if (basis.rank() == n) {
      out.point.assign(sol.point.begin(), sol.point.begin() + n);
      return out;
    }
    free_rows.clear();
    for (int r : remaining) {
      if (!basis.spans(indicator(n, rows[r].members))) free_rows.push_back(r);
    }
  }
}

}  // namespace tcmg
