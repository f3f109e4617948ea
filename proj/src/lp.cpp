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

#include <algorithm>
#include <unordered_set>

namespace tcmg {

int LinearProgram::add_constraint(std::vector<Rational> row, Relation relation, Rational rhs,
                                  std::string label) {
  constraints.push_back({std::move(row), relation, std::move(rhs), std::move(label)});
  return static_cast<int>(constraints.size()) - 1;
}

std::vector<std::string> LpSolution::tight_labels(const LinearProgram& lp) const {
  std::vector<std::string> out;
  for (int i : tight) out.push_back(lp.constraints[i].label);
  return out;
}

namespace {

void validate(const LinearProgram& lp) {
  const auto n = static_cast<std::size_t>(lp.variable_count);
  if (lp.variable_count < 0 || lp.objective.size() != n || lp.lower.size() != n ||
      lp.upper.size() != n) {
    throw std::invalid_argument("linear program: objective or bounds length mismatch");
  }
  std::unordered_set<std::string> labels;
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const Constraint& c = lp.constraints[i];
    if (c.row.size() != n) {
      throw std::invalid_argument("linear program: row " + std::to_string(i) +
                                  " has wrong length");
    }
    if (!c.label.empty() && !labels.insert(c.label).second) {
      throw std::invalid_argument("linear program: duplicate label '" + c.label + "'");
    }
  }
}

// max c.z  s.t.  A z <= b, z >= 0, solved on a dictionary
//   x_B[i] = b[i] - sum_j T[i][j] x_N[j],   z = z0 + sum_j d[j] x_N[j].
class Dictionary {
 public:
  Dictionary(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
             std::vector<Rational> c, long max_pivots)
      : rows_(static_cast<int>(b.size())),
        structural_(static_cast<int>(c.size())),
        t_(std::move(a)),
        b_(std::move(b)),
        c_(std::move(c)),
        max_pivots_(max_pivots) {
    cols_ = structural_;
    nonbasic_.resize(cols_);
    for (int j = 0; j < cols_; ++j) nonbasic_[j] = j;
    basic_.resize(rows_);
    for (int i = 0; i < rows_; ++i) basic_[i] = structural_ + i;
  }

  LpStatus run() {
    if (!phase_one()) return LpStatus::kInfeasible;
    set_objective_from_costs();
    return iterate() ? LpStatus::kOptimal : LpStatus::kUnbounded;
  }

  Rational objective_value() const { return z0_; }
  long pivots() const { return pivots_; }

  std::vector<Rational> primal() const {
    std::vector<Rational> z(structural_, Rational(0));
    for (int i = 0; i < rows_; ++i) {
      if (basic_[i] < structural_) z[basic_[i]] = b_[i];
    }
    return z;
  }

  // Shadow price of each row's right-hand side.
  std::vector<Rational> row_duals() const {
    std::vector<Rational> y(rows_, Rational(0));
    for (int j = 0; j < cols_; ++j) {
      const int var = nonbasic_[j];
      if (var >= structural_ && var < structural_ + rows_) y[var - structural_] = -d_[j];
    }
    return y;
  }

 private:
  bool phase_one() {
    int worst = -1;
    for (int i = 0; i < rows_; ++i) {
      if (b_[i] < 0 && (worst == -1 || b_[i] < b_[worst])) worst = i;
    }
    if (worst == -1) return true;
    const int aux = structural_ + rows_;
    for (auto& row : t_) row.emplace_back(-1);
    nonbasic_.push_back(aux);
    ++cols_;
    d_.assign(cols_, Rational(0));
    d_[cols_ - 1] = -1;
    z0_ = 0;
    pivot(worst, cols_ - 1);
    iterate();
    if (z0_ < 0) return false;
    for (int i = 0; i < rows_; ++i) {
      if (basic_[i] != aux) continue;
      int best = -1;
      for (int j = 0; j < cols_; ++j) {
        if (sgn(t_[i][j]) != 0 && (best == -1 || nonbasic_[j] < nonbasic_[best])) best = j;
      }
      if (best != -1) pivot(i, best);
      break;
    }
    const auto where = std::find(nonbasic_.begin(), nonbasic_.end(), aux);
    if (where == nonbasic_.end()) {
      // Redundant row: aux stayed basic at zero with an all-zero row. The row
      // carries no information, so it is pinned to zero and never leaves.
      for (int i = 0; i < rows_; ++i) {
        if (basic_[i] == aux) {
          dead_rows_.push_back(i);
        }
      }
      return true;
    }
    const int col = static_cast<int>(where - nonbasic_.begin());
    for (auto& row : t_) row.erase(row.begin() + col);
    nonbasic_.erase(nonbasic_.begin() + col);
    --cols_;
    return true;
  }

  void set_objective_from_costs() {
    d_.assign(cols_, Rational(0));
    z0_ = 0;
    for (int j = 0; j < cols_; ++j) {
      if (nonbasic_[j] < structural_) d_[j] = c_[nonbasic_[j]];
    }
    for (int i = 0; i < rows_; ++i) {
      const int var = basic_[i];
      if (var >= structural_ || sgn(c_[var]) == 0) continue;
      z0_ += c_[var] * b_[i];
      for (int j = 0; j < cols_; ++j) {
        if (sgn(t_[i][j]) != 0) d_[j] -= c_[var] * t_[i][j];
      }
    }
  }

  // Bland's rule. Returns false when the objective is unbounded.
  bool iterate() {
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (sgn(d_[j]) > 0 && (enter == -1 || nonbasic_[j] < nonbasic_[enter])) enter = j;
      }
      if (enter == -1) return true;
      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < rows_; ++i) {
        if (sgn(t_[i][enter]) <= 0 || is_dead(i)) continue;
        Rational ratio = b_[i] / t_[i][enter];
        if (leave == -1 || ratio < best_ratio ||
            (ratio == best_ratio && basic_[i] < basic_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == -1) return false;
      pivot(leave, enter);
    }
  }

  bool is_dead(int row) const {
    return std::find(dead_rows_.begin(), dead_rows_.end(), row) != dead_rows_.end();
  }

  void pivot(int r, int c) {
    if (++pivots_ > max_pivots_) throw LimitExceeded("simplex pivot limit exceeded");
    const Rational inv = 1 / t_[r][c];
    auto& prow = t_[r];
    b_[r] *= inv;
    for (int j = 0; j < cols_; ++j) {
      if (j != c && sgn(prow[j]) != 0) prow[j] *= inv;
    }
    prow[c] = inv;
    Rational f;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || sgn(t_[i][c]) == 0) continue;
      f = t_[i][c];
      auto& row = t_[i];
      b_[i] -= f * b_[r];
      for (int j = 0; j < cols_; ++j) {
        if (j != c && sgn(prow[j]) != 0) row[j] -= f * prow[j];
      }
      row[c] = -f * prow[c];
    }
    if (sgn(d_[c]) != 0) {
      f = d_[c];
      z0_ += f * b_[r];
      for (int j = 0; j < cols_; ++j) {
        if (j != c && sgn(prow[j]) != 0) d_[j] -= f * prow[j];
      }
      d_[c] = -f * prow[c];
    }
    std::swap(nonbasic_[c], basic_[r]);
  }

  int rows_;
  int structural_;
  int cols_ = 0;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> b_;
  std::vector<Rational> c_;
  std::vector<Rational> d_;
  Rational z0_ = 0;
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
  std::vector<int> dead_rows_;
  long pivots_ = 0;
  long max_pivots_;
};

// Where an original row or bound landed in the standard form.
struct RowMap {
  int le = -1;  // standard row holding  a.x <= b
  int ge = -1;  // standard row holding -a.x <= -b
};

}  // namespace

LpSolution solve(const LinearProgram& lp, const SolverLimits& limits) {
  validate(lp);
  const int n = lp.variable_count;
  LpSolution out;
  for (int j = 0; j < n; ++j) {
    if (lp.lower[j] && lp.upper[j] && *lp.upper[j] < *lp.lower[j]) return out;
  }

  // x_j = lower_j + z_j, or z_j+ - z_j- when free.
  std::vector<int> plus_col(n), minus_col(n, -1);
  int cols = 0;
  for (int j = 0; j < n; ++j) {
    plus_col[j] = cols++;
    if (!lp.lower[j]) minus_col[j] = cols++;
  }
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  auto push_row = [&](const std::vector<Rational>& row, const Rational& rhs, bool negate) {
    std::vector<Rational> std_row(cols, Rational(0));
    Rational shifted = rhs;
    for (int j = 0; j < n; ++j) {
      if (sgn(row[j]) == 0) continue;
      if (lp.lower[j]) shifted -= row[j] * *lp.lower[j];
      std_row[plus_col[j]] = negate ? Rational(-row[j]) : row[j];
      if (minus_col[j] >= 0) std_row[minus_col[j]] = negate ? row[j] : Rational(-row[j]);
    }
    a.push_back(std::move(std_row));
    b.push_back(negate ? Rational(-shifted) : shifted);
    return static_cast<int>(b.size()) - 1;
  };
  std::vector<RowMap> row_map(lp.constraints.size());
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const Constraint& con = lp.constraints[i];
    if (con.relation != Relation::kGreaterEqual) row_map[i].le = push_row(con.row, con.rhs, false);
    if (con.relation != Relation::kLessEqual) row_map[i].ge = push_row(con.row, con.rhs, true);
  }
  std::vector<int> upper_row(n, -1);
  for (int j = 0; j < n; ++j) {
    if (!lp.upper[j]) continue;
    std::vector<Rational> unit(n, Rational(0));
    unit[j] = 1;
    upper_row[j] = push_row(unit, *lp.upper[j], false);
  }
  std::vector<Rational> c(cols, Rational(0));
  Rational constant = 0;
  for (int j = 0; j < n; ++j) {
    c[plus_col[j]] = lp.objective[j];
    if (minus_col[j] >= 0) c[minus_col[j]] = -lp.objective[j];
    if (lp.lower[j]) constant += lp.objective[j] * *lp.lower[j];
  }

  Dictionary dict(std::move(a), std::move(b), std::move(c), limits.max_pivots);
  out.status = dict.run();
  out.pivots = dict.pivots();
  if (out.status != LpStatus::kOptimal) return out;

  const std::vector<Rational> z = dict.primal();
  out.point.assign(n, Rational(0));
  for (int j = 0; j < n; ++j) {
    out.point[j] = z[plus_col[j]];
    if (minus_col[j] >= 0) out.point[j] -= z[minus_col[j]];
    if (lp.lower[j]) out.point[j] += *lp.lower[j];
  }
  out.value = dict.objective_value() + constant;

  const std::vector<Rational> y = dict.row_duals();
  out.duals.assign(lp.constraints.size(), Rational(0));
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    if (row_map[i].le >= 0) out.duals[i] += y[row_map[i].le];
    if (row_map[i].ge >= 0) out.duals[i] -= y[row_map[i].ge];
  }
  out.upper_duals.assign(n, Rational(0));
  for (int j = 0; j < n; ++j) {
    if (upper_row[j] >= 0) out.upper_duals[j] = y[upper_row[j]];
  }
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const Constraint& con = lp.constraints[i];
    Rational lhs = 0;
    for (int j = 0; j < n; ++j) {
      if (sgn(con.row[j]) != 0) lhs += con.row[j] * out.point[j];
    }
    if (lhs == con.rhs) out.tight.push_back(static_cast<int>(i));
  }
  if (!certifies_optimality(lp, out)) {
    throw std::logic_error("simplex produced an optimum without a valid dual certificate");
  }
  return out;
}

bool certifies_optimality(const LinearProgram& lp, const LpSolution& s) {
  if (!s.optimal()) return false;
  const int n = lp.variable_count;
  if (static_cast<int>(s.point.size()) != n || s.duals.size() != lp.constraints.size() ||
      static_cast<int>(s.upper_duals.size()) != n) {
    return false;
  }
  Rational primal = 0;
  for (int j = 0; j < n; ++j) {
    if (lp.lower[j] && s.point[j] < *lp.lower[j]) return false;
    if (lp.upper[j] && s.point[j] > *lp.upper[j]) return false;
    primal += lp.objective[j] * s.point[j];
  }
  if (primal != s.value) return false;
  std::vector<Rational> reduced = lp.objective;
  Rational dual = 0;
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const Constraint& con = lp.constraints[i];
    const Rational& y = s.duals[i];
    Rational lhs = 0;
    for (int j = 0; j < n; ++j) {
      if (sgn(con.row[j]) == 0) continue;
      lhs += con.row[j] * s.point[j];
      if (sgn(y) != 0) reduced[j] -= y * con.row[j];
    }
    switch (con.relation) {
      case Relation::kLessEqual:
        if (lhs > con.rhs || y < 0) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < con.rhs || y > 0) return false;
        break;
      case Relation::kEqual:
        if (lhs != con.rhs) return false;
        break;
    }
    dual += y * con.rhs;
  }
  for (int j = 0; j < n; ++j) {
    const Rational& w = s.upper_duals[j];
    if (w < 0 || (sgn(w) != 0 && !lp.upper[j])) return false;
    if (lp.upper[j]) dual += w * *lp.upper[j];
    reduced[j] -= w;
    if (lp.lower[j]) {
      if (reduced[j] > 0) return false;
      dual += reduced[j] * *lp.lower[j];
    } else if (sgn(reduced[j]) != 0) {
      return false;
    }
  }
  return dual == s.value;
}

SeparationResult solve_with_separation(const LinearProgram& base, const SeparationOracle& oracle,
                                       const SolverLimits& limits) {
  SeparationResult out;
  LinearProgram lp = base;
  while (true) {
    out.solution = solve(lp, limits);
    if (!out.solution.optimal()) return out;
    std::optional<Constraint> cut = oracle(out.solution.point);
    if (!cut) return out;
    Rational lhs = 0;
    for (int j = 0; j < lp.variable_count; ++j) lhs += cut->row[j] * out.solution.point[j];
    const bool violated = (cut->relation == Relation::kGreaterEqual && lhs < cut->rhs) ||
                          (cut->relation == Relation::kLessEqual && lhs > cut->rhs) ||
                          (cut->relation == Relation::kEqual && lhs != cut->rhs);
    if (!violated) throw std::logic_error("separation oracle returned a satisfied constraint");
    if (static_cast<int>(out.cuts.size()) >= limits.max_cuts) {
      throw LimitExceeded("constraint generation cut limit exceeded");
    }
    out.cuts.push_back(*cut);
    lp.constraints.push_back(std::move(*cut));
  }
}

FaceProbe max_over_optimal_face(const LinearProgram& lp, const Rational& optimum,
                                const std::vector<Rational>& probe, const SolverLimits& limits) {
  if (static_cast<int>(probe.size()) != lp.variable_count) {
    throw std::invalid_argument("probe length differs from variable count");
  }
  LinearProgram face = lp;
  face.add_constraint(lp.objective, Relation::kEqual, optimum);
  face.objective = probe;
  const LpSolution s = solve(face, limits);
  if (s.status == LpStatus::kInfeasible) {
    throw std::invalid_argument("optimal value is not attained by the program");
  }
  if (s.status == LpStatus::kUnbounded) throw std::domain_error("probe unbounded on optimal face");
  return {s.value, s.point};
}

}  // namespace tcmg
