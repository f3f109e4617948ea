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

#include "tcmg/solvers.hpp"

#include <algorithm>
#include <string>

#include "tcmg/oracle.hpp"
#include "tcmg/sequential.hpp"

namespace tcmg {

std::string_view method_name(LeastCoreMethod m) {
  switch (m) {
    case LeastCoreMethod::kCoreFormula: return "core_formula";
    case LeastCoreMethod::kClosedFormEcg: return "closed_form_ecg";
    case LeastCoreMethod::kClosedFormPerfect: return "closed_form_perfect";
    case LeastCoreMethod::kClosedFormBipartite: return "closed_form_bipartite";
    case LeastCoreMethod::kConstraintGeneration: return "constraint_generation";
    case LeastCoreMethod::kBruteForce: return "brute_force";
  }
  return "unknown";
}

std::string_view method_name(NucleolusMethod m) {
  switch (m) {
    case NucleolusMethod::kCoreFormula: return "core_formula";
    case NucleolusMethod::kSpecializedPerfect: return "specialized_perfect";
    case NucleolusMethod::kSpecializedBipartite: return "specialized_bipartite";
    case NucleolusMethod::kSpecializedEcg: return "specialized_ecg";
    case NucleolusMethod::kEssential: return "essential";
    case NucleolusMethod::kBruteForce: return "brute_force";
  }
  return "unknown";
}

namespace {

Coalition non_isolated(const Graph& g) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) keep.push_back(v);
  }
  return Coalition(std::move(keep));
}

// Zero payoff for every vertex missing from `original`.
Imputation lift(const std::vector<Rational>& x, const std::vector<Vertex>& original, int n) {
  std::vector<Rational> full(n, Rational(0));
  for (std::size_t i = 0; i < original.size(); ++i) full[original[i]] = x[i];
  return Imputation(std::move(full));
}

std::vector<Coalition> tight_matching(const TcmGame& game, const Imputation& x,
                                      const Rational& epsilon) {
  if (game.player_count() == 2 * game.threshold()) return {};
  const CostedMatching cm = min_cost_matching_of_size(game.graph(), x.payoffs(), game.threshold());
  if (cm.cost == 1 + epsilon) return {cm.matching.covered()};
  return {};
}

LeastCoreResult core_least_core(const TcmGame& game, const CoreDescription& c) {
  const int n = game.player_count();
  LeastCoreResult out;
  out.method = LeastCoreMethod::kCoreFormula;
  out.point = *c.nucleolus;
  // Proper coalitions are all losing when everyone is a veto player.
  out.epsilon = c.veto_players.size() == n ? frac(1, n) : Rational(0);
  out.certificate = tight_matching(game, out.point, out.epsilon);
  return out;
}

struct BipartiteSplit {
  std::vector<int> side;  // 0 = L
  Matching matching;
  Coalition l2, r2;
  int n_prime = 0;
};

BipartiteSplit split_bipartite(const Graph& g) {
  auto side = two_coloring(g);
  if (!side) throw std::invalid_argument("graph is not bipartite");
  BipartiteSplit out;
  out.side = std::move(*side);
  out.matching = maximum_matching(g);
  std::vector<Vertex> l2, r2;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (out.matching.covers(v)) continue;
    (out.side[v] == 0 ? l2 : r2).push_back(v);
  }
  out.l2 = Coalition(std::move(l2));
  out.r2 = Coalition(std::move(r2));
  out.n_prime = g.vertex_count() - out.l2.size() - out.r2.size();
  return out;
}

// Which edge-and-vertex program applies, and its n'.
struct SpecializedClass {
  NucleolusMethod method;
  int n_prime;
};

std::optional<SpecializedClass> specialized_class(const Graph& reduced, int threshold) {
  const int n = reduced.vertex_count();
  if (has_perfect_matching(reduced)) return SpecializedClass{NucleolusMethod::kSpecializedPerfect, n};
  if (two_coloring(reduced)) {
    return SpecializedClass{NucleolusMethod::kSpecializedBipartite,
                            split_bipartite(reduced).n_prime};
  }
  if (threshold == 1) {
    return SpecializedClass{NucleolusMethod::kSpecializedEcg,
                            n - gallai_edmonds(reduced).d02.size()};
  }
  return std::nullopt;
}

NucleolusResult core_nucleolus(const CoreDescription& c) {
  NucleolusResult out;
  out.method = NucleolusMethod::kCoreFormula;
  out.point = *c.nucleolus;
  return out;
}

}  // namespace

LeastCoreResult ecg_least_core(const TcmGame& game) {
  if (game.threshold() != 1) throw std::invalid_argument("edge game needs threshold 1");
  const CoreDescription c = core(game);
  if (c.nonempty) return core_least_core(game, c);

  const InducedSubgraph r = induced_subgraph(game.graph(), non_isolated(game.graph()));
  const int n = r.graph.vertex_count();
  const GedDecomposition ged = gallai_edmonds(r.graph);
  std::vector<Rational> x(n, frac(1, n));
  Rational epsilon = frac(2, n) - 1;
  if (!ged.d02.empty()) {
    const int np = n - ged.d02.size();
    epsilon = frac(2, np) - 1;
    const std::vector<Vertex> sources(ged.d02.begin(), ged.d02.end());
    const std::vector<bool> reach =
        alternating_reachable(ged.bipartite_graph, ged.bipartite_matching, sources);
    x.assign(n, frac(1, np));
    for (Vertex a : ged.tutte_set) {
      if (reach[a]) x[a] = frac(2, np);
    }
    for (Vertex d : ged.d01) {
      if (reach[d]) x[d] = 0;
    }
    for (Vertex d : ged.d02) x[d] = 0;
  }
  LeastCoreResult out;
  out.method = LeastCoreMethod::kClosedFormEcg;
  out.epsilon = epsilon;
  out.point = lift(x, r.original, game.player_count());
  out.certificate = tight_matching(game, out.point, out.epsilon);
  return out;
}

LeastCoreResult perfect_matching_least_core(const TcmGame& game) {
  const CoreDescription c = core(game);
  if (c.nonempty) return core_least_core(game, c);
  const InducedSubgraph r = induced_subgraph(game.graph(), non_isolated(game.graph()));
  if (!has_perfect_matching(r.graph)) throw std::invalid_argument("graph has no perfect matching");
  const int n = r.graph.vertex_count();
  LeastCoreResult out;
  out.method = LeastCoreMethod::kClosedFormPerfect;
  out.epsilon = frac(2 * game.threshold(), n) - 1;
  out.point = lift(std::vector<Rational>(n, frac(1, n)), r.original, game.player_count());
  out.certificate = tight_matching(game, out.point, out.epsilon);
  return out;
}

LeastCoreResult bipartite_least_core(const TcmGame& game) {
  if (!two_coloring(game.graph())) throw std::invalid_argument("graph is not bipartite");
  const CoreDescription c = core(game);
  if (c.nonempty) return core_least_core(game, c);

  const InducedSubgraph r = induced_subgraph(game.graph(), non_isolated(game.graph()));
  const int n = r.graph.vertex_count();
  const BipartiteSplit b = split_bipartite(r.graph);
  const std::vector<Vertex> l2(b.l2.begin(), b.l2.end()), r2(b.r2.begin(), b.r2.end());
  const std::vector<bool> from_l2 = alternating_reachable(r.graph, b.matching, l2);
  const std::vector<bool> from_r2 = alternating_reachable(r.graph, b.matching, r2);
  const int np = b.n_prime;
  std::vector<Rational> x(n, frac(1, np));
  for (Vertex v = 0; v < n; ++v) {
    if (from_l2[v] && from_r2[v]) {
      throw std::logic_error("vertex reachable from both exposed sides");
    }
    const bool left = b.side[v] == 0;
    if (!b.matching.covers(v)) {
      x[v] = 0;
    } else if (from_l2[v]) {
      x[v] = left ? Rational(0) : frac(2, np);
    } else if (from_r2[v]) {
      x[v] = left ? frac(2, np) : Rational(0);
    }
  }
  LeastCoreResult out;
  out.method = LeastCoreMethod::kClosedFormBipartite;
  out.epsilon = frac(2 * game.threshold(), np) - 1;
  out.point = lift(x, r.original, game.player_count());
  out.certificate = tight_matching(game, out.point, out.epsilon);
  return out;
}

LeastCoreResult constraint_generation_least_core(const TcmGame& game, const SolverLimits& limits) {
  const int n = game.player_count();
  const int t = game.threshold();
  const int eps = n;
  LinearProgram lp(n + 1);
  lp.lower[eps] = std::nullopt;
  lp.objective[eps] = 1;
  {
    std::vector<Rational> row(n + 1, Rational(1));
    row[eps] = 0;
    lp.add_constraint(std::move(row), Relation::kEqual, 1, "V");
  }
  for (Vertex i = 0; i < n; ++i) {
    std::vector<Rational> row(n + 1, Rational(0));
    row[i] = 1;
    row[eps] = -1;
    lp.add_constraint(std::move(row), Relation::kGreaterEqual, 0, "{" + std::to_string(i) + "}");
  }
  std::vector<Coalition> cut_sets;
  const SeparationOracle oracle =
      [&](const std::vector<Rational>& point) -> std::optional<Constraint> {
    if (n == 2 * t) return std::nullopt;
    const std::vector<Rational> x(point.begin(), point.begin() + n);
    const CostedMatching cm = min_cost_matching_of_size(game.graph(), x, t, TieBreak::kAny);
    if (cm.cost >= 1 + point[eps]) return std::nullopt;
    Constraint c;
    c.row.assign(n + 1, Rational(0));
    c.row[eps] = -1;
    std::string label = "M";
    for (Vertex v : cm.matching.covered()) {
      c.row[v] = 1;
      label += ":" + std::to_string(v);
    }
    c.rhs = 1;
    c.label = std::move(label);
    cut_sets.push_back(cm.matching.covered());
    return c;
  };
  const SeparationResult sr = solve_with_separation(lp, oracle, limits);
  if (!sr.solution.optimal()) throw std::logic_error("least-core program not optimal");

  LeastCoreResult out;
  out.method = LeastCoreMethod::kConstraintGeneration;
  out.epsilon = sr.solution.value;
  out.point = Imputation(std::vector<Rational>(sr.solution.point.begin(),
                                               sr.solution.point.begin() + n));
  for (const Coalition& s : cut_sets) {
    if (out.point.total(s) == 1 + out.epsilon) out.certificate.push_back(s);
  }
  return out;
}

LeastCoreResult least_core(const TcmGame& game, LeastCoreStrategy strategy,
                           const SolverOptions& options) {
  switch (strategy) {
    case LeastCoreStrategy::kBruteForce:
      return brute_force_least_core(game, options.oracle_cap, options.lp);
    case LeastCoreStrategy::kConstraintGeneration:
      return constraint_generation_least_core(game, options.lp);
    case LeastCoreStrategy::kAuto:
    case LeastCoreStrategy::kClosedForm:
      break;
  }
  const CoreDescription c = core(game);
  if (c.nonempty) return core_least_core(game, c);
  if (game.threshold() == 1) return ecg_least_core(game);
  const InducedSubgraph r = induced_subgraph(game.graph(), non_isolated(game.graph()));
  if (has_perfect_matching(r.graph)) return perfect_matching_least_core(game);
  if (two_coloring(r.graph)) return bipartite_least_core(game);
  if (strategy == LeastCoreStrategy::kClosedForm) {
    throw UnsupportedMethod("no closed form for this graph; use constraint generation");
  }
  return constraint_generation_least_core(game, options.lp);
}

std::optional<ConvexWitness> uniform_convex_combination(const TcmGame& game, std::size_t cap) {
  const int n = game.player_count();
  MatchingEnumeration all = enumerate_matchings_of_size(game.graph(), game.threshold(), cap);
  if (all.truncated) throw CapExceeded("more than " + std::to_string(cap) + " size-T matchings");
  const int k = static_cast<int>(all.matchings.size());
  LinearProgram lp(k);
  const Rational target = frac(2 * game.threshold(), n);
  for (Vertex i = 0; i < n; ++i) {
    std::vector<Rational> row(k, Rational(0));
    for (int j = 0; j < k; ++j) {
      if (all.matchings[j].covers(i)) row[j] = 1;
    }
    lp.add_constraint(std::move(row), Relation::kEqual, target);
  }
  lp.add_constraint(std::vector<Rational>(k, Rational(1)), Relation::kEqual, 1);
  const LpSolution s = solve(lp);
  if (!s.optimal()) return std::nullopt;
  ConvexWitness out;
  out.matchings = std::move(all.matchings);
  out.weights = s.point;
  for (int j = 0; j < k; ++j) {
    if (sgn(out.weights[j]) > 0) out.positive.push_back(j);
  }
  return out;
}

NucleolusResult specialized_nucleolus(const TcmGame& game, const SolverLimits& limits) {
  if (core(game).nonempty) throw UnsupportedMethod("core is nonempty; use the core formula");
  const InducedSubgraph r = induced_subgraph(game.graph(), non_isolated(game.graph()));
  const auto cls = specialized_class(r.graph, game.threshold());
  if (!cls) {
    throw UnsupportedMethod(
        "specialized nucleolus needs threshold 1, a perfect matching or a bipartite graph");
  }
  const int n = r.graph.vertex_count();
  const int m = r.graph.edge_count();
  const Rational np(cls->n_prime);
  std::vector<SlpRow> rows;
  for (const Edge& e : r.graph.edges()) rows.push_back({Coalition{e.u, e.v}, Rational(1)});
  for (Vertex v = 0; v < n; ++v) rows.push_back({Coalition{v}, 1 - 2 / np});
  const SlpResult slp = run_sequential_lp(n, rows, limits);
  if (slp.rounds.front().epsilon != 2 / np - 1) {
    throw std::logic_error("first round value " + to_string(slp.rounds.front().epsilon) +
                           " differs from closed form " + to_string(Rational(2 / np - 1)));
  }

  NucleolusResult out;
  out.method = cls->method;
  out.point = lift(slp.point, r.original, game.player_count());
  const Rational shift = 2 * Rational(game.threshold() - 1) / np;
  for (const SlpRound& sr : slp.rounds) {
    NucleolusRound round;
    round.epsilon = sr.epsilon + shift;
    for (int k : sr.fixed_rows) {
      if (k < m) {
        const Edge& e = r.graph.edges()[k];
        round.fixed_edges.emplace_back(r.original[e.u], r.original[e.v]);
      } else {
        round.fixed_vertices.push_back(r.original[k - m]);
      }
    }
    out.rounds.push_back(std::move(round));
  }
  return out;
}

NucleolusResult essential_nucleolus(const TcmGame& game, std::size_t cap,
                                    const SolverLimits& limits) {
  const EssentialFamily family = essential_coalitions(game, cap);
  if (family.truncated) throw CapExceeded("more than " + std::to_string(cap) + " size-T matchings");
  // V(M) + i rows: once x(M) is fixed below 1, x(M) + x_i - 1 binds harder than x_i alone.
  const int n = game.player_count();
  std::vector<Coalition> rows = family.coalitions;
  for (const Coalition& s : family.coalitions) {
    if (s.size() != 2 * game.threshold() || s.size() == n) continue;
    for (Vertex i = 0; i < n; ++i) {
      if (s.contains(i)) continue;
      std::vector<Vertex> members(s.begin(), s.end());
      members.push_back(i);
      rows.emplace_back(std::move(members));
    }
  }
  NucleolusResult out = nucleolus_over_family(game, rows, limits);
  out.method = NucleolusMethod::kEssential;
  return out;
}

NucleolusResult nucleolus(const TcmGame& game, NucleolusStrategy strategy,
                          const SolverOptions& options) {
  switch (strategy) {
    case NucleolusStrategy::kBruteForce:
      return brute_force_nucleolus(game, options.oracle_cap, options.lp).result;
    case NucleolusStrategy::kEssential:
      return essential_nucleolus(game, options.essential_cap, options.lp);
    case NucleolusStrategy::kAuto:
    case NucleolusStrategy::kSpecialized:
      break;
  }
  const CoreDescription c = core(game);
  if (c.nonempty) return core_nucleolus(c);
  const InducedSubgraph r = induced_subgraph(game.graph(), non_isolated(game.graph()));
  if (strategy == NucleolusStrategy::kSpecialized ||
      specialized_class(r.graph, game.threshold())) {
    return specialized_nucleolus(game, options.lp);
  }
  if (game.threshold() <= options.small_t_cap) {
    try {
      return essential_nucleolus(game, options.essential_cap, options.lp);
    } catch (const CapExceeded&) {
    }
  }
  NucleolusResult out = brute_force_nucleolus(game, options.oracle_cap, options.lp).result;
  out.warnings.push_back(
      "no polynomial algorithm is known for general graphs with large threshold; "
      "solved by brute force over all coalitions");
  return out;
}

MembershipVerdict verify_least_core_membership(const TcmGame& game, const Imputation& x,
                                               const Rational& epsilon) {
  if (x.size() != game.player_count()) {
    throw std::invalid_argument("imputation length differs from player count");
  }
  MembershipVerdict out;
  out.accepted = true;
  for (Vertex i = 0; i < x.size(); ++i) {
    if (x[i] < epsilon) {
      out.accepted = false;
      out.violating_vertex = i;
      break;
    }
  }
  if (game.player_count() != 2 * game.threshold()) {
    CostedMatching cm = min_cost_matching_of_size(game.graph(), x.payoffs(), game.threshold());
    out.min_matching_cost = cm.cost;
    if (cm.cost < 1 + epsilon) {
      out.accepted = false;
      out.violating_matching = std::move(cm.matching);
    }
  }
  return out;
}

MigEquilibrium mig_equilibrium(const TcmGame& game, const SolverOptions& options) {
  const int n = game.player_count();
  const int t = game.threshold();
  const int eps = n;
  LinearProgram lp(n + 1);
  lp.lower[eps] = std::nullopt;
  lp.upper[eps] = 1;
  lp.objective[eps] = 1;
  {
    std::vector<Rational> row(n + 1, Rational(1));
    row[eps] = 0;
    lp.add_constraint(std::move(row), Relation::kEqual, 1, "V");
  }
  std::vector<Matching> columns;
  const SeparationOracle oracle =
      [&](const std::vector<Rational>& point) -> std::optional<Constraint> {
    const std::vector<Rational> x(point.begin(), point.begin() + n);
    const CostedMatching cm = min_cost_matching_of_size(game.graph(), x, t, TieBreak::kAny);
    if (cm.cost >= 1 + point[eps]) return std::nullopt;
    Constraint c;
    c.row.assign(n + 1, Rational(0));
    c.row[eps] = -1;
    std::string label = "M";
    for (const Edge& e : cm.matching.edges()) {
      c.row[e.u] = 1;
      c.row[e.v] = 1;
      label += ":" + std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    c.rhs = 1;
    c.label = std::move(label);
    columns.push_back(cm.matching);
    return c;
  };
  const SeparationResult sr = solve_with_separation(lp, oracle, options.lp);
  if (!sr.solution.optimal()) throw std::logic_error("interceptor program not optimal");

  MigEquilibrium out;
  out.value = 1 + sr.solution.value;
  out.interceptor =
      Imputation(std::vector<Rational>(sr.solution.point.begin(), sr.solution.point.begin() + n));
  const CostedMatching best =
      min_cost_matching_of_size(game.graph(), out.interceptor.payoffs(), t, TieBreak::kAny);
  if (best.cost != out.value) {
    throw std::logic_error("interceptor strategy does not guarantee the game value");
  }

  if (columns.size() > options.mig_column_cap) {
    out.warnings.push_back("matcher strategy omitted: " + std::to_string(columns.size()) +
                           " columns exceed the cap");
    return out;
  }
  // min delta subject to sum_{j : i in M_j} y_j <= delta, sum y = 1.
  const int k = static_cast<int>(columns.size());
  const int delta = k;
  LinearProgram dual(k + 1);
  dual.lower[delta] = std::nullopt;
  dual.objective[delta] = -1;
  for (Vertex i = 0; i < n; ++i) {
    std::vector<Rational> row(k + 1, Rational(0));
    for (int j = 0; j < k; ++j) {
      if (columns[j].covers(i)) row[j] = 1;
    }
    row[delta] = -1;
    dual.add_constraint(std::move(row), Relation::kLessEqual, 0);
  }
  {
    std::vector<Rational> row(k + 1, Rational(1));
    row[delta] = 0;
    dual.add_constraint(std::move(row), Relation::kEqual, 1);
  }
  const LpSolution ds = solve(dual, options.lp);
  if (!ds.optimal()) throw std::logic_error("matcher program not optimal");
  const Rational d = -ds.value;
  if (d != out.value) throw std::logic_error("matcher bound differs from interceptor value");

  std::vector<std::pair<Matching, Rational>> y;
  std::vector<Rational> load(n, Rational(0));
  Rational total = 0;
  for (int j = 0; j < k; ++j) {
    if (sgn(ds.point[j]) == 0) continue;
    if (sgn(ds.point[j]) < 0) throw std::logic_error("negative matcher weight");
    for (Vertex v : columns[j].covered()) load[v] += ds.point[j];
    total += ds.point[j];
    y.emplace_back(columns[j], ds.point[j]);
  }
  if (total != 1) throw std::logic_error("matcher weights do not sum to 1");
  for (Vertex i = 0; i < n; ++i) {
    if (load[i] > d) throw std::logic_error("matcher strategy exceeds the bound at a vertex");
  }
  std::sort(y.begin(), y.end());
  out.matcher = std::move(y);
  out.delta = d;
  return out;
}

}  // namespace tcmg
