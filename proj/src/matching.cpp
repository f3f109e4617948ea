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

#include "tcmg/matching.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

#include "tcmg/detail/weighted_matching.hpp"

namespace tcmg {

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  std::vector<Vertex> ends;
  ends.reserve(2 * edges_.size());
  for (const Edge& e : edges_) {
    ends.push_back(e.u);
    ends.push_back(e.v);
  }
  std::sort(ends.begin(), ends.end());
  if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) {
    throw std::invalid_argument("matching edges are not vertex-disjoint");
  }
}

Coalition Matching::covered() const {
  std::vector<Vertex> out;
  for (const Edge& e : edges_) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  return Coalition(std::move(out));
}

bool Matching::covers(Vertex v) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [v](const Edge& e) { return e.u == v || e.v == v; });
}

std::vector<Vertex> Matching::mates(int n) const {
  std::vector<Vertex> mate(n, -1);
  for (const Edge& e : edges_) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  return mate;
}

bool Matching::is_in(const Graph& g) const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [&](const Edge& e) { return g.has_edge(e.u, e.v); });
}

Matching matching_from_mates(std::span<const Vertex> mate) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < static_cast<Vertex>(mate.size()); ++v) {
    if (mate[v] > v) edges.emplace_back(v, mate[v]);
  }
  return Matching(std::move(edges));
}

namespace {

// Augmenting-path search with blossom contraction through a base array.
class CardinalityBlossom {
 public:
  explicit CardinalityBlossom(const Graph& g)
      : g_(g), n_(g.vertex_count()), match_(n_, -1), parent_(n_), base_(n_), used_(n_),
        in_blossom_(n_) {}

  std::vector<Vertex> run() {
    for (const Edge& e : g_.edges()) {
      if (match_[e.u] == -1 && match_[e.v] == -1) {
        match_[e.u] = e.v;
        match_[e.v] = e.u;
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      Vertex v = find_path(root);
      while (v != -1) {
        const Vertex pv = parent_[v];
        const Vertex ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
    return match_;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const Vertex cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace

Matching maximum_matching(const Graph& g) {
  return matching_from_mates(CardinalityBlossom(g).run());
}

int max_matching_size_in(const Graph& g, const Coalition& s) {
  return maximum_matching(induced_subgraph(g, s).graph).size();
}

bool has_perfect_matching(const Graph& g) {
  return 2 * maximum_matching(g).size() == g.vertex_count();
}

GedDecomposition gallai_edmonds(const Graph& g) {
  const int n = g.vertex_count();
  GedDecomposition ged;
  ged.max_matching_size = maximum_matching(g).size();

  std::vector<bool> exposable(n, false);
  for (Vertex i = 0; i < n; ++i) {
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (v != i) rest.push_back(v);
    }
    exposable[i] = max_matching_size_in(g, Coalition(std::move(rest))) == ged.max_matching_size;
  }
  std::vector<bool> in_a(n, false);
  for (Vertex i = 0; i < n; ++i) {
    if (!exposable[i]) continue;
    for (Vertex w : g.neighbors(i)) {
      if (!exposable[w]) in_a[w] = true;
    }
  }
  std::vector<Vertex> a_members;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v) (in_a[v] ? a_members : rest).push_back(v);
  ged.tutte_set = Coalition(a_members);

  const InducedSubgraph remainder = induced_subgraph(g, Coalition(rest));
  std::vector<Vertex> d0;
  for (const Coalition& local : connected_components(remainder.graph)) {
    std::vector<Vertex> members;
    for (Vertex v : local) members.push_back(remainder.original[v]);
    Coalition component(std::move(members));
    if (exposable[*component.begin()]) {
      if (component.size() == 1) d0.push_back(*component.begin());
      ged.odd_components.push_back(std::move(component));
    } else {
      ged.even_components.push_back(std::move(component));
    }
  }
  ged.singletons = Coalition(d0);

  std::vector<Edge> cross;
  for (const Edge& e : g.edges()) {
    if ((in_a[e.u] && ged.singletons.contains(e.v)) ||
        (in_a[e.v] && ged.singletons.contains(e.u))) {
      cross.push_back(e);
    }
  }
  ged.bipartite_graph = Graph(n, std::move(cross));
  ged.bipartite_matching = maximum_matching(ged.bipartite_graph);

  std::vector<Vertex> a1, a2, d01, d02;
  for (Vertex v : ged.tutte_set) (ged.bipartite_matching.covers(v) ? a1 : a2).push_back(v);
  for (Vertex v : ged.singletons) (ged.bipartite_matching.covers(v) ? d01 : d02).push_back(v);
  ged.a1 = Coalition(a1);
  ged.a2 = Coalition(a2);
  ged.d01 = Coalition(d01);
  ged.d02 = Coalition(d02);
  return ged;
}

std::vector<bool> alternating_reachable(const Graph& g, const Matching& m,
                                        std::span<const Vertex> sources) {
  const int n = g.vertex_count();
  const std::vector<Vertex> mate = m.mates(n);
  std::vector<bool> reached(n, false);
  std::vector<bool> outer_done(n, false);
  std::queue<Vertex> outer;
  for (Vertex s : sources) {
    if (mate[s] != -1) throw std::invalid_argument("alternating search source is matched");
    outer_done[s] = true;
    outer.push(s);
  }
  while (!outer.empty()) {
    const Vertex v = outer.front();
    outer.pop();
    for (Vertex w : g.neighbors(v)) {
      if (mate[v] == w) continue;
      reached[w] = true;
      const Vertex next = mate[w];
      if (next != -1 && !outer_done[next]) {
        outer_done[next] = true;
        reached[next] = true;
        outer.push(next);
      }
    }
  }
  for (Vertex s : sources) reached[s] = false;
  return reached;
}

namespace {

CostedMatching min_cost_any(const Graph& g, std::span<const Rational> costs, int t) {
  const int n = g.vertex_count();
  if (t == 0) return {Matching(), Rational(0)};
  const int dummies = n - 2 * t;
  if (dummies < 0) throw NoMatchingOfSize("no matching of size " + std::to_string(t));
  Rational top = 0;
  for (const Edge& e : g.edges()) {
    Rational c = costs[e.u] + costs[e.v];
    if (c > top) top = c;
  }
  top += 1;
  std::vector<detail::WeightedEdge> edges;
  edges.reserve(g.edge_count() + static_cast<std::size_t>(n) * dummies);
  for (const Edge& e : g.edges()) {
    edges.push_back({e.u, e.v, Rational(top - costs[e.u] - costs[e.v])});
  }
  for (int d = 0; d < dummies; ++d) {
    for (Vertex v = 0; v < n; ++v) edges.push_back({v, n + d, top});
  }
  const std::vector<int> mate = detail::max_weight_matching(n + dummies, edges, true);
  std::vector<Edge> chosen;
  Rational cost = 0;
  for (int v = 0; v < n + dummies; ++v) {
    if (mate[v] == -1) throw NoMatchingOfSize("no matching of size " + std::to_string(t));
    if (v < n && mate[v] > v && mate[v] < n) {
      chosen.emplace_back(v, mate[v]);
      cost += costs[v] + costs[mate[v]];
    }
  }
  if (static_cast<int>(chosen.size()) != t) {
    throw std::logic_error("augmented perfect matching has the wrong number of real edges");
  }
  return {Matching(std::move(chosen)), cost};
}

// Minimum cost of a size-t matching in g minus `removed`, if one exists.
std::optional<Rational> residual_min_cost(const Graph& g, std::span<const Rational> costs,
                                          const std::vector<bool>& removed, int t) {
  if (t == 0) return Rational(0);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  const InducedSubgraph sub = induced_subgraph(g, Coalition(keep));
  std::vector<Rational> sub_costs;
  for (Vertex v : sub.original) sub_costs.push_back(costs[v]);
  try {
    return min_cost_any(sub.graph, sub_costs, t).cost;
  } catch (const NoMatchingOfSize&) {
    return std::nullopt;
  }
}

}  // namespace

CostedMatching min_cost_matching_of_size(const Graph& g, std::span<const Rational> vertex_costs,
                                         int t, TieBreak tie_break) {
  const int n = g.vertex_count();
  if (static_cast<int>(vertex_costs.size()) != n) {
    throw std::invalid_argument("cost vector length differs from vertex count");
  }
  if (t < 0) throw std::invalid_argument("negative matching size");
  for (const Rational& c : vertex_costs) {
    if (c < 0) throw std::invalid_argument("negative vertex cost");
  }
  CostedMatching best = min_cost_any(g, vertex_costs, t);
  if (tie_break == TieBreak::kAny || t == 0) return best;

  // Greedy over edges in lexicographic order: an edge is kept iff some
  // optimal matching contains it together with everything kept so far.
  std::vector<bool> removed(n, false);
  std::vector<Edge> kept;
  Rational kept_cost = 0;
  for (const Edge& e : g.edges()) {
    if (static_cast<int>(kept.size()) == t) break;
    if (removed[e.u] || removed[e.v]) continue;
    const Rational edge_cost = vertex_costs[e.u] + vertex_costs[e.v];
    removed[e.u] = removed[e.v] = true;
    const int still_needed = t - static_cast<int>(kept.size()) - 1;
    const auto rest = residual_min_cost(g, vertex_costs, removed, still_needed);
    if (rest && kept_cost + edge_cost + *rest == best.cost) {
      kept.push_back(e);
      kept_cost += edge_cost;
    } else {
      removed[e.u] = removed[e.v] = false;
    }
  }
  if (static_cast<int>(kept.size()) != t || kept_cost != best.cost) {
    throw std::logic_error("lexicographic refinement lost optimality");
  }
  return {Matching(std::move(kept)), best.cost};
}

MatchingEnumeration enumerate_matchings_of_size(const Graph& g, int t,
                                                std::optional<std::size_t> limit) {
  MatchingEnumeration out;
  if (t < 0) return out;
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<bool> used(g.vertex_count(), false);
  std::vector<Edge> current;
  std::function<bool(int)> extend = [&](int from) -> bool {
    if (static_cast<int>(current.size()) == t) {
      if (limit && out.matchings.size() >= *limit) {
        out.truncated = true;
        return false;
      }
      out.matchings.emplace_back(current);
      return true;
    }
    const int needed = t - static_cast<int>(current.size());
    for (int k = from; k <= m - needed; ++k) {
      const Edge& e = edges[k];
      if (used[e.u] || used[e.v]) continue;
      used[e.u] = used[e.v] = true;
      current.push_back(e);
      const bool keep_going = extend(k + 1);
      current.pop_back();
      used[e.u] = used[e.v] = false;
      if (!keep_going) return false;
    }
    return true;
  };
  extend(0);
  return out;
}

}  // namespace tcmg
