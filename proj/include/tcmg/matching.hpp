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

#ifndef TCMG_MATCHING_HPP_
#define TCMG_MATCHING_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tcmg/graph.hpp"
#include "tcmg/rational.hpp"

namespace tcmg {

// Vertex-disjoint edge set, edges sorted lexicographically.
class Matching {
 public:
  Matching() = default;
  // Throws std::invalid_argument if two edges share a vertex.
  explicit Matching(std::vector<Edge> edges);

  int size() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  Coalition covered() const;
  bool covers(Vertex v) const;
  // Mate of each vertex of an n-vertex graph, -1 where unmatched.
  std::vector<Vertex> mates(int n) const;
  // True when every edge belongs to g.
  bool is_in(const Graph& g) const;

  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> edges_;
};

Matching matching_from_mates(std::span<const Vertex> mate);

// Edmonds' blossom algorithm, O(n^3).
Matching maximum_matching(const Graph& g);

int max_matching_size_in(const Graph& g, const Coalition& s);

bool has_perfect_matching(const Graph& g);

// Gallai-Edmonds decomposition plus the bipartite refinement on the Tutte
// set A and the singleton odd components D0.
struct GedDecomposition {
  Coalition tutte_set;                     // A
  std::vector<Coalition> even_components;  // components of G - A of even size
  std::vector<Coalition> odd_components;   // components of G - A of odd size
  Coalition singletons;                    // D0: vertices of size-1 odd components
  Graph bipartite_graph;                   // G0 on all n vertices; only A-D0 edges
  Matching bipartite_matching;             // M0, maximum in G0
  Coalition a1;                            // A covered by M0
  Coalition a2;                            // A \ A1
  Coalition d01;                           // D0 covered by M0
  Coalition d02;                           // D0 \ D01
  int max_matching_size = 0;               // v*
};

// Canonical decomposition: D is the set of vertices some maximum matching
// leaves exposed (tested by one matching computation per vertex), A is
// N(D) \ D and the even components make up the rest.
GedDecomposition gallai_edmonds(const Graph& g);

// Vertices reachable from `sources` by M-alternating paths that leave each
// source through a non-matching edge. Sources must be M-exposed. The
// sources themselves are not reported. Meaningful on bipartite graphs.
std::vector<bool> alternating_reachable(const Graph& g, const Matching& m,
                                        std::span<const Vertex> sources);

enum class TieBreak {
  kAny,            // whatever the weighted matching returns
  kLexicographic,  // smallest sorted edge list among minimum-cost matchings
};

struct CostedMatching {
  Matching matching;
  Rational cost;
};

class NoMatchingOfSize : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Minimum of sum over matched edges (c_i + c_j) among matchings of exactly t
// edges. Uses n - 2t zero-cost dummy vertices adjacent to every vertex and a
// minimum-cost perfect matching on the augmented graph. Throws
// NoMatchingOfSize when t exceeds the maximum matching size and
// std::invalid_argument on a negative cost or a cost vector of the wrong
// length.
CostedMatching min_cost_matching_of_size(const Graph& g, std::span<const Rational> vertex_costs,
                                         int t, TieBreak tie_break = TieBreak::kLexicographic);

struct MatchingEnumeration {
  std::vector<Matching> matchings;
  bool truncated = false;
};

// All matchings with exactly t edges, in lexicographic order of their sorted
// edge lists, stopping after `limit` results.
MatchingEnumeration enumerate_matchings_of_size(const Graph& g, int t,
                                                std::optional<std::size_t> limit = std::nullopt);

}  // namespace tcmg

#endif  // TCMG_MATCHING_HPP_
