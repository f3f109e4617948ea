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

#ifndef TCMG_GRAPH_HPP_
#define TCMG_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tcmg {

using Vertex = int;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Raised for malformed graph text and for invariant violations. `position`
// is a 1-based line number for edgelist input, a byte offset for JSON, and
// an edge index for programmatic construction.
class GraphError : public std::runtime_error {
 public:
  GraphError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Simple undirected graph on vertices 0..n-1. Edges are kept sorted
// lexicographically; adjacency lists are sorted ascending.
class Graph {
 public:
  Graph() = default;
  // Throws GraphError on self-loops, duplicates or out-of-range endpoints.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex a, Vertex b) const;
  // Position of {a,b} in edges(), if present.
  std::optional<int> edge_index(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Brute-force paths store coalitions as 64-bit masks; this is the default
// enumeration ceiling for them.
inline constexpr int kDefaultEnumerationCap = 24;
inline constexpr int kMaskBits = 64;

// A set of players, kept as sorted unique vertex indices.
class Coalition {
 public:
  Coalition() = default;
  Coalition(std::initializer_list<Vertex> members);
  explicit Coalition(std::vector<Vertex> members);

  static Coalition from_mask(std::uint64_t mask);
  static Coalition all(int n);

  // Requires every member < 64.
  std::uint64_t mask() const;

  bool contains(Vertex v) const;
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  std::span<const Vertex> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend auto operator<=>(const Coalition&, const Coalition&) = default;

 private:
  std::vector<Vertex> members_;
};

enum class GraphFormat { kJson, kEdgelist };

// JSON: {"n": <int>, "edges": [[u,v], ...]}. Edgelist: one "u v" pair per
// line, '#' comments and blank lines ignored, n = 1 + max index.
Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);
// Picks kEdgelist for ".txt"/".edges"/".edgelist" suffixes, kJson otherwise.
GraphFormat format_for_path(std::string_view path);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new index -> original index
};

// Throws std::out_of_range if a member is not a vertex of g.
InducedSubgraph induced_subgraph(const Graph& g, const Coalition& s);

// Ordered by smallest member.
std::vector<Coalition> connected_components(const Graph& g);

// Side (0 or 1) per vertex, with the smallest vertex of every component on
// side 0; nullopt when g has an odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph& g);

Coalition isolated_vertices(const Graph& g);

}  // namespace tcmg

#endif  // TCMG_GRAPH_HPP_
