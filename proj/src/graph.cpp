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

#include "tcmg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace tcmg {

Graph::Graph(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 0) throw GraphError("negative vertex count", 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 0 || e.v >= vertex_count) {
      throw GraphError("edge " + std::to_string(i) + " has an endpoint outside [0, " +
                           std::to_string(vertex_count) + ")",
                       i);
    }
    if (e.u == e.v) {
      throw GraphError("edge " + std::to_string(i) + " is a self-loop on " + std::to_string(e.u),
                       i);
    }
  }
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (edges[order[k]] == edges[order[k - 1]]) {
      const Edge& e = edges[order[k]];
      throw GraphError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}",
                       std::max(order[k], order[k - 1]));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
  adjacency_.assign(vertex_count, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

std::optional<int> Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b || a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) {
    return std::nullopt;
  }
  const Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

Coalition::Coalition(std::initializer_list<Vertex> members)
    : Coalition(std::vector<Vertex>(members)) {}

Coalition::Coalition(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Coalition Coalition::from_mask(std::uint64_t mask) {
  Coalition c;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) c.members_.push_back(i);
  }
  return c;
}

Coalition Coalition::all(int n) {
  Coalition c;
  c.members_.resize(n);
  std::iota(c.members_.begin(), c.members_.end(), 0);
  return c;
}

std::uint64_t Coalition::mask() const {
  std::uint64_t m = 0;
  for (Vertex v : members_) {
    if (v < 0 || v >= kMaskBits) throw std::out_of_range("coalition member exceeds mask width");
    m |= std::uint64_t{1} << v;
  }
  return m;
}

bool Coalition::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

namespace {

using nlohmann::json;

Graph parse_json_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GraphError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw GraphError("graph JSON must be an object with fields \"n\" and \"edges\"", 0);
  }
  const json& n_field = doc["n"];
  if (!n_field.is_number_integer() || n_field.get<long long>() < 0) {
    throw GraphError("field \"n\" must be a nonnegative integer", 0);
  }
  const int n = n_field.get<int>();
  const json& list = doc["edges"];
  if (!list.is_array()) throw GraphError("field \"edges\" must be an array", 0);
  std::vector<Edge> edges;
  edges.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& pair = list[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw GraphError("edge " + std::to_string(i) + " must be a 2-element integer array", i);
    }
    const long long a = pair[0].get<long long>();
    const long long b = pair[1].get<long long>();
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw GraphError("edge " + std::to_string(i) + " has an endpoint outside [0, " +
                           std::to_string(n) + ")",
                       i);
    }
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return Graph(n, std::move(edges));
}

Graph parse_edgelist(std::string_view text) {
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  int max_index = -1;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find('\n', start), text.size());
    std::string line(text.substr(start, stop - start));
    start = stop + 1;
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream in(line);
    long long a = 0;
    long long b = 0;
    std::string rest;
    if (!(in >> a >> b) || (in >> rest)) {
      throw GraphError("line " + std::to_string(line_no) + ": expected \"u v\"", line_no);
    }
    if (a < 0 || b < 0 || a > 1'000'000'000 || b > 1'000'000'000) {
      throw GraphError("line " + std::to_string(line_no) + ": vertex index out of range", line_no);
    }
    if (a == b) {
      throw GraphError("line " + std::to_string(line_no) + ": self-loop on " + std::to_string(a),
                       line_no);
    }
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    lines.push_back(line_no);
    max_index = std::max<int>(max_index, static_cast<int>(std::max(a, b)));
  }
  try {
    return Graph(max_index + 1, std::move(edges));
  } catch (const GraphError& e) {
    const std::size_t line = e.position() < lines.size() ? lines[e.position()] : 0;
    throw GraphError("line " + std::to_string(line) + ": " + e.what(), line);
  }
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kJson ? parse_json_graph(text) : parse_edgelist(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::kJson) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    json doc = {{"n", g.vertex_count()}, {"edges", edges}};
    return doc.dump();
  }
  // An edgelist cannot express trailing isolated vertices; the vertex count is
  // recovered from the largest index.
  std::string out;
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

GraphFormat format_for_path(std::string_view path) {
  for (std::string_view suffix : {".txt", ".edges", ".edgelist"}) {
    if (path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix) {
      return GraphFormat::kEdgelist;
    }
  }
  return GraphFormat::kJson;
}

InducedSubgraph induced_subgraph(const Graph& g, const Coalition& s) {
  const int n = g.vertex_count();
  std::vector<int> local(n, -1);
  InducedSubgraph out;
  for (Vertex v : s) {
    if (v < 0 || v >= n) throw std::out_of_range("coalition member " + std::to_string(v));
    local[v] = static_cast<int>(out.original.size());
    out.original.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) edges.emplace_back(local[e.u], local[e.v]);
  }
  out.graph = Graph(static_cast<int>(out.original.size()), std::move(edges));
  return out;
}

std::vector<Coalition> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<Coalition> out;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> members{root};
    seen[root] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Vertex w : g.neighbors(members[head])) {
        if (!seen[w]) {
          seen[w] = true;
          members.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::queue<Vertex> pending;
    pending.push(root);
    while (!pending.empty()) {
      const Vertex v = pending.front();
      pending.pop();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          pending.push(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

Coalition isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out.push_back(v);
  }
  return Coalition(std::move(out));
}

}  // namespace tcmg
