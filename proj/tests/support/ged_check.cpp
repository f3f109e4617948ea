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

#include "ged_check.hpp"

#include <algorithm>
#include <vector>

#include "brute.hpp"

namespace tcmg::brute {

std::optional<std::string> ged_violation(const Graph& g, const GedDecomposition& d) {
  const int n = g.vertex_count();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const int vstar = max_matching(g, full);
  if (d.max_matching_size != vstar) return "wrong maximum matching size";

  std::vector<int> owner(n, 0);
  for (Vertex v : d.tutte_set) ++owner[v];
  int identity = d.tutte_set.size();
  for (const Coalition& b : d.even_components) {
    if (b.size() % 2 != 0) return "even component of odd size";
    identity += b.size() / 2;
    for (Vertex v : b) ++owner[v];
  }
  std::uint64_t odd_mask = 0;
  for (const Coalition& c : d.odd_components) {
    if (c.size() % 2 != 1) return "odd component of even size";
    identity += (c.size() - 1) / 2;
    for (Vertex v : c) {
      ++owner[v];
      odd_mask |= std::uint64_t{1} << v;
      if (!has_perfect_matching(g, c.mask() & ~(std::uint64_t{1} << v))) {
        return "odd component not factor-critical";
      }
    }
  }
  if (!std::all_of(owner.begin(), owner.end(), [](int k) { return k == 1; })) {
    return "parts do not partition V";
  }
  if (identity != vstar) return "Tutte identity fails";

  for (Vertex i = 0; i < n; ++i) {
    const bool exposable = max_matching(g, full & ~(std::uint64_t{1} << i)) == vstar;
    if (exposable != static_cast<bool>(odd_mask >> i & 1)) return "exposable set mismatch";
  }
  if (!d.odd_components.empty() &&
      d.tutte_set.size() >= static_cast<int>(d.odd_components.size())) {
    return "|A| not below the number of odd components";
  }

  std::vector<Edge> expected;
  for (const Edge& e : g.edges()) {
    if ((d.tutte_set.contains(e.u) && d.singletons.contains(e.v)) ||
        (d.tutte_set.contains(e.v) && d.singletons.contains(e.u))) {
      expected.push_back(e);
    }
  }
  if (d.bipartite_graph.vertex_count() != n ||
      !std::equal(expected.begin(), expected.end(), d.bipartite_graph.edges().begin(),
                  d.bipartite_graph.edges().end())) {
    return "G0 edges differ from the A-D0 edges";
  }
  if (!d.bipartite_matching.is_in(d.bipartite_graph) ||
      d.bipartite_matching.size() != max_matching(d.bipartite_graph, full)) {
    return "M0 not maximum in G0";
  }
  std::vector<Vertex> singles;
  for (const Coalition& c : d.odd_components) {
    if (c.size() == 1) singles.push_back(*c.begin());
  }
  if (d.singletons != Coalition(singles)) return "D0 is not the singleton components";
  for (Vertex v : d.tutte_set) {
    if (d.bipartite_matching.covers(v) != d.a1.contains(v) || d.a1.contains(v) == d.a2.contains(v)) {
      return "A1/A2 split wrong";
    }
  }
  for (Vertex v : d.singletons) {
    if (d.bipartite_matching.covers(v) != d.d01.contains(v) ||
        d.d01.contains(v) == d.d02.contains(v)) {
      return "D01/D02 split wrong";
    }
  }
  if (d.a1.size() + d.a2.size() != d.tutte_set.size() ||
      d.d01.size() + d.d02.size() != d.singletons.size()) {
    return "split sizes wrong";
  }
  return std::nullopt;
}

}  // namespace tcmg::brute
