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

#ifndef TCMG_DETAIL_WEIGHTED_MATCHING_HPP_
#define TCMG_DETAIL_WEIGHTED_MATCHING_HPP_

#include <vector>

#include "tcmg/rational.hpp"

namespace tcmg::detail {

struct WeightedEdge {
  int u;
  int v;
  Rational weight;
};

// Maximum-weight matching by the primal-dual blossom method (Edmonds, with
// Galil's O(n^3) bookkeeping). With max_cardinality set, returns a maximum
// weight matching among those of maximum cardinality. Returns the mate of
// every vertex, -1 if unmatched.
std::vector<int> max_weight_matching(int vertex_count, const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality);

}  // namespace tcmg::detail

#endif  // TCMG_DETAIL_WEIGHTED_MATCHING_HPP_
