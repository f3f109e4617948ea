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

#ifndef TCMG_SEQUENTIAL_HPP_
#define TCMG_SEQUENTIAL_HPP_

#include <vector>

#include "tcmg/graph.hpp"
#include "tcmg/lp.hpp"
#include "tcmg/rational.hpp"

namespace tcmg {

// One coalition constraint x(S) >= base + eps.
struct SlpRow {
  Coalition members;
  Rational base;
};

struct SlpRound {
  Rational epsilon;
  std::vector<int> fixed_rows;  // indices into the input rows, ascending
};

struct SlpResult {
  std::vector<Rational> point;
  std::vector<SlpRound> rounds;
};

// Lexicographic max-min over the given rows on the imputation simplex
// (x >= 0, x(V) = 1). Each round maximizes eps over the free rows, then
// moves every row tight on the whole optimal face into the fixed set.
// Rows whose left side is spanned by fixed rows are dropped. Stops once the
// fixed rows pin x down, which takes at most n rounds.
//
// Throws std::logic_error if the rows cannot pin x down.
SlpResult run_sequential_lp(int n, const std::vector<SlpRow>& rows,
                            const SolverLimits& limits = {});

}  // namespace tcmg

#endif  // TCMG_SEQUENTIAL_HPP_
