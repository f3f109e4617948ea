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

#include "brute.hpp"
#include "doctest.h"
#include "ged_check.hpp"
#include "graph_zoo.hpp"

namespace tcmg {
namespace {

TEST_CASE("matching validates disjointness") {
  CHECK_THROWS_AS(Matching({{0, 1}, {1, 2}}), std::invalid_argument);
  const Matching m({{2, 3}, {0, 1}});
  CHECK(m.size() == 2);
  CHECK(m.covered() == Coalition{0, 1, 2, 3});
  CHECK(m.covered().size() == 2 * m.size());
  CHECK(m.mates(5) == std::vector<Vertex>{1, 0, 3, 2, -1});
  CHECK_FALSE(Matching({{0, 2}}).is_in(zoo::path(4)));
  CHECK(m.is_in(zoo::complete(4)));
}

TEST_CASE("maximum matching examples") {
  CHECK(maximum_matching(zoo::cycle(6)).size() == 3);
  CHECK(maximum_matching(zoo::complete(3)).size() == 1);
  const Matching p = maximum_matching(zoo::petersen());
  CHECK(p.size() == 5);
  CHECK(p.is_in(zoo::petersen()));
  CHECK(brute::max_matching(zoo::petersen()) == 5);
  CHECK(maximum_matching(Graph(0, {})).size() == 0);
}

TEST_CASE("maximum matching agrees with exhaustive search") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : zoo::all_graphs(n)) {
      const Matching m = maximum_matching(g);
      CHECK(m.is_in(g));
      CHECK(m.size() == brute::max_matching(g));
    }
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = zoo::random_graph(8, 1 + seed % 3, 4, seed);
    CHECK(maximum_matching(g).size() == brute::max_matching(g));
  }
}

TEST_CASE("max matching size in coalition") {
  CHECK(max_matching_size_in(zoo::complete(3), Coalition{0, 1}) == 1);
  CHECK(max_matching_size_in(zoo::complete(3), Coalition{0}) == 0);
  CHECK(max_matching_size_in(zoo::cycle(6), Coalition::all(6)) == 3);
  CHECK(max_matching_size_in(zoo::cycle(6), Coalition{0, 1, 2, 3, 4}) == 2);
}

TEST_CASE("has perfect matching") {
  CHECK(has_perfect_matching(zoo::cycle(6)));
  CHECK_FALSE(has_perfect_matching(zoo::complete(3)));
  CHECK_FALSE(has_perfect_matching(zoo::complete_bipartite(2, 3)));
}

TEST_CASE("decomposition of the path on three vertices") {
  const GedDecomposition d = gallai_edmonds(zoo::path(3));
  CHECK(d.tutte_set == Coalition{1});
  CHECK(d.odd_components == std::vector<Coalition>{Coalition{0}, Coalition{2}});
  CHECK(d.even_components.empty());
  CHECK(d.max_matching_size == 1);
}

TEST_CASE("decomposition of the six-cycle") {
  const GedDecomposition d = gallai_edmonds(zoo::cycle(6));
  CHECK(d.tutte_set.empty());
  CHECK(d.odd_components.empty());
  CHECK(d.even_components == std::vector<Coalition>{Coalition::all(6)});
  CHECK(d.max_matching_size == 3);
}

TEST_CASE("decomposition of the double star") {
  const GedDecomposition d = gallai_edmonds(zoo::double_star());
  CHECK(d.tutte_set == Coalition{0, 1});
  CHECK(d.singletons == Coalition{2, 3, 4, 5});
  CHECK(d.d02.size() == 2);
  CHECK(d.d01.size() == 2);
  CHECK(d.bipartite_matching.size() == 2);
  // one leaf per center
  for (const Edge& e : d.bipartite_matching.edges()) CHECK((e.u == 0 || e.u == 1));
  CHECK(d.bipartite_matching.edges()[0].u != d.bipartite_matching.edges()[1].u);
  CHECK(d.a1 == Coalition{0, 1});
  CHECK(d.a2.empty());
  CHECK(d.max_matching_size == 2);
}

void check_decomposition(const Graph& g) {
  const auto bad = brute::ged_violation(g, gallai_edmonds(g));
  CHECK_MESSAGE(!bad, bad.value_or(""));
}

TEST_CASE("decomposition invariants on small graphs") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : zoo::all_graphs(n)) check_decomposition(g);
  }
  check_decomposition(zoo::petersen());
  check_decomposition(zoo::double_star());
}

TEST_CASE("alternating reachability") {
  // 0 - 1 = 2 - 3 = 4 with 1=2 and 3=4 matched.
  const Graph g = zoo::path(5);
  const Matching m({{1, 2}, {3, 4}});
  const auto r = alternating_reachable(g, m, std::vector<Vertex>{0});
  CHECK(r == std::vector<bool>{false, true, true, true, true});
  CHECK_THROWS_AS(alternating_reachable(g, m, std::vector<Vertex>{1}), std::invalid_argument);
}

TEST_CASE("min cost matching examples") {
  {
    const std::vector<Rational> c = {0, 0, 1};
    const CostedMatching r = min_cost_matching_of_size(zoo::complete(3), c, 1);
    CHECK(r.matching == Matching({{0, 1}}));
    CHECK(r.cost == 0);
  }
  {
    const std::vector<Rational> c(6, frac(1, 6));
    const CostedMatching r = min_cost_matching_of_size(zoo::cycle(6), c, 2);
    CHECK(r.cost == frac(2, 3));
    CHECK(r.matching.size() == 2);
    CHECK(r.matching.is_in(zoo::cycle(6)));
  }
  {
    const std::vector<Rational> c = {frac(1, 2), frac(1, 2), 0, 0, 0, 0};
    const CostedMatching r = min_cost_matching_of_size(zoo::double_star(), c, 2);
    CHECK(r.cost == 1);
    const Edge a = r.matching.edges()[0];
    const Edge b = r.matching.edges()[1];
    CHECK(a.u == 0);
    CHECK((a.v == 2 || a.v == 3));
    CHECK(b.u == 1);
    CHECK((b.v == 4 || b.v == 5));
  }
}

TEST_CASE("min cost matching errors") {
  const std::vector<Rational> c(3, Rational(0));
  CHECK_THROWS_AS(min_cost_matching_of_size(zoo::complete(3), c, 2), NoMatchingOfSize);
  const std::vector<Rational> neg = {0, -1, 0};
  CHECK_THROWS_AS(min_cost_matching_of_size(zoo::complete(3), neg, 1), std::invalid_argument);
  const std::vector<Rational> shorter(2, Rational(0));
  CHECK_THROWS_AS(min_cost_matching_of_size(zoo::complete(3), shorter, 1), std::invalid_argument);
  CHECK(min_cost_matching_of_size(zoo::complete(3), c, 0).matching.size() == 0);
}

TEST_CASE("min cost matching is the lexicographically first optimum") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : zoo::all_graphs(n)) {
      const int vs = brute::max_matching(g);
      for (int t = 1; t <= vs; ++t) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
          const auto costs = zoo::random_costs(n, seed * 31 + t);
          const auto all = brute::matchings_of_size(g, t);
          std::optional<Rational> best;
          std::vector<Edge> first;
          for (const auto& m : all) {
            Rational c = 0;
            for (const Edge& e : m) c += costs[e.u] + costs[e.v];
            if (!best || c < *best) {
              best = c;
              first = m;
            }
          }
          const CostedMatching r = min_cost_matching_of_size(g, costs, t);
          CHECK(r.cost == *best);
          CHECK(r.matching == Matching(first));
          CHECK(min_cost_matching_of_size(g, costs, t, TieBreak::kAny).cost == *best);
        }
      }
    }
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_matchings_of_size(zoo::cycle(6), 1).matchings.size() == 6);
  const auto k4 = enumerate_matchings_of_size(zoo::complete(4), 2);
  CHECK(k4.matchings.size() == 3);
  CHECK_FALSE(k4.truncated);
  CHECK(k4.matchings.front() == Matching({{0, 1}, {2, 3}}));
  CHECK(std::is_sorted(k4.matchings.begin(), k4.matchings.end()));
  CHECK(enumerate_matchings_of_size(zoo::complete(3), 2).matchings.empty());
  const auto cut = enumerate_matchings_of_size(zoo::complete(4), 2, 2);
  CHECK(cut.matchings.size() == 2);
  CHECK(cut.truncated);
  for (const Graph& g : zoo::all_graphs(6)) {
    for (int t = 0; t <= 3; ++t) {
      CHECK(enumerate_matchings_of_size(g, t).matchings.size() ==
            brute::matchings_of_size(g, t).size());
    }
  }
}

}  // namespace
}  // namespace tcmg
