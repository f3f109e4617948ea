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

#ifndef TCMG_GAME_HPP_
#define TCMG_GAME_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "tcmg/graph.hpp"
#include "tcmg/matching.hpp"
#include "tcmg/rational.hpp"

namespace tcmg {

class ThresholdOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Threshold cardinality matching game: coalition S wins (value 1) iff G[S]
// has a matching with at least T edges.
class TcmGame {
 public:
  // Throws ThresholdOutOfRange unless 1 <= threshold <= v*(graph).
  TcmGame(Graph graph, int threshold);

  const Graph& graph() const { return graph_; }
  int threshold() const { return threshold_; }
  int max_matching_size() const { return max_matching_size_; }
  int player_count() const { return graph_.vertex_count(); }

  // 0 or 1. Memoized per coalition when every member fits a 64-bit mask;
  // the cache is shared by copies and safe for concurrent callers.
  int value(const Coalition& s) const;
  int value_of_mask(std::uint64_t mask) const;

 private:
  struct ValueCache;

  Graph graph_;
  int threshold_;
  int max_matching_size_;
  std::shared_ptr<ValueCache> cache_;
};

class NotAnImputation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Nonnegative payoff vector summing to 1.
class Imputation {
 public:
  Imputation() = default;
  // Throws NotAnImputation on a negative entry or a total other than 1.
  explicit Imputation(std::vector<Rational> payoffs);

  static Imputation uniform(int n);

  int size() const { return static_cast<int>(payoffs_.size()); }
  const Rational& operator[](Vertex i) const { return payoffs_[i]; }
  std::span<const Rational> payoffs() const { return payoffs_; }
  Rational total(const Coalition& s) const;
  Rational total(const Matching& m) const;

  friend bool operator==(const Imputation&, const Imputation&) = default;

 private:
  std::vector<Rational> payoffs_;
};

// x(S) - v(S).
Rational excess(const TcmGame& game, const Imputation& x, const Coalition& s);

// { i : v(V \ {i}) = 0 }.
Coalition veto_players(const TcmGame& game);

struct CoreDescription {
  bool nonempty = false;
  Coalition veto_players;
  // 1/k on each of the k veto players; present iff nonempty.
  std::optional<Imputation> nucleolus;

  // Core membership of an imputation: zero payoff to every non-veto player.
  bool contains(const Imputation& x) const;
};

CoreDescription core(const TcmGame& game);

struct EssentialFamily {
  // Singletons, then one coalition per size-T matching (its vertex set, in
  // enumeration order, duplicates kept), then V.
  std::vector<Coalition> coalitions;
  bool truncated = false;
};

EssentialFamily essential_coalitions(const TcmGame& game, std::size_t cap);

}  // namespace tcmg

#endif  // TCMG_GAME_HPP_
