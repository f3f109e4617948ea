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

#include "tcmg/game.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace tcmg {

struct TcmGame::ValueCache {
  std::shared_mutex mutex;
  std::unordered_map<std::uint64_t, int> values;
};

TcmGame::TcmGame(Graph graph, int threshold)
    : graph_(std::move(graph)),
      threshold_(threshold),
      max_matching_size_(maximum_matching(graph_).size()),
      cache_(std::make_shared<ValueCache>()) {
  if (threshold_ < 1 || threshold_ > max_matching_size_) {
    throw ThresholdOutOfRange("threshold " + std::to_string(threshold_) + " outside [1, " +
                              std::to_string(max_matching_size_) + "]");
  }
}

int TcmGame::value(const Coalition& s) const {
  if (player_count() <= kMaskBits) return value_of_mask(s.mask());
  return max_matching_size_in(graph_, s) >= threshold_ ? 1 : 0;
}

int TcmGame::value_of_mask(std::uint64_t mask) const {
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->values.find(mask);
    if (it != cache_->values.end()) return it->second;
  }
  const int v = max_matching_size_in(graph_, Coalition::from_mask(mask)) >= threshold_ ? 1 : 0;
  std::unique_lock lock(cache_->mutex);
  cache_->values.emplace(mask, v);
  return v;
}

Imputation::Imputation(std::vector<Rational> payoffs) : payoffs_(std::move(payoffs)) {
  Rational s = 0;
  for (std::size_t i = 0; i < payoffs_.size(); ++i) {
    if (payoffs_[i] < 0) {
      throw NotAnImputation("payoff " + std::to_string(i) + " is negative");
    }
    s += payoffs_[i];
  }
  if (s != 1) throw NotAnImputation("payoffs sum to " + to_string(s) + ", not 1");
}

Imputation Imputation::uniform(int n) {
  return Imputation(std::vector<Rational>(n, frac(1, n)));
}

Rational Imputation::total(const Coalition& s) const {
  Rational t = 0;
  for (Vertex v : s) t += payoffs_[v];
  return t;
}

Rational Imputation::total(const Matching& m) const {
  Rational t = 0;
  for (const Edge& e : m.edges()) t += payoffs_[e.u] + payoffs_[e.v];
  return t;
}

Rational excess(const TcmGame& game, const Imputation& x, const Coalition& s) {
  return x.total(s) - game.value(s);
}

Coalition veto_players(const TcmGame& game) {
  const int n = game.player_count();
  std::vector<Vertex> out;
  for (Vertex i = 0; i < n; ++i) {
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (v != i) rest.push_back(v);
    }
    if (max_matching_size_in(game.graph(), Coalition(std::move(rest))) < game.threshold()) {
      out.push_back(i);
    }
  }
  return Coalition(std::move(out));
}

bool CoreDescription::contains(const Imputation& x) const {
  if (!nonempty) return false;
  for (Vertex i = 0; i < x.size(); ++i) {
    if (!veto_players.contains(i) && x[i] != 0) return false;
  }
  return true;
}

CoreDescription core(const TcmGame& game) {
  CoreDescription out;
  out.veto_players = veto_players(game);
  out.nonempty = !out.veto_players.empty();
  if (out.nonempty) {
    std::vector<Rational> x(game.player_count(), Rational(0));
    for (Vertex v : out.veto_players) x[v] = frac(1, out.veto_players.size());
    out.nucleolus = Imputation(std::move(x));
  }
  return out;
}

EssentialFamily essential_coalitions(const TcmGame& game, std::size_t cap) {
  EssentialFamily out;
  const int n = game.player_count();
  for (Vertex i = 0; i < n; ++i) out.coalitions.push_back(Coalition{i});
  auto matchings = enumerate_matchings_of_size(game.graph(), game.threshold(), cap);
  out.truncated = matchings.truncated;
  for (const Matching& m : matchings.matchings) out.coalitions.push_back(m.covered());
  out.coalitions.push_back(Coalition::all(n));
  return out;
}

}  // namespace tcmg
