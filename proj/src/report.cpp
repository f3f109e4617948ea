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

#include "tcmg/report.hpp"

namespace tcmg {
namespace {

Json skeleton(const TcmGame& game, std::string_view method) {
  Json j;
  j["schema"] = kReportSchema;
  j["input"] = input_json(game.graph(), game.threshold());
  j["method"] = method;
  j["rounds"] = Json::array();
  j["certificate"] = nullptr;
  j["time_ms"] = nullptr;
  return j;
}

Json coalitions_json(const std::vector<Coalition>& sets) {
  Json out = Json::array();
  for (const Coalition& s : sets) out.push_back(coalition_json(s));
  return out;
}

}  // namespace

Json rational_json(const Rational& r) { return to_string(r); }

Json point_json(std::span<const Rational> x) {
  Json out = Json::array();
  for (const Rational& r : x) out.push_back(to_string(r));
  return out;
}

Json coalition_json(const Coalition& s) {
  return Json(std::vector<Vertex>(s.begin(), s.end()));
}

Json matching_json(const Matching& m) {
  Json out = Json::array();
  for (const Edge& e : m.edges()) out.push_back({e.u, e.v});
  return out;
}

Json input_json(const Graph& g, std::optional<int> threshold) {
  Json j;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  if (threshold) j["T"] = *threshold;
  return j;
}

Json core_report(const TcmGame& game, const CoreDescription& core) {
  Json j = skeleton(game, "veto_players");
  Json r;
  r["nonempty"] = core.nonempty;
  r["veto_players"] = coalition_json(core.veto_players);
  r["nucleolus"] = core.nucleolus ? point_json(core.nucleolus->payoffs()) : Json(nullptr);
  j["result"] = r;
  j["certificate"] = coalition_json(core.veto_players);
  return j;
}

Json least_core_report(const TcmGame& game, const LeastCoreResult& r) {
  Json j = skeleton(game, method_name(r.method));
  j["result"] = {{"epsilon", rational_json(r.epsilon)}, {"point", point_json(r.point.payoffs())}};
  j["certificate"] = coalitions_json(r.certificate);
  return j;
}

Json nucleolus_report(const TcmGame& game, const NucleolusResult& r) {
  Json j = skeleton(game, method_name(r.method));
  j["result"] = {{"point", point_json(r.point.payoffs())}, {"warnings", r.warnings}};
  const bool specialized = r.method == NucleolusMethod::kSpecializedPerfect ||
                           r.method == NucleolusMethod::kSpecializedBipartite ||
                           r.method == NucleolusMethod::kSpecializedEcg;
  for (const NucleolusRound& round : r.rounds) {
    Json rj;
    rj["epsilon"] = rational_json(round.epsilon);
    if (specialized) {
      Json edges = Json::array();
      for (const Edge& e : round.fixed_edges) edges.push_back({e.u, e.v});
      rj["fixed_edges"] = edges;
      rj["fixed_vertices"] = round.fixed_vertices;
    } else {
      rj["fixed_coalitions"] = coalitions_json(round.fixed_coalitions);
    }
    j["rounds"].push_back(rj);
  }
  return j;
}

Json mig_report(const TcmGame& game, const MigEquilibrium& r) {
  Json j = skeleton(game, "constraint_generation");
  Json res;
  res["value"] = rational_json(r.value);
  res["interceptor"] = point_json(r.interceptor.payoffs());
  if (r.matcher) {
    Json y = Json::array();
    for (const auto& [m, w] : *r.matcher) {
      y.push_back({{"matching", matching_json(m)}, {"weight", rational_json(w)}});
    }
    res["matcher"] = y;
  } else {
    res["matcher"] = nullptr;
  }
  res["delta"] = r.delta ? rational_json(*r.delta) : Json(nullptr);
  res["warnings"] = r.warnings;
  j["result"] = res;
  return j;
}

Json decomposition_json(const Graph& g, const GedDecomposition& d) {
  Json j;
  j["schema"] = kReportSchema;
  j["input"] = input_json(g, std::nullopt);
  j["tutte_set"] = coalition_json(d.tutte_set);
  j["even_components"] = coalitions_json(d.even_components);
  j["odd_components"] = coalitions_json(d.odd_components);
  j["d0"] = coalition_json(d.singletons);
  j["d01"] = coalition_json(d.d01);
  j["d02"] = coalition_json(d.d02);
  j["a1"] = coalition_json(d.a1);
  j["a2"] = coalition_json(d.a2);
  j["m0"] = matching_json(d.bipartite_matching);
  j["max_matching_size"] = d.max_matching_size;
  return j;
}

Json excess_profile_json(const ExcessProfile& p) {
  Json out = Json::array();
  for (const ExcessEntry& e : p.entries) {
    out.push_back({{"coalition", coalition_json(e.coalition)}, {"excess", rational_json(e.excess)}});
  }
  return out;
}

std::vector<Rational> parse_rational_array(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("imputation is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("imputation must be a JSON array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) {
      throw std::invalid_argument("imputation entry " + std::to_string(i) + " is not a string");
    }
    out.push_back(parse_rational(j[i].get<std::string>()));
  }
  return out;
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace tcmg
