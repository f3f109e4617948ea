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

#ifndef TCMG_REPORT_HPP_
#define TCMG_REPORT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tcmg/game.hpp"
#include "tcmg/graph.hpp"
#include "tcmg/matching.hpp"
#include "tcmg/oracle.hpp"
#include "tcmg/rational.hpp"
#include "tcmg/solvers.hpp"

namespace tcmg {

using Json = nlohmann::json;

inline constexpr std::string_view kReportSchema = "tcmg.report/1";

Json rational_json(const Rational& r);
Json point_json(std::span<const Rational> x);
Json coalition_json(const Coalition& s);
Json matching_json(const Matching& m);
Json input_json(const Graph& g, std::optional<int> threshold);

// Full reports: {schema, input, method, result, rounds, certificate, time_ms}.
Json core_report(const TcmGame& game, const CoreDescription& core);
Json least_core_report(const TcmGame& game, const LeastCoreResult& r);
Json nucleolus_report(const TcmGame& game, const NucleolusResult& r);
Json mig_report(const TcmGame& game, const MigEquilibrium& r);

Json decomposition_json(const Graph& g, const GedDecomposition& d);
Json excess_profile_json(const ExcessProfile& p);

// JSON array of "p/q" strings. Throws std::invalid_argument when malformed.
std::vector<Rational> parse_rational_array(std::string_view text);

std::string dump(const Json& j, bool pretty);

}  // namespace tcmg

#endif  // TCMG_REPORT_HPP_
