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

#ifndef TCMG_TESTS_SUPPORT_GED_CHECK_HPP_
#define TCMG_TESTS_SUPPORT_GED_CHECK_HPP_

#include <optional>
#include <string>

#include "tcmg/matching.hpp"

namespace tcmg::brute {

// First violated decomposition invariant, checked by exhaustive matching
// search; nullopt when all hold. Needs n <= 20 or so.
std::optional<std::string> ged_violation(const Graph& g, const GedDecomposition& d);

}  // namespace tcmg::brute

#endif  // TCMG_TESTS_SUPPORT_GED_CHECK_HPP_
