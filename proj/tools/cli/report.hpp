// Copyright 2026 The goqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GOQEC_TOOLS_REPORT_HPP_
#define GOQEC_TOOLS_REPORT_HPP_

#include <cstdint>
#include <string>

#include <json.hpp>

#include "goqec/conditions.hpp"

namespace goqec::cli {

/// Deterministic JSON rendering with sorted keys and 17 significant digits.
std::string dump_deterministic(const nlohmann::json& j);

/// "a,l,i" / "a,b,k,l" keyed table of [re, im] pairs.
nlohmann::json lambda_table_to_json(const LambdaTable& table);

nlohmann::json witness_to_json(const Witness& w);

/// Common RunReport skeleton; callers fill verdict-specific fields.
nlohmann::json make_report(const std::string& command, double tol,
                           std::uint64_t seed);

/// Flat "key: value" rendering for --format text.
std::string render_text(const nlohmann::json& report);

}  // namespace goqec::cli

#endif  // GOQEC_TOOLS_REPORT_HPP_
