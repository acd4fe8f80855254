// Copyright 2026 The qlayout Authors
//
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


#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qlayout/circuit.hpp"
#include "qlayout/gate_library.hpp"
#include "qlayout/rule_engine.hpp"
#include "qlayout/simulator.hpp"

namespace qlayout {

using Json = nlohmann::ordered_json;

/// {"gate", "basis", "counts", "qc", "depth"}
Json cost_to_json(std::string_view gate, std::string_view basis,
                  const CostReport& r);

Json spec_to_json(const CoreSpec& s);
CoreSpec spec_from_json(const Json& j);

Json trace_to_json(const std::vector<TraceStep>& steps);
Json qsphere_to_json(const std::vector<QSpherePoint>& points);

/// Truth tables travel as their 4-character strings.
Json query_to_json(const SearchQuery& q);
/// Missing keys keep the SearchQuery defaults; "target" is required.
/// Throws SearchError on unknown names.
SearchQuery query_from_json(const Json& j);
Json result_to_json(const SearchResult& r);

}  // namespace qlayout
