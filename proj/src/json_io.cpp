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


#include "qlayout/json_io.hpp"

#include <string>

namespace qlayout {

namespace {

GateTag tag_or_throw(const std::string& name) {
  auto t = tag_from_name(name);
  if (!t) throw SearchError("unknown gate '" + name + "'");
  return *t;
}

AuxGate aux_or_throw(const std::string& name) {
  auto a = aux_from_name(name);
  if (!a) throw SearchError("unknown auxiliary gate '" + name + "'");
  return *a;
}

Json tags(const std::vector<GateTag>& v) {
  Json out = Json::array();
  for (auto t : v) out.push_back(std::string(tag_name(t)));
  return out;
}

Json auxes(const std::vector<AuxGate>& v) {
  Json out = Json::array();
  for (auto a : v) out.push_back(std::string(aux_name(a)));
  return out;
}

std::vector<GateTag> tags_from(const Json& j) {
  std::vector<GateTag> out;
  for (const auto& e : j) out.push_back(tag_or_throw(e.get<std::string>()));
  return out;
}

std::vector<AuxGate> auxes_from(const Json& j) {
  std::vector<AuxGate> out;
  for (const auto& e : j) out.push_back(aux_or_throw(e.get<std::string>()));
  return out;
}

}  // namespace

Json cost_to_json(std::string_view gate, std::string_view basis,
                  const CostReport& r) {
  Json counts = Json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  return {{"gate", gate}, {"basis", basis}, {"counts", counts},
          {"qc", r.qc},   {"depth", r.depth}};
}

Json spec_to_json(const CoreSpec& s) {
  Json theta = Json::array();
  for (auto t : s.theta) theta.push_back(std::string(tag_name(t)));
  return {{"sp1", tag_name(s.sp1)}, {"ax1", aux_name(s.ax1)},
          {"theta", theta},         {"ax2", aux_name(s.ax2)},
          {"sp2", tag_name(s.sp2)}};
}

CoreSpec spec_from_json(const Json& j) {
  try {
    CoreSpec s;
    s.sp1 = tag_or_throw(j.at("sp1").get<std::string>());
    s.ax1 = aux_or_throw(j.at("ax1").get<std::string>());
    const auto& th = j.at("theta");
    if (!th.is_array() || th.size() != 4) throw SearchError("theta needs four gates");
    for (std::size_t k = 0; k < 4; ++k) s.theta[k] = tag_or_throw(th[k].get<std::string>());
    s.ax2 = aux_or_throw(j.at("ax2").get<std::string>());
    s.sp2 = tag_or_throw(j.at("sp2").get<std::string>());
    return s;
  } catch (const Json::exception& e) {
    throw SearchError(std::string("bad core spec: ") + e.what());
  }
}

Json trace_to_json(const std::vector<TraceStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) out.push_back({{"stage", s.stage}, {"state", s.label()}});
  return out;
}

Json qsphere_to_json(const std::vector<QSpherePoint>& points) {
  Json out = Json::array();
  for (const auto& p : points) {
    out.push_back({{"label", p.label}, {"magnitude", p.magnitude}, {"phase", p.phase}});
  }
  return out;
}

Json query_to_json(const SearchQuery& q) {
  return {{"target", q.target.to_string()},
          {"sp1", tags(q.sp1)},
          {"sp2", tags(q.sp2)},
          {"ax1", auxes(q.ax1)},
          {"ax2", auxes(q.ax2)},
          {"theta", tags(q.theta)},
          {"symmetric", q.symmetric}};
}

SearchQuery query_from_json(const Json& j) {
  try {
    SearchQuery q;
    q.target = TruthTable::parse(j.at("target").get<std::string>());
    if (j.contains("sp1")) q.sp1 = tags_from(j["sp1"]);
    if (j.contains("sp2")) q.sp2 = tags_from(j["sp2"]);
    if (j.contains("ax1")) q.ax1 = auxes_from(j["ax1"]);
    if (j.contains("ax2")) q.ax2 = auxes_from(j["ax2"]);
    if (j.contains("theta")) q.theta = tags_from(j["theta"]);
    if (j.contains("symmetric")) q.symmetric = j["symmetric"].get<bool>();
    return q;
  } catch (const Json::exception& e) {
    throw SearchError(std::string("bad search query: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SearchError(std::string("bad search query: ") + e.what());
  }
}

Json result_to_json(const SearchResult& r) {
  Json matches = Json::array();
  for (const auto& m : r.matches) {
    matches.push_back({{"spec", spec_to_json(m.spec)}, {"level", level_name(m.level)}});
  }
  return {{"visited", r.visited}, {"matches", matches}};
}

}  // namespace qlayout
