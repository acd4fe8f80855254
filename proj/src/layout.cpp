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


#include "qlayout/layout.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qlayout {

using json = nlohmann::json;

CouplingMap::CouplingMap(std::string name, std::size_t num_qubits,
                         std::vector<Edge> edges)
    : name_(std::move(name)), n_(num_qubits), adj_(num_qubits) {
  for (auto& [a, b] : edges) {
    if (a == b) throw LayoutError("self-loop on qubit " + std::to_string(a));
    if (a >= n_ || b >= n_) {
      throw LayoutError("edge references a qubit outside the map");
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const auto& [a, b] : edges_) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& v : adj_) std::sort(v.begin(), v.end());
}

bool CouplingMap::has_edge(std::size_t a, std::size_t b) const {
  if (a >= n_ || b >= n_) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

const std::vector<std::size_t>& CouplingMap::neighbors(std::size_t q) const {
  return adj_.at(q);
}

std::vector<std::size_t> CouplingMap::shortest_path(std::size_t a,
                                                    std::size_t b) const {
  if (a >= n_ || b >= n_) throw LayoutError("qubit outside the map");
  std::vector<std::size_t> prev(n_, n_);
  std::queue<std::size_t> todo;
  prev[a] = a;
  todo.push(a);
  while (!todo.empty()) {
    const std::size_t u = todo.front();
    todo.pop();
    if (u == b) break;
    for (auto v : adj_[u]) {
      if (prev[v] != n_) continue;
      prev[v] = u;
      todo.push(v);
    }
  }
  if (prev[b] == n_) return {};
  std::vector<std::size_t> path{b};
  while (path.back() != a) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

CouplingMap parse_map(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw LayoutError(std::string("malformed coupling map: ") + e.what());
  }
  if (!j.is_object() || !j.contains("num_qubits") || !j.contains("edges") ||
      !j["num_qubits"].is_number_unsigned() || !j["edges"].is_array()) {
    throw LayoutError("coupling map needs num_qubits and edges");
  }
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      throw LayoutError("each edge must be a pair of qubit indices");
    }
    edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return CouplingMap(j.value("name", std::string{}),
                     j["num_qubits"].get<std::size_t>(), std::move(edges));
}

CouplingMap load_map(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw LayoutError("cannot open " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_map(ss.str());
}

std::string map_to_json(const CouplingMap& map) {
  json edges = json::array();
  for (const auto& [a, b] : map.edges()) edges.push_back({a, b});
  json j{{"name", map.name()},
         {"num_qubits", map.num_qubits()},
         {"edges", std::move(edges)}};
  return j.dump();
}

CouplingMap heavy_hex_eagle() {
  // Seven rows of data qubits; row 6 starts one column in.
  struct Row {
    std::size_t first;
    std::size_t first_col;
    std::size_t last_col;
  };
  constexpr std::array<Row, 7> rows{{{0, 0, 13},
                                     {18, 0, 14},
                                     {37, 0, 14},
                                     {56, 0, 14},
                                     {75, 0, 14},
                                     {94, 0, 14},
                                     {113, 1, 14}}};
  auto at = [&](std::size_t r, std::size_t col) {
    return rows[r].first + col - rows[r].first_col;
  };
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = rows[r].first_col; c < rows[r].last_col; ++c) {
      edges.emplace_back(at(r, c), at(r, c + 1));
    }
  }
  // Connector qubits sit between rows r and r+1, four per gap, alternating
  // between columns {0,4,8,12} and {2,6,10,14}.
  std::size_t bridge = 14;
  for (std::size_t r = 0; r + 1 < rows.size(); ++r) {
    const std::size_t offset = r % 2 == 0 ? 0 : 2;
    for (std::size_t k = 0; k < 4; ++k) {
      const std::size_t col = offset + 4 * k;
      edges.emplace_back(at(r, col), bridge);
      edges.emplace_back(bridge, at(r + 1, col));
      ++bridge;
    }
    bridge = rows[r + 1].first + (rows[r + 1].last_col - rows[r + 1].first_col) + 1;
  }
  return CouplingMap("ibm_brisbane", 127, std::move(edges));
}

std::vector<Edge> IShape::edges() const {
  return {{top[0], top[1]},       {top[1], top[2]},
          {bottom[0], bottom[1]}, {bottom[1], bottom[2]},
          {top[1], bridge},       {bridge, bottom[1]}};
}

IShape make_ishape(const CouplingMap& map, std::array<std::size_t, 3> top,
                   std::array<std::size_t, 3> bottom, std::size_t bridge) {
  IShape s{top, bottom, bridge};
  std::set<std::size_t> ids(top.begin(), top.end());
  ids.insert(bottom.begin(), bottom.end());
  ids.insert(bridge);
  if (ids.size() != 7) throw LayoutError("I-shape indices must be distinct");
  for (const auto& [a, b] : s.edges()) {
    if (!map.has_edge(a, b)) {
      throw LayoutError("I-shape edge (" + std::to_string(a) + ", " +
                        std::to_string(b) + ") missing from map");
    }
  }
  return s;
}

IShape ishape_brisbane(const CouplingMap& map) {
  return make_ishape(map, {61, 62, 63}, {80, 81, 82}, 72);
}

std::optional<std::size_t> Placement::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  return std::nullopt;
}

std::vector<std::string> default_labels(std::size_t width) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < width; ++i) out.push_back("q" + std::to_string(i));
  return out;
}

std::vector<std::string> qubit_labels(LibraryGate g) {
  switch (g) {
    case LibraryGate::and3:
    case LibraryGate::nand3:
    case LibraryGate::or3:
    case LibraryGate::nor3:
    case LibraryGate::imp3:
    case LibraryGate::inh3:
    case LibraryGate::toffoli:
      return {"c1", "c2", "t"};
    case LibraryGate::and4:
      return {"c1", "c2", "c3", "t", "anc"};
    case LibraryGate::and5:
    case LibraryGate::pos5:
    case LibraryGate::sop5:
      return {"c1", "c2", "c3", "c4", "t", "anc1", "anc2"};
    case LibraryGate::fredkin3:
      return {"c", "a", "b"};
    case LibraryGate::fredkin4:
      return {"c1", "c2", "a", "b", "anc"};
    case LibraryGate::csx2:
    case LibraryGate::csxdg2:
      return {"c", "t"};
    case LibraryGate::swap2:
      return {"a", "b"};
    case LibraryGate::csx3:
    case LibraryGate::csxdg3:
      return {"c1", "c2", "t", "anc"};
    case LibraryGate::miller3:
      return {"q0", "q1", "q2"};
    case LibraryGate::toffoli4:
      return {"c1", "c2", "c3", "t"};
    case LibraryGate::toffoli5:
      return {"c1", "c2", "c3", "c4", "t"};
  }
  return {};
}

Placement place(LibraryGate g, const IShape& s) {
  const auto [a, b, c] = s.top;
  const auto [d, e, f] = s.bottom;
  const std::size_t gb = s.bridge;
  std::vector<std::size_t> phys;
  switch (g) {
    case LibraryGate::and3:
    case LibraryGate::nand3:
    case LibraryGate::or3:
    case LibraryGate::nor3:
    case LibraryGate::imp3:
    case LibraryGate::inh3:
      phys = {a, c, b};
      break;
    case LibraryGate::and4:
      phys = {a, c, e, gb, b};
      break;
    case LibraryGate::and5:
    case LibraryGate::pos5:
    case LibraryGate::sop5:
      phys = {a, c, d, f, gb, b, e};
      break;
    case LibraryGate::fredkin3:
    case LibraryGate::miller3:
      phys = {a, c, b};
      break;
    case LibraryGate::fredkin4:
      phys = {a, c, e, gb, b};
      break;
    case LibraryGate::csx2:
    case LibraryGate::csxdg2:
    case LibraryGate::swap2:
      phys = {a, b};
      break;
    case LibraryGate::csx3:
    case LibraryGate::csxdg3:
      phys = {a, c, gb, b};
      break;
    case LibraryGate::toffoli:
    case LibraryGate::toffoli4:
    case LibraryGate::toffoli5:
      throw LayoutError(std::string(library_name(g)) +
                        " has no SWAP-free I-shape placement");
  }
  return {std::move(phys), qubit_labels(g)};
}

Placement place_and_n(std::size_t n, const IShape& shape) {
  switch (n) {
    case 3:
      return place(LibraryGate::and3, shape);
    case 4:
      return place(LibraryGate::and4, shape);
    case 5:
      return place(LibraryGate::and5, shape);
    default:
      throw LayoutError(std::to_string(n) +
                        "-bit AND does not fit the I-shape");
  }
}

std::string placement_to_json(const Placement& p) {
  json assignment = json::object();
  for (std::size_t i = 0; i < p.physical.size(); ++i) {
    const std::string key = i < p.labels.size() ? p.labels[i] : "q" + std::to_string(i);
    assignment[key] = p.physical[i];
  }
  return json{{"assignment", assignment}}.dump();
}

Placement parse_placement(std::string_view text,
                          const std::vector<std::string>& labels) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw LayoutError(std::string("malformed placement: ") + e.what());
  }
  if (!j.is_object() || !j.contains("assignment") || !j["assignment"].is_object()) {
    throw LayoutError("placement needs an assignment object");
  }
  const auto& a = j["assignment"];
  Placement p{{}, labels};
  for (const auto& label : labels) {
    if (!a.contains(label)) throw LayoutError("placement misses qubit " + label);
    if (!a[label].is_number_unsigned()) {
      throw LayoutError("placement index for " + label + " must be unsigned");
    }
    p.physical.push_back(a[label].get<std::size_t>());
  }
  for (const auto& [key, value] : a.items()) {
    if (std::find(labels.begin(), labels.end(), key) == labels.end()) {
      throw LayoutError("placement names unknown qubit " + key);
    }
  }
  return p;
}

void validate_placement(const Placement& p, const CouplingMap& map) {
  std::set<std::size_t> seen;
  for (auto q : p.physical) {
    if (q >= map.num_qubits()) {
      throw LayoutError("placement uses qubit " + std::to_string(q) +
                        " outside the map");
    }
    if (!seen.insert(q).second) {
      throw LayoutError("placement maps two qubits to " + std::to_string(q));
    }
  }
}

AdjacencyReport verify_no_swap(const Circuit& c, const CouplingMap& map,
                               const Placement& p) {
  if (p.physical.size() < c.width()) {
    throw LayoutError("placement does not cover every circuit qubit");
  }
  validate_placement(p, map);
  AdjacencyReport r;
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const auto& g = c.gates()[i];
    if (g.kind().arity() != 2) continue;
    const auto pa = p.physical[g.qubit(0)];
    const auto pb = p.physical[g.qubit(1)];
    if (!map.has_edge(pa, pb)) r.violations.push_back({i, pa, pb});
  }
  r.ok = r.violations.empty();
  return r;
}

}  // namespace qlayout
