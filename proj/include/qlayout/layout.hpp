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

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlayout/circuit.hpp"
#include "qlayout/gate_library.hpp"

namespace qlayout {

class LayoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected physical-qubit graph.
class CouplingMap {
 public:
  CouplingMap(std::string name, std::size_t num_qubits, std::vector<Edge> edges);

  const std::string& name() const { return name_; }
  std::size_t num_qubits() const { return n_; }
  /// Normalized (lo, hi), sorted, without duplicates.
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(std::size_t a, std::size_t b) const;
  const std::vector<std::size_t>& neighbors(std::size_t q) const;

  /// BFS path from a to b inclusive; empty if unreachable.
  std::vector<std::size_t> shortest_path(std::size_t a, std::size_t b) const;

 private:
  std::string name_;
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
};

/// {"name": str, "num_qubits": int, "edges": [[i, j], ...]}
CouplingMap parse_map(std::string_view json_text);
CouplingMap load_map(const std::filesystem::path& file);
std::string map_to_json(const CouplingMap& map);

/// 127-qubit heavy-hex lattice in the Eagle numbering (ibm_brisbane).
CouplingMap heavy_hex_eagle();

/// Two linear triples (a, b, c) and (d, e, f) joined through g by the edges
/// (b, g) and (g, e).
struct IShape {
  std::array<std::size_t, 3> top;
  std::array<std::size_t, 3> bottom;
  std::size_t bridge;

  std::vector<Edge> edges() const;
};

/// Checks the seven indices are distinct and the six edges exist.
IShape make_ishape(const CouplingMap& map, std::array<std::size_t, 3> top,
                   std::array<std::size_t, 3> bottom, std::size_t bridge);
IShape ishape_brisbane(const CouplingMap& map);

/// Logical qubit i sits on physical[i]; labels[i] names its role.
struct Placement {
  std::vector<std::size_t> physical;
  std::vector<std::string> labels;

  std::optional<std::size_t> find(std::string_view label) const;
  bool operator==(const Placement&) const = default;
};

/// Role labels for a library gate's logical qubits (c1, c2, t, anc1, ...).
std::vector<std::string> qubit_labels(LibraryGate g);
std::vector<std::string> default_labels(std::size_t width);

/// Canonical I-shape placement; every core target sits mid-triple.
Placement place(LibraryGate g, const IShape& shape);
/// AND3, AND4 or AND5 by size.
Placement place_and_n(std::size_t n, const IShape& shape);

/// Placement JSON: {"assignment": {"c1": 61, "t": 62, ...}}.
std::string placement_to_json(const Placement& p);
Placement parse_placement(std::string_view json_text,
                          const std::vector<std::string>& labels);

/// Checks injectivity and that every index exists on the map.
void validate_placement(const Placement& p, const CouplingMap& map);

struct Violation {
  std::size_t gate_index;
  std::size_t physical_a;
  std::size_t physical_b;
};

struct AdjacencyReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Every two-qubit gate must act on a coupled pair under `p`.
AdjacencyReport verify_no_swap(const Circuit& c, const CouplingMap& map,
                               const Placement& p);

}  // namespace qlayout
