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

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qlayout/gate_library.hpp"
#include "qlayout/simulator.hpp"

namespace qlayout {

class SearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Segment { Semicircles, Quadrants, Octants };

std::string_view segment_name(Segment s);

struct GateSetStage {
  int stage;
  std::vector<GateTag> ctg;
  std::vector<Segment> seg;
};

/// The five successive gate/segment sets narrowed down by the design rules.
std::vector<GateSetStage> apply_rules();

/// |SP|^2 * |AX|^2 * |theta|^4.
std::uint64_t count_space(std::uint64_t sp, std::uint64_t ax,
                          std::uint64_t theta);

inline constexpr std::uint64_t kSearchLimit = 10'000'000;

struct SearchQuery {
  TruthTable target;  // over (c1, c2), see TruthTable
  std::vector<GateTag> sp1{GateTag::H};
  std::vector<GateTag> sp2{GateTag::H};
  std::vector<AuxGate> ax1{AuxGate::I};
  std::vector<AuxGate> ax2{AuxGate::I};
  std::vector<GateTag> theta{GateTag::T, GateTag::Tdg};
  bool symmetric = false;

  std::uint64_t space_size() const;
};

struct SearchMatch {
  CoreSpec spec;
  EquivalenceLevel level;  // vs. the exact flip oracle
};

struct SearchResult {
  std::vector<SearchMatch> matches;  // sorted by spec
  std::uint64_t visited = 0;
};

/// Target flipped iff f(c1, c2); controls q0 q1, target q2.
Unitary flip_oracle(const TruthTable& f);

SearchResult search(const SearchQuery& query);

}  // namespace qlayout
