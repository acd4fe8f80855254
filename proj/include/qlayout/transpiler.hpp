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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlayout/circuit.hpp"
#include "qlayout/layout.hpp"

namespace qlayout {

enum class NativeBasis { CX, ECR };

std::string_view basis_name(NativeBasis b);  // "cx" | "ecr"
std::optional<NativeBasis> basis_from_name(std::string_view name);
bool is_native(GateTag tag, NativeBasis b);

/// One-step rewrite of `lhs` on qubit 0 (and 1). The right-hand side may
/// still contain non-native gates; lower() applies rules until fixpoint.
struct RewriteRule {
  GateKind lhs;
  Circuit rhs;
};

/// Rules for every fixed (angle-free) gate that is not native in `b`.
const std::vector<RewriteRule>& rewrite_rules(NativeBasis b);
/// RY(theta) in terms of SX and RZ.
Circuit lower_ry(Angle theta);
/// Audit text: one rule per line.
std::string dump_rules(NativeBasis b);

Circuit lower(const Circuit& c, NativeBasis b);

/// Wire-adjacent simplification to a fixed point: exact RZ merging, removal
/// of I and RZ(2k*pi), X/SX runs of total power 0 mod 4, and identical
/// adjacent CX or ECR pairs. No per-tag count ever grows.
Circuit peephole(const Circuit& c);

/// count_gates(peephole(lower(c, b))).
CostReport cost_report(const Circuit& c, NativeBasis b);

struct RouteResult {
  Circuit circuit;                       // on physical qubits, with SWAPs
  std::vector<std::size_t> final_layout;  // logical i -> physical
  std::size_t swaps = 0;
};

/// Greedy shortest-path SWAP insertion. With `restore`, every SWAP chain is
/// undone right after its gate so the layout never changes.
RouteResult route_naive(const Circuit& c, const CouplingMap& map,
                        const Placement& p, bool restore = false);

}  // namespace qlayout
