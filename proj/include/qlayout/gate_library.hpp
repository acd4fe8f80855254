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
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlayout/circuit.hpp"

namespace qlayout {

/// Auxiliary slot contents. NegZ is the three-gate X, Z, X sequence (= -Z).
enum class AuxGate { I, X, SX, SXdg, Z, S, Sdg, T, Tdg, NegZ };

std::string_view aux_name(AuxGate a);
std::optional<AuxGate> aux_from_name(std::string_view name);
/// Gates realizing the slot, in time order; empty for I.
std::vector<GateTag> aux_gates(AuxGate a);

/// Symmetric 3-bit core configuration: on the target wire
/// SP1, AX1, th1, CX(c2), th2, CX(c1), th3, CX(c2), th4, AX2, SP2.
struct CoreSpec {
  GateTag sp1 = GateTag::H;
  AuxGate ax1 = AuxGate::I;
  std::array<GateTag, 4> theta{GateTag::Tdg, GateTag::T, GateTag::Tdg,
                               GateTag::T};
  AuxGate ax2 = AuxGate::I;
  GateTag sp2 = GateTag::H;

  bool symmetric() const {
    return theta[0] == theta[2] && theta[1] == theta[3];
  }
  std::string to_string() const;

  auto operator<=>(const CoreSpec&) const = default;
};

bool is_superposition_tag(GateTag t);  // H, SX, SXdg
bool is_theta_tag(GateTag t);          // S, Sdg, T, Tdg

enum class BooleanGateKind { AND, NAND, OR, NOR, IMPLICATION, INHIBITION };

/// The configuration row for each Boolean gate.
CoreSpec boolean_spec(BooleanGateKind kind);
/// Classical function with a = control1, b = control2.
bool boolean_eval(BooleanGateKind kind, bool a, bool b);
std::string_view boolean_name(BooleanGateKind kind);

/// One labelled stage of a core on the target wire; `control` is set for the
/// CX stages.
struct CoreStage {
  std::string label;
  std::vector<Gate> gates;
  std::optional<std::size_t> control;
};

/// The nine stages (SP1+AX1, th1, CX-c2, th2, CX-c1, th3, CX-c2, th4+AX2,
/// SP2) of a core wired onto qubits (c1, c2, t).
std::vector<CoreStage> core_stages(const CoreSpec& spec, std::size_t c1,
                                   std::size_t c2, std::size_t t);

/// Appends a core to `b`; identity auxiliary slots emit no gate.
void append_core(CircuitBuilder& b, const CoreSpec& spec, std::size_t c1,
                 std::size_t c2, std::size_t t);

/// 3-qubit core with c1 = q0, c2 = q1, target = q2.
Circuit build_core(const CoreSpec& spec);
Circuit build_boolean(BooleanGateKind kind);

enum class TwoBitKind { CSX, CSXdg, SWAP_BLOCH };
/// csx/csxdg: control q0, target q1. swap: q0, q1.
Circuit build_2bit(TwoBitKind kind);

enum class CompositeKind {
  AND4, AND5, POS5, SOP5, FREDKIN3, FREDKIN4, CSX3, CSXdg3, MILLER3,
};

struct CompositeSpec {
  CompositeKind kind;
  std::size_t m;  // ancillas
};

CompositeSpec composite_spec(CompositeKind kind);
/// Throws CircuitError if spec.m disagrees with the kind's ancilla count.
Circuit build_composite(const CompositeSpec& spec);

enum class StandardKind {
  TOFFOLI,             // textbook 6-CX Clifford+T, controls q0 q1, target q2
  TOFFOLI_BARENCO_RY,  // RY symmetric structure plus phase correction
  FREDKIN,             // control q0, swaps q1 q2
  CSX_EXACT,
  CSXdg_EXACT,
  SWAP_EXACT,
  TOFFOLI_N,           // n-1 controls q0.., target q(n-1); n in 3..5
  FREDKIN4_EXACT,      // controls q0 q1, swaps q2 q3
  CCSX_EXACT,          // controls q0 q1, target q2
  CCSXdg_EXACT,
  MILLER_EXACT,        // swaps |011> and |100>
  POS5_EXACT,          // (a|b)&(c|d) into q4 via ancillas q5 q6
  SOP5_EXACT,          // (a&b)|(c&d) into q4 via ancillas q5 q6
};

struct StandardSpec {
  StandardKind kind;
  std::size_t n = 3;
};

Circuit build_standard(const StandardSpec& spec);

/// exp(i * angle * x_0 x_1 ... x_k) over `qubits`, as CX parity ladders and
/// RZ rotations (exact up to global phase).
void append_multicontrolled_phase(CircuitBuilder& b,
                                  const std::vector<std::size_t>& qubits,
                                  Angle angle);

/// Every gate the command line knows by name.
enum class LibraryGate {
  and3, nand3, or3, nor3, imp3, inh3, and4, and5, pos5, sop5,
  fredkin3, fredkin4, csx2, csxdg2, swap2, csx3, csxdg3, miller3,
  toffoli, toffoli4, toffoli5,
};

const std::vector<LibraryGate>& all_library_gates();
std::string_view library_name(LibraryGate g);
std::optional<LibraryGate> library_from_name(std::string_view name);
/// False for the standard reference gates (toffoli, toffoli4, toffoli5).
bool is_layout_aware(LibraryGate g);
Circuit build_library(LibraryGate g);

/// Reference circuits accepted by `verify --against`.
std::optional<Circuit> build_oracle(std::string_view name);
std::vector<std::string> oracle_names();

/// Logical (c1, c2, target) triple of each 3-bit core inside a gate.
struct CoreTriple {
  std::size_t c1, c2, t;
};
std::vector<CoreTriple> core_triples(LibraryGate g);

/// Single-target classical behaviour: target qubit, controls (assignment
/// bit j = controls[j]) and the function; empty for gates that are not
/// single-output Boolean functions.
struct BooleanBehaviour {
  std::size_t target;
  std::vector<std::size_t> controls;
  std::vector<std::size_t> ancillas;
  std::function<bool(std::size_t assignment)> eval;
};
std::optional<BooleanBehaviour> boolean_behaviour(LibraryGate g);

}  // namespace qlayout
