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


#include "qlayout/gate_library.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qlayout {

namespace {

constexpr std::array<std::pair<AuxGate, std::string_view>, 10> kAuxNames{{
    {AuxGate::I, "i"},     {AuxGate::X, "x"},     {AuxGate::SX, "sx"},
    {AuxGate::SXdg, "sxdg"}, {AuxGate::Z, "z"},   {AuxGate::S, "s"},
    {AuxGate::Sdg, "sdg"}, {AuxGate::T, "t"},     {AuxGate::Tdg, "tdg"},
    {AuxGate::NegZ, "-z"},
}};

void append_gates(CircuitBuilder& b, const std::vector<Gate>& gates) {
  for (const auto& g : gates) b.add(g);
}

// Textbook 6-CX Clifford+T Toffoli.
void append_toffoli(CircuitBuilder& b, std::size_t c1, std::size_t c2,
                    std::size_t t) {
  b.add(GateTag::H, t)
      .add(GateTag::CX, c2, t)
      .add(GateTag::Tdg, t)
      .add(GateTag::CX, c1, t)
      .add(GateTag::T, t)
      .add(GateTag::CX, c2, t)
      .add(GateTag::Tdg, t)
      .add(GateTag::CX, c1, t)
      .add(GateTag::T, c2)
      .add(GateTag::T, t)
      .add(GateTag::H, t)
      .add(GateTag::CX, c1, c2)
      .add(GateTag::T, c1)
      .add(GateTag::Tdg, c2)
      .add(GateTag::CX, c1, c2);
}

void append_or_standard(CircuitBuilder& b, std::size_t c1, std::size_t c2,
                        std::size_t t) {
  b.add(GateTag::X, c1).add(GateTag::X, c2);
  append_toffoli(b, c1, c2, t);
  b.add(GateTag::X, t).add(GateTag::X, c1).add(GateTag::X, c2);
}

void append_mc_x(CircuitBuilder& b, std::vector<std::size_t> qubits) {
  const std::size_t t = qubits.back();
  b.add(GateTag::H, t);
  append_multicontrolled_phase(b, qubits, Angle::pi_fraction(1));
  b.add(GateTag::H, t);
}

void append_2bit(CircuitBuilder& b, TwoBitKind kind, std::size_t c,
                 std::size_t t) {
  switch (kind) {
    case TwoBitKind::CSX:
    case TwoBitKind::CSXdg: {
      const bool dg = kind == TwoBitKind::CSXdg;
      b.add(GateTag::H, t)
          .add(dg ? GateTag::Tdg : GateTag::T, t)
          .add(GateTag::CX, c, t)
          .add(dg ? GateTag::T : GateTag::Tdg, t)
          .add(GateTag::H, t)
          .add(GateTag::Z, t);
      return;
    }
    case TwoBitKind::SWAP_BLOCH:
      b.add(GateTag::H, c)
          .add(GateTag::CX, c, t)
          .add(GateTag::CX, t, c)
          .add(GateTag::H, t);
      return;
  }
}

const CoreSpec kAnd = boolean_spec(BooleanGateKind::AND);

}  // namespace

std::string_view aux_name(AuxGate a) {
  for (const auto& [g, n] : kAuxNames) {
    if (g == a) return n;
  }
  return "i";
}

std::optional<AuxGate> aux_from_name(std::string_view name) {
  for (const auto& [g, n] : kAuxNames) {
    if (n == name) return g;
  }
  if (name == "negz") return AuxGate::NegZ;
  return std::nullopt;
}

std::vector<GateTag> aux_gates(AuxGate a) {
  switch (a) {
    case AuxGate::I:
      return {};
    case AuxGate::X:
      return {GateTag::X};
    case AuxGate::SX:
      return {GateTag::SX};
    case AuxGate::SXdg:
      return {GateTag::SXdg};
    case AuxGate::Z:
      return {GateTag::Z};
    case AuxGate::S:
      return {GateTag::S};
    case AuxGate::Sdg:
      return {GateTag::Sdg};
    case AuxGate::T:
      return {GateTag::T};
    case AuxGate::Tdg:
      return {GateTag::Tdg};
    case AuxGate::NegZ:
      // X . Z . X = -Z
      return {GateTag::X, GateTag::Z, GateTag::X};
  }
  return {};
}

std::string CoreSpec::to_string() const {
  std::ostringstream os;
  os << "(" << tag_name(sp1) << ", " << aux_name(ax1);
  for (auto t : theta) os << ", " << tag_name(t);
  os << ", " << aux_name(ax2) << ", " << tag_name(sp2) << ")";
  return os.str();
}

bool is_superposition_tag(GateTag t) {
  return t == GateTag::H || t == GateTag::SX || t == GateTag::SXdg;
}

bool is_theta_tag(GateTag t) {
  return t == GateTag::S || t == GateTag::Sdg || t == GateTag::T ||
         t == GateTag::Tdg;
}

CoreSpec boolean_spec(BooleanGateKind kind) {
  using enum GateTag;
  CoreSpec s;
  switch (kind) {
    case BooleanGateKind::AND:
      s.theta = {Tdg, T, Tdg, T};
      s.ax2 = AuxGate::I;
      break;
    case BooleanGateKind::NAND:
      s.theta = {Tdg, T, Tdg, T};
      s.ax2 = AuxGate::NegZ;
      break;
    case BooleanGateKind::OR:
      s.theta = {T, T, T, T};
      s.ax2 = AuxGate::Z;
      break;
    case BooleanGateKind::NOR:
      s.theta = {T, T, T, T};
      s.ax2 = AuxGate::I;
      break;
    case BooleanGateKind::IMPLICATION:
      s.theta = {Tdg, Tdg, T, T};
      s.ax2 = AuxGate::NegZ;
      break;
    case BooleanGateKind::INHIBITION:
      s.theta = {Tdg, Tdg, T, T};
      s.ax2 = AuxGate::I;
      break;
  }
  return s;
}

bool boolean_eval(BooleanGateKind kind, bool a, bool b) {
  switch (kind) {
    case BooleanGateKind::AND:
      return a && b;
    case BooleanGateKind::NAND:
      return !(a && b);
    case BooleanGateKind::OR:
      return a || b;
    case BooleanGateKind::NOR:
      return !(a || b);
    case BooleanGateKind::IMPLICATION:
      return !a || b;
    case BooleanGateKind::INHIBITION:
      return !(!a || b);
  }
  return false;
}

std::string_view boolean_name(BooleanGateKind kind) {
  switch (kind) {
    case BooleanGateKind::AND:
      return "and3";
    case BooleanGateKind::NAND:
      return "nand3";
    case BooleanGateKind::OR:
      return "or3";
    case BooleanGateKind::NOR:
      return "nor3";
    case BooleanGateKind::IMPLICATION:
      return "imp3";
    case BooleanGateKind::INHIBITION:
      return "inh3";
  }
  return "";
}

std::vector<CoreStage> core_stages(const CoreSpec& spec, std::size_t c1,
                                   std::size_t c2, std::size_t t) {
  if (!is_superposition_tag(spec.sp1) || !is_superposition_tag(spec.sp2)) {
    throw CircuitError("superposition slots must hold h, sx or sxdg");
  }
  for (auto th : spec.theta) {
    if (!is_theta_tag(th)) {
      throw CircuitError("theta slots must hold s, sdg, t or tdg");
    }
  }
  std::vector<CoreStage> stages;
  auto single = [&](std::string label, std::vector<GateTag> tags) {
    CoreStage st{std::move(label), {}, std::nullopt};
    for (auto tag : tags) st.gates.emplace_back(tag, t);
    stages.push_back(std::move(st));
  };
  auto cx = [&](std::string label, std::size_t c) {
    stages.push_back({std::move(label), {Gate(GateTag::CX, c, t)}, c});
  };

  std::vector<GateTag> first{spec.sp1};
  for (auto g : aux_gates(spec.ax1)) first.push_back(g);
  single("SP1", first);
  single("theta1", {spec.theta[0]});
  cx("CX c2", c2);
  single("theta2", {spec.theta[1]});
  cx("CX c1", c1);
  single("theta3", {spec.theta[2]});
  cx("CX c2", c2);
  std::vector<GateTag> last{spec.theta[3]};
  for (auto g : aux_gates(spec.ax2)) last.push_back(g);
  single("theta4", last);
  single("SP2", {spec.sp2});
  return stages;
}

void append_core(CircuitBuilder& b, const CoreSpec& spec, std::size_t c1,
                 std::size_t c2, std::size_t t) {
  for (const auto& st : core_stages(spec, c1, c2, t)) append_gates(b, st.gates);
}

Circuit build_core(const CoreSpec& spec) {
  CircuitBuilder b(3, "core");
  b.role(2, QubitRole::Target);
  append_core(b, spec, 0, 1, 2);
  return b.build();
}

Circuit build_boolean(BooleanGateKind kind) {
  CircuitBuilder b(3, std::string(boolean_name(kind)));
  b.role(2, QubitRole::Target);
  append_core(b, boolean_spec(kind), 0, 1, 2);
  return b.build();
}

Circuit build_2bit(TwoBitKind kind) {
  std::string name = kind == TwoBitKind::CSX     ? "csx2"
                     : kind == TwoBitKind::CSXdg ? "csxdg2"
                                                 : "swap2";
  CircuitBuilder b(2, name);
  if (kind == TwoBitKind::SWAP_BLOCH) b.role(0, QubitRole::Target);
  b.role(1, QubitRole::Target);
  append_2bit(b, kind, 0, 1);
  return b.build();
}

CompositeSpec composite_spec(CompositeKind kind) {
  switch (kind) {
    case CompositeKind::AND4:
    case CompositeKind::FREDKIN4:
    case CompositeKind::CSX3:
    case CompositeKind::CSXdg3:
      return {kind, 1};
    case CompositeKind::AND5:
    case CompositeKind::POS5:
    case CompositeKind::SOP5:
      return {kind, 2};
    case CompositeKind::FREDKIN3:
    case CompositeKind::MILLER3:
      return {kind, 0};
  }
  throw CircuitError("unknown composite kind");
}

Circuit build_composite(const CompositeSpec& spec) {
  if (composite_spec(spec.kind).m != spec.m) {
    throw CircuitError("ancilla count does not match composite kind");
  }
  const CoreSpec and_core = kAnd;
  const CoreSpec or_core = boolean_spec(BooleanGateKind::OR);
  switch (spec.kind) {
    case CompositeKind::AND4: {
      // c1 c2 c3 | t = q3 | anc = q4
      CircuitBuilder b(5, "and4");
      b.role(3, QubitRole::Target).role(4, QubitRole::Ancilla);
      append_core(b, and_core, 0, 1, 4);
      append_core(b, and_core, 4, 2, 3);
      return b.build();
    }
    case CompositeKind::AND5:
    case CompositeKind::POS5:
    case CompositeKind::SOP5: {
      // c1..c4 | t = q4 | anc = q5 q6
      const bool pos = spec.kind == CompositeKind::POS5;
      const bool sop = spec.kind == CompositeKind::SOP5;
      const CoreSpec& outer = pos ? or_core : and_core;
      const CoreSpec& inner = sop ? or_core : and_core;
      CircuitBuilder b(7, pos ? "pos5" : sop ? "sop5" : "and5");
      b.role(4, QubitRole::Target)
          .role(5, QubitRole::Ancilla)
          .role(6, QubitRole::Ancilla);
      append_core(b, outer, 0, 1, 5);
      append_core(b, outer, 2, 3, 6);
      append_core(b, inner, 5, 6, 4);
      return b.build();
    }
    case CompositeKind::FREDKIN3: {
      // control q0, swapped pair q1 q2; core target q2 sits in the middle.
      CircuitBuilder b(3, "fredkin3");
      b.role(1, QubitRole::Target).role(2, QubitRole::Target);
      b.add(GateTag::CX, 2, 1);
      append_core(b, and_core, 0, 1, 2);
      b.add(GateTag::CX, 2, 1);
      return b.build();
    }
    case CompositeKind::FREDKIN4: {
      // controls q0 q1, swapped pair q2 q3, anc q4
      CircuitBuilder b(5, "fredkin4");
      b.role(2, QubitRole::Target)
          .role(3, QubitRole::Target)
          .role(4, QubitRole::Ancilla);
      append_core(b, and_core, 0, 1, 4);
      b.add(GateTag::CX, 3, 2);
      append_core(b, and_core, 4, 2, 3);
      b.add(GateTag::CX, 3, 2);
      return b.build();
    }
    case CompositeKind::CSX3:
    case CompositeKind::CSXdg3: {
      const bool dg = spec.kind == CompositeKind::CSXdg3;
      CircuitBuilder b(4, dg ? "csxdg3" : "csx3");
      b.role(2, QubitRole::Target).role(3, QubitRole::Ancilla);
      append_core(b, and_core, 0, 1, 3);
      append_2bit(b, dg ? TwoBitKind::CSXdg : TwoBitKind::CSX, 3, 2);
      return b.build();
    }
    case CompositeKind::MILLER3: {
      CircuitBuilder b(3, "miller3");
      b.role(2, QubitRole::Target);
      b.add(GateTag::CX, 2, 1).add(GateTag::CX, 2, 0);
      append_core(b, and_core, 0, 1, 2);
      b.add(GateTag::CX, 2, 1).add(GateTag::CX, 2, 0);
      return b.build();
    }
  }
  throw CircuitError("unknown composite kind");
}

void append_multicontrolled_phase(CircuitBuilder& b,
                                  const std::vector<std::size_t>& qubits,
                                  Angle angle) {
  // x_1 ... x_k = 2^{1-k} * sum over nonempty S of (-1)^{|S|+1} parity(S)
  const std::size_t k = qubits.size();
  if (k == 0 || k > 12) throw CircuitError("bad multi-controlled phase size");
  const std::int64_t scale = std::int64_t{1} << (k - 1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) members.push_back(qubits[i]);
    }
    const bool odd = members.size() % 2 == 1;
    Angle beta = angle.is_exact()
                     ? Angle::pi_fraction(angle.numerator(),
                                          angle.denominator() * scale)
                     : Angle::from_radians(angle.radians() /
                                           static_cast<double>(scale));
    if (!odd) beta = -beta;
    const std::size_t sink = members.back();
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
      b.add(GateTag::CX, members[i], sink);
    }
    b.add(GateKind::rz(beta), sink);
    for (std::size_t i = members.size() - 1; i-- > 0;) {
      b.add(GateTag::CX, members[i], sink);
    }
  }
}

Circuit build_standard(const StandardSpec& spec) {
  switch (spec.kind) {
    case StandardKind::TOFFOLI: {
      CircuitBuilder b(3, "toffoli");
      b.role(2, QubitRole::Target);
      append_toffoli(b, 0, 1, 2);
      return b.build();
    }
    case StandardKind::TOFFOLI_BARENCO_RY: {
      CircuitBuilder b(3, "toffoli_ry");
      b.role(2, QubitRole::Target);
      const Angle q = Angle::pi_fraction(1, 4);
      b.add(GateKind::ry(q), 2)
          .add(GateTag::CX, 1, 2)
          .add(GateKind::ry(q), 2)
          .add(GateTag::CX, 0, 2)
          .add(GateKind::ry(-q), 2)
          .add(GateTag::CX, 1, 2)
          .add(GateKind::ry(-q), 2);
      // The RY structure leaves -1 on |t=1, c2=0, c1=1>; undo it.
      b.add(GateTag::X, 1);
      append_multicontrolled_phase(b, {0, 1, 2}, Angle::pi_fraction(1));
      b.add(GateTag::X, 1);
      return b.build();
    }
    case StandardKind::FREDKIN: {
      CircuitBuilder b(3, "fredkin");
      b.role(1, QubitRole::Target).role(2, QubitRole::Target);
      b.add(GateTag::CX, 2, 1);
      append_toffoli(b, 0, 1, 2);
      b.add(GateTag::CX, 2, 1);
      return b.build();
    }
    case StandardKind::CSX_EXACT:
    case StandardKind::CSXdg_EXACT: {
      const bool dg = spec.kind == StandardKind::CSXdg_EXACT;
      const GateTag p = dg ? GateTag::Tdg : GateTag::T;
      const GateTag m = dg ? GateTag::T : GateTag::Tdg;
      CircuitBuilder b(2, dg ? "csxdg_exact" : "csx_exact");
      b.role(1, QubitRole::Target);
      // H . controlled-S . H
      b.add(GateTag::H, 1)
          .add(p, 0)
          .add(p, 1)
          .add(GateTag::CX, 0, 1)
          .add(m, 1)
          .add(GateTag::CX, 0, 1)
          .add(GateTag::H, 1);
      return b.build();
    }
    case StandardKind::SWAP_EXACT: {
      CircuitBuilder b(2, "swap_exact");
      b.role(0, QubitRole::Target).role(1, QubitRole::Target);
      b.add(GateTag::CX, 0, 1).add(GateTag::CX, 1, 0).add(GateTag::CX, 0, 1);
      return b.build();
    }
    case StandardKind::TOFFOLI_N: {
      if (spec.n < 3 || spec.n > 5) {
        throw CircuitError("TOFFOLI_N supports 3 <= n <= 5");
      }
      CircuitBuilder b(spec.n, "toffoli" + std::to_string(spec.n));
      b.role(spec.n - 1, QubitRole::Target);
      if (spec.n == 3) {
        append_toffoli(b, 0, 1, 2);
      } else {
        std::vector<std::size_t> qs(spec.n);
        for (std::size_t i = 0; i < spec.n; ++i) qs[i] = i;
        append_mc_x(b, qs);
      }
      return b.build();
    }
    case StandardKind::FREDKIN4_EXACT: {
      CircuitBuilder b(4, "fredkin4_exact");
      b.role(2, QubitRole::Target).role(3, QubitRole::Target);
      b.add(GateTag::CX, 3, 2);
      append_mc_x(b, {0, 1, 2, 3});
      b.add(GateTag::CX, 3, 2);
      return b.build();
    }
    case StandardKind::CCSX_EXACT:
    case StandardKind::CCSXdg_EXACT: {
      const bool dg = spec.kind == StandardKind::CCSXdg_EXACT;
      CircuitBuilder b(3, dg ? "ccsxdg_exact" : "ccsx_exact");
      b.role(2, QubitRole::Target);
      b.add(GateTag::H, 2);
      append_multicontrolled_phase(b, {0, 1, 2},
                                   Angle::pi_fraction(dg ? -1 : 1, 2));
      b.add(GateTag::H, 2);
      return b.build();
    }
    case StandardKind::MILLER_EXACT: {
      CircuitBuilder b(3, "miller_exact");
      b.role(2, QubitRole::Target);
      b.add(GateTag::CX, 2, 1).add(GateTag::CX, 2, 0);
      append_toffoli(b, 0, 1, 2);
      b.add(GateTag::CX, 2, 1).add(GateTag::CX, 2, 0);
      return b.build();
    }
    case StandardKind::POS5_EXACT:
    case StandardKind::SOP5_EXACT: {
      const bool pos = spec.kind == StandardKind::POS5_EXACT;
      CircuitBuilder b(7, pos ? "pos5_exact" : "sop5_exact");
      b.role(4, QubitRole::Target)
          .role(5, QubitRole::Ancilla)
          .role(6, QubitRole::Ancilla);
      if (pos) {
        append_or_standard(b, 0, 1, 5);
        append_or_standard(b, 2, 3, 6);
        append_toffoli(b, 5, 6, 4);
      } else {
        append_toffoli(b, 0, 1, 5);
        append_toffoli(b, 2, 3, 6);
        append_or_standard(b, 5, 6, 4);
      }
      return b.build();
    }
  }
  throw CircuitError("unknown standard gate");
}

namespace {

constexpr std::array<std::pair<LibraryGate, std::string_view>, 21> kLibrary{{
    {LibraryGate::and3, "and3"},         {LibraryGate::nand3, "nand3"},
    {LibraryGate::or3, "or3"},           {LibraryGate::nor3, "nor3"},
    {LibraryGate::imp3, "imp3"},         {LibraryGate::inh3, "inh3"},
    {LibraryGate::and4, "and4"},         {LibraryGate::and5, "and5"},
    {LibraryGate::pos5, "pos5"},         {LibraryGate::sop5, "sop5"},
    {LibraryGate::fredkin3, "fredkin3"}, {LibraryGate::fredkin4, "fredkin4"},
    {LibraryGate::csx2, "csx2"},         {LibraryGate::csxdg2, "csxdg2"},
    {LibraryGate::swap2, "swap2"},       {LibraryGate::csx3, "csx3"},
    {LibraryGate::csxdg3, "csxdg3"},     {LibraryGate::miller3, "miller3"},
    {LibraryGate::toffoli, "toffoli"},   {LibraryGate::toffoli4, "toffoli4"},
    {LibraryGate::toffoli5, "toffoli5"},
}};

std::optional<BooleanGateKind> as_boolean(LibraryGate g) {
  switch (g) {
    case LibraryGate::and3:
      return BooleanGateKind::AND;
    case LibraryGate::nand3:
      return BooleanGateKind::NAND;
    case LibraryGate::or3:
      return BooleanGateKind::OR;
    case LibraryGate::nor3:
      return BooleanGateKind::NOR;
    case LibraryGate::imp3:
      return BooleanGateKind::IMPLICATION;
    case LibraryGate::inh3:
      return BooleanGateKind::INHIBITION;
    default:
      return std::nullopt;
  }
}

bool bit(std::size_t v, std::size_t i) { return (v >> i) & 1U; }

}  // namespace

const std::vector<LibraryGate>& all_library_gates() {
  static const std::vector<LibraryGate> all = [] {
    std::vector<LibraryGate> v;
    for (const auto& [g, n] : kLibrary) v.push_back(g);
    return v;
  }();
  return all;
}

std::string_view library_name(LibraryGate g) {
  return kLibrary[static_cast<std::size_t>(g)].second;
}

std::optional<LibraryGate> library_from_name(std::string_view name) {
  for (const auto& [g, n] : kLibrary) {
    if (n == name) return g;
  }
  return std::nullopt;
}

bool is_layout_aware(LibraryGate g) {
  return g != LibraryGate::toffoli && g != LibraryGate::toffoli4 &&
         g != LibraryGate::toffoli5;
}

Circuit build_library(LibraryGate g) {
  if (auto b = as_boolean(g)) return build_boolean(*b);
  switch (g) {
    case LibraryGate::and4:
      return build_composite(composite_spec(CompositeKind::AND4));
    case LibraryGate::and5:
      return build_composite(composite_spec(CompositeKind::AND5));
    case LibraryGate::pos5:
      return build_composite(composite_spec(CompositeKind::POS5));
    case LibraryGate::sop5:
      return build_composite(composite_spec(CompositeKind::SOP5));
    case LibraryGate::fredkin3:
      return build_composite(composite_spec(CompositeKind::FREDKIN3));
    case LibraryGate::fredkin4:
      return build_composite(composite_spec(CompositeKind::FREDKIN4));
    case LibraryGate::csx2:
      return build_2bit(TwoBitKind::CSX);
    case LibraryGate::csxdg2:
      return build_2bit(TwoBitKind::CSXdg);
    case LibraryGate::swap2:
      return build_2bit(TwoBitKind::SWAP_BLOCH);
    case LibraryGate::csx3:
      return build_composite(composite_spec(CompositeKind::CSX3));
    case LibraryGate::csxdg3:
      return build_composite(composite_spec(CompositeKind::CSXdg3));
    case LibraryGate::miller3:
      return build_composite(composite_spec(CompositeKind::MILLER3));
    case LibraryGate::toffoli:
      return build_standard({StandardKind::TOFFOLI});
    case LibraryGate::toffoli4:
      return build_standard({StandardKind::TOFFOLI_N, 4});
    case LibraryGate::toffoli5:
      return build_standard({StandardKind::TOFFOLI_N, 5});
    default:
      break;
  }
  throw CircuitError("unknown library gate");
}

namespace {

const std::vector<std::pair<std::string, StandardSpec>>& oracle_table() {
  static const std::vector<std::pair<std::string, StandardSpec>> t{
      {"toffoli", {StandardKind::TOFFOLI}},
      {"toffoli4", {StandardKind::TOFFOLI_N, 4}},
      {"toffoli5", {StandardKind::TOFFOLI_N, 5}},
      {"toffoli_ry", {StandardKind::TOFFOLI_BARENCO_RY}},
      {"fredkin", {StandardKind::FREDKIN}},
      {"fredkin4_exact", {StandardKind::FREDKIN4_EXACT}},
      {"csx_exact", {StandardKind::CSX_EXACT}},
      {"csxdg_exact", {StandardKind::CSXdg_EXACT}},
      {"swap_exact", {StandardKind::SWAP_EXACT}},
      {"ccsx_exact", {StandardKind::CCSX_EXACT}},
      {"ccsxdg_exact", {StandardKind::CCSXdg_EXACT}},
      {"miller_exact", {StandardKind::MILLER_EXACT}},
      {"pos5_exact", {StandardKind::POS5_EXACT}},
      {"sop5_exact", {StandardKind::SOP5_EXACT}},
  };
  return t;
}

}  // namespace

std::optional<Circuit> build_oracle(std::string_view name) {
  for (const auto& [n, spec] : oracle_table()) {
    if (n == name) return build_standard(spec);
  }
  return std::nullopt;
}

std::vector<std::string> oracle_names() {
  std::vector<std::string> out;
  for (const auto& [n, spec] : oracle_table()) out.push_back(n);
  return out;
}

std::vector<CoreTriple> core_triples(LibraryGate g) {
  if (as_boolean(g)) return {{0, 1, 2}};
  switch (g) {
    case LibraryGate::and4:
    case LibraryGate::fredkin4:
      return {{0, 1, 4}, {4, 2, 3}};
    case LibraryGate::and5:
    case LibraryGate::pos5:
    case LibraryGate::sop5:
      return {{0, 1, 5}, {2, 3, 6}, {5, 6, 4}};
    case LibraryGate::fredkin3:
    case LibraryGate::miller3:
      return {{0, 1, 2}};
    case LibraryGate::csx3:
    case LibraryGate::csxdg3:
      return {{0, 1, 3}};
    default:
      return {};
  }
}

std::optional<BooleanBehaviour> boolean_behaviour(LibraryGate g) {
  if (auto kind = as_boolean(g)) {
    const BooleanGateKind k = *kind;
    return BooleanBehaviour{2, {0, 1}, {}, [k](std::size_t a) {
                              return boolean_eval(k, bit(a, 0), bit(a, 1));
                            }};
  }
  auto all_set = [](std::size_t bits) {
    return [bits](std::size_t a) { return a == (std::size_t{1} << bits) - 1; };
  };
  switch (g) {
    case LibraryGate::and4:
      return BooleanBehaviour{3, {0, 1, 2}, {4}, all_set(3)};
    case LibraryGate::and5:
      return BooleanBehaviour{4, {0, 1, 2, 3}, {5, 6}, all_set(4)};
    case LibraryGate::pos5:
      return BooleanBehaviour{4, {0, 1, 2, 3}, {5, 6}, [](std::size_t a) {
                                return (bit(a, 0) || bit(a, 1)) &&
                                       (bit(a, 2) || bit(a, 3));
                              }};
    case LibraryGate::sop5:
      return BooleanBehaviour{4, {0, 1, 2, 3}, {5, 6}, [](std::size_t a) {
                                return (bit(a, 0) && bit(a, 1)) ||
                                       (bit(a, 2) && bit(a, 3));
                              }};
    case LibraryGate::toffoli:
      return BooleanBehaviour{2, {0, 1}, {}, all_set(2)};
    case LibraryGate::toffoli4:
      return BooleanBehaviour{3, {0, 1, 2}, {}, all_set(3)};
    case LibraryGate::toffoli5:
      return BooleanBehaviour{4, {0, 1, 2, 3}, {}, all_set(4)};
    default:
      return std::nullopt;
  }
}

}  // namespace qlayout
