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


#include "qlayout/circuit.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace qlayout {

namespace {

struct TagInfo {
  GateTag tag;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<TagInfo, 18> kTags{{
    {GateTag::I, "i", 1},     {GateTag::X, "x", 1},
    {GateTag::Y, "y", 1},     {GateTag::Z, "z", 1},
    {GateTag::H, "h", 1},     {GateTag::SX, "sx", 1},
    {GateTag::SXdg, "sxdg", 1}, {GateTag::S, "s", 1},
    {GateTag::Sdg, "sdg", 1}, {GateTag::T, "t", 1},
    {GateTag::Tdg, "tdg", 1}, {GateTag::RZ, "rz", 1},
    {GateTag::RY, "ry", 1},   {GateTag::CX, "cx", 2},
    {GateTag::CY, "cy", 2},   {GateTag::CZ, "cz", 2},
    {GateTag::SWAP, "swap", 2}, {GateTag::ECR, "ecr", 2},
}};

const TagInfo& info(GateTag tag) {
  return kTags[static_cast<std::size_t>(tag)];
}

}  // namespace

std::string_view tag_name(GateTag tag) { return info(tag).name; }

std::optional<GateTag> tag_from_name(std::string_view name) {
  for (const auto& t : kTags) {
    if (t.name == name) return t.tag;
  }
  return std::nullopt;
}

std::size_t arity(GateTag tag) { return info(tag).arity; }

bool is_rotation(GateTag tag) {
  return tag == GateTag::RZ || tag == GateTag::RY;
}

GateKind::GateKind(GateTag tag) : tag_(tag) {
  if (is_rotation(tag)) {
    throw CircuitError("gate '" + std::string(tag_name(tag)) +
                       "' requires an angle");
  }
}

GateKind::GateKind(GateTag tag, Angle angle) : tag_(tag), angle_(angle) {
  if (!is_rotation(tag)) {
    throw CircuitError("gate '" + std::string(tag_name(tag)) +
                       "' takes no angle");
  }
}

Gate::Gate(GateKind kind, std::size_t q0) : kind_(std::move(kind)), qubits_{q0, 0} {
  if (kind_.arity() != 1) {
    throw CircuitError("arity mismatch: '" +
                       std::string(tag_name(kind_.tag())) +
                       "' expects 2 qubits");
  }
}

Gate::Gate(GateKind kind, std::size_t q0, std::size_t q1)
    : kind_(std::move(kind)), qubits_{q0, q1} {
  if (kind_.arity() != 2) {
    throw CircuitError("arity mismatch: '" +
                       std::string(tag_name(kind_.tag())) +
                       "' expects 1 qubit");
  }
  if (q0 == q1) throw CircuitError("two-qubit gate on a repeated qubit");
}

bool Gate::acts_on(std::size_t q) const {
  const auto qs = qubits();
  return std::find(qs.begin(), qs.end(), q) != qs.end();
}

bool Gate::operator==(const Gate& other) const {
  if (!(kind_ == other.kind_)) return false;
  const auto a = qubits();
  const auto b = other.qubits();
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

std::string_view role_name(QubitRole role) {
  switch (role) {
    case QubitRole::Control:
      return "control";
    case QubitRole::Target:
      return "target";
    case QubitRole::Ancilla:
      return "ancilla";
  }
  return "control";
}

std::optional<QubitRole> role_from_name(std::string_view name) {
  if (name == "control") return QubitRole::Control;
  if (name == "target") return QubitRole::Target;
  if (name == "ancilla") return QubitRole::Ancilla;
  return std::nullopt;
}

Circuit::Circuit(std::size_t width, std::vector<Gate> gates,
                 std::vector<QubitRole> roles, std::string name)
    : width_(width),
      gates_(std::move(gates)),
      roles_(std::move(roles)),
      name_(std::move(name)) {
  if (width_ == 0) throw CircuitError("circuit width must be at least 1");
  if (roles_.empty()) roles_.assign(width_, QubitRole::Control);
  if (roles_.size() != width_) {
    throw CircuitError("role list length does not match circuit width");
  }
  for (const auto& g : gates_) {
    for (auto q : g.qubits()) {
      if (q >= width_) {
        throw CircuitError("qubit index " + std::to_string(q) +
                           " out of range for width " +
                           std::to_string(width_));
      }
    }
  }
}

std::vector<std::size_t> Circuit::qubits_with_role(QubitRole role) const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < width_; ++q) {
    if (roles_[q] == role) out.push_back(q);
  }
  return out;
}

Circuit Circuit::with_gates(std::vector<Gate> gates) const {
  return Circuit(width_, std::move(gates), roles_, name_);
}

Circuit Circuit::renamed(std::string name) const {
  return Circuit(width_, gates_, roles_, std::move(name));
}

CircuitBuilder::CircuitBuilder(std::size_t width, std::string name)
    : width_(width), name_(std::move(name)), roles_(width, QubitRole::Control) {}

CircuitBuilder& CircuitBuilder::add(GateKind kind, std::size_t q0) {
  gates_.emplace_back(std::move(kind), q0);
  return *this;
}

CircuitBuilder& CircuitBuilder::add(GateKind kind, std::size_t q0,
                                    std::size_t q1) {
  gates_.emplace_back(std::move(kind), q0, q1);
  return *this;
}

CircuitBuilder& CircuitBuilder::add(const Gate& gate) {
  gates_.push_back(gate);
  return *this;
}

CircuitBuilder& CircuitBuilder::append(const Circuit& other) {
  if (other.width() > width_) {
    throw CircuitError("appended circuit is wider than the builder");
  }
  gates_.insert(gates_.end(), other.gates().begin(), other.gates().end());
  return *this;
}

CircuitBuilder& CircuitBuilder::role(std::size_t qubit, QubitRole r) {
  roles_.at(qubit) = r;
  return *this;
}

Circuit CircuitBuilder::build() const {
  return Circuit(width_, gates_, roles_, name_);
}

std::size_t CostReport::count(GateTag tag) const {
  auto it = counts.find(std::string(tag_name(tag)));
  return it == counts.end() ? 0 : it->second;
}

std::size_t depth(const Circuit& circuit) {
  std::vector<std::size_t> level(circuit.width(), 0);
  std::size_t deepest = 0;
  for (const auto& g : circuit.gates()) {
    std::size_t l = 0;
    for (auto q : g.qubits()) l = std::max(l, level[q]);
    ++l;
    for (auto q : g.qubits()) level[q] = l;
    deepest = std::max(deepest, l);
  }
  return deepest;
}

CostReport count_gates(const Circuit& circuit) {
  CostReport report;
  for (const auto& g : circuit.gates()) {
    ++report.counts[std::string(tag_name(g.tag()))];
    ++report.qc;
  }
  report.depth = depth(circuit);
  return report;
}

}  // namespace qlayout
