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
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qlayout/angle.hpp"

namespace qlayout {

class CircuitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GateTag {
  I, X, Y, Z, H, SX, SXdg, S, Sdg, T, Tdg, RZ, RY,
  CX, CY, CZ, SWAP, ECR,
};

/// Lower-case text name (`sx`, `sxdg`, `cx`, ...).
std::string_view tag_name(GateTag tag);
std::optional<GateTag> tag_from_name(std::string_view name);
std::size_t arity(GateTag tag);
bool is_rotation(GateTag tag);

/// Tag plus angle; the angle is present exactly for RZ and RY.
class GateKind {
 public:
  GateKind(GateTag tag);  // NOLINT(google-explicit-constructor)
  GateKind(GateTag tag, Angle angle);

  static GateKind rz(Angle a) { return {GateTag::RZ, a}; }
  static GateKind ry(Angle a) { return {GateTag::RY, a}; }

  GateTag tag() const { return tag_; }
  const std::optional<Angle>& angle() const { return angle_; }
  std::size_t arity() const { return qlayout::arity(tag_); }

  bool operator==(const GateKind&) const = default;

 private:
  GateTag tag_;
  std::optional<Angle> angle_;
};

/// One gate instance. For CX/CY/CZ/ECR qubits()[0] is the control.
class Gate {
 public:
  Gate(GateKind kind, std::size_t q0);
  Gate(GateKind kind, std::size_t q0, std::size_t q1);

  const GateKind& kind() const { return kind_; }
  GateTag tag() const { return kind_.tag(); }
  std::span<const std::size_t> qubits() const {
    return {qubits_.data(), kind_.arity()};
  }
  std::size_t qubit(std::size_t i) const { return qubits_.at(i); }
  bool acts_on(std::size_t q) const;

  bool operator==(const Gate& other) const;

 private:
  GateKind kind_;
  std::array<std::size_t, 2> qubits_{};
};

enum class QubitRole { Control, Target, Ancilla };

std::string_view role_name(QubitRole role);
std::optional<QubitRole> role_from_name(std::string_view name);

/// Immutable gate list over `width` logical qubits. Ancilla-tagged qubits
/// are assumed to start in |0>.
class Circuit {
 public:
  Circuit(std::size_t width, std::vector<Gate> gates,
          std::vector<QubitRole> roles = {}, std::string name = {});

  std::size_t width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<QubitRole>& roles() const { return roles_; }
  const std::string& name() const { return name_; }
  bool empty() const { return gates_.empty(); }
  std::size_t size() const { return gates_.size(); }

  std::vector<std::size_t> qubits_with_role(QubitRole role) const;

  /// Same roles and name, different gate list.
  Circuit with_gates(std::vector<Gate> gates) const;
  Circuit renamed(std::string name) const;

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t width_;
  std::vector<Gate> gates_;
  std::vector<QubitRole> roles_;
  std::string name_;
};

/// Incremental construction; `build()` validates and freezes.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(std::size_t width, std::string name = {});

  CircuitBuilder& add(GateKind kind, std::size_t q0);
  CircuitBuilder& add(GateKind kind, std::size_t q0, std::size_t q1);
  CircuitBuilder& add(const Gate& gate);
  CircuitBuilder& append(const Circuit& other);
  CircuitBuilder& role(std::size_t qubit, QubitRole r);

  std::size_t width() const { return width_; }
  Circuit build() const;

 private:
  std::size_t width_;
  std::string name_;
  std::vector<Gate> gates_;
  std::vector<QubitRole> roles_;
};

struct CostReport {
  std::map<std::string, std::size_t> counts;
  std::size_t qc = 0;
  std::size_t depth = 0;

  std::size_t count(GateTag tag) const;
  bool operator==(const CostReport&) const = default;
};

/// Greedy layering; every gate, single- or two-qubit, takes one layer on
/// each of its qubits.
std::size_t depth(const Circuit& circuit);

/// Counts per tag (RZ once per instance), total and depth.
CostReport count_gates(const Circuit& circuit);

}  // namespace qlayout
