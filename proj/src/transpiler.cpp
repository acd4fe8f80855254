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


#include "qlayout/transpiler.hpp"

#include <limits>
#include <sstream>


namespace qlayout {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

Angle quarter(std::int64_t k) { return Angle::pi_fraction(k, 4); }

Circuit one(std::initializer_list<GateKind> kinds) {
  std::vector<Gate> gates;
  for (const auto& k : kinds) gates.emplace_back(k, 0);
  return Circuit(1, std::move(gates));
}

std::vector<RewriteRule> single_qubit_rules() {
  using enum GateTag;
  auto rz = [](std::int64_t k) { return GateKind::rz(quarter(k)); };
  return {
      {Y, one({rz(4), X})},
      {Z, one({rz(4)})},
      {H, one({rz(2), SX, rz(2)})},
      {SXdg, one({SX, X})},
      {S, one({rz(2)})},
      {Sdg, one({rz(-2)})},
      {T, one({rz(1)})},
      {Tdg, one({rz(-1)})},
  };
}

// CX = [c: RZ(pi/2), X] ECR [t: SX]
Circuit cx_via_ecr() {
  return Circuit(2, {Gate(GateKind::rz(quarter(2)), 0), Gate(GateTag::X, 0),
                     Gate(GateTag::ECR, 0, 1), Gate(GateTag::SX, 1)});
}

// Inverse dressing: ECR = [c: X, RZ(-pi/2)] CX [t: SXdg]
Circuit ecr_via_cx() {
  return Circuit(2, {Gate(GateTag::X, 0), Gate(GateKind::rz(quarter(-2)), 0),
                     Gate(GateTag::CX, 0, 1), Gate(GateTag::SXdg, 1)});
}

std::vector<RewriteRule> two_qubit_rules(NativeBasis b) {
  using enum GateTag;
  std::vector<RewriteRule> r{
      {CY, Circuit(2, {Gate(Sdg, 1), Gate(CX, 0, 1), Gate(S, 1)})},
      {CZ, Circuit(2, {Gate(H, 1), Gate(CX, 0, 1), Gate(H, 1)})},
      {SWAP, Circuit(2, {Gate(CX, 0, 1), Gate(CX, 1, 0), Gate(CX, 0, 1)})},
  };
  if (b == NativeBasis::ECR) {
    r.push_back({CX, cx_via_ecr()});
  } else {
    r.push_back({ECR, ecr_via_cx()});
  }
  return r;
}

std::vector<RewriteRule> build_rules(NativeBasis b) {
  auto r = single_qubit_rules();
  for (auto& x : two_qubit_rules(b)) r.push_back(std::move(x));
  return r;
}

void expand(const Gate& g, NativeBasis b, std::vector<Gate>& out, int depth) {
  if (depth > 8) throw CircuitError("rewrite rules do not terminate");
  if (is_native(g.tag(), b)) {
    out.push_back(g);
    return;
  }
  Circuit rhs(1, {});
  if (g.tag() == GateTag::RY) {
    rhs = lower_ry(*g.kind().angle());
  } else {
    const RewriteRule* rule = nullptr;
    for (const auto& r : rewrite_rules(b)) {
      if (r.lhs == g.kind()) rule = &r;
    }
    if (!rule) {
      throw CircuitError("unsupported gate kind '" +
                         std::string(tag_name(g.tag())) + "'");
    }
    rhs = rule->rhs;
  }
  for (const auto& h : rhs.gates()) {
    if (h.kind().arity() == 1) {
      expand(Gate(h.kind(), g.qubit(h.qubit(0))), b, out, depth + 1);
    } else {
      expand(Gate(h.kind(), g.qubit(h.qubit(0)), g.qubit(h.qubit(1))), b, out,
             depth + 1);
    }
  }
}

int sx_power(GateTag t) {
  switch (t) {
    case GateTag::SX:
      return 1;
    case GateTag::X:
      return 2;
    case GateTag::SXdg:
      return 3;
    default:
      return -1;
  }
}

class Peephole {
 public:
  explicit Peephole(const Circuit& c) : gates_(c.gates().begin(), c.gates().end()) {}

  std::vector<Gate> run() {
    while (pass()) {
    }
    std::vector<Gate> out;
    for (auto& g : gates_) {
      if (g) out.push_back(*g);
    }
    return out;
  }

 private:
  std::size_t next_on(std::size_t i, std::size_t q) const {
    for (std::size_t j = i + 1; j < gates_.size(); ++j) {
      if (gates_[j] && gates_[j]->acts_on(q)) return j;
    }
    return npos;
  }

  bool single(std::size_t j, std::size_t q) const {
    return j != npos && gates_[j]->kind().arity() == 1 && gates_[j]->qubit(0) == q;
  }

  bool pass() {
    bool changed = false;
    for (std::size_t i = 0; i < gates_.size(); ++i) {
      if (!gates_[i]) continue;
      const Gate g = *gates_[i];
      if (g.kind().arity() == 2) {
        changed |= cancel_pair(i, g);
        continue;
      }
      const std::size_t q = g.qubit(0);
      if (g.tag() == GateTag::I ||
          (g.tag() == GateTag::RZ && g.kind().angle()->is_multiple_of_2pi())) {
        gates_[i].reset();
        changed = true;
      } else if (g.tag() == GateTag::RZ) {
        const std::size_t j = next_on(i, q);
        if (single(j, q) && gates_[j]->tag() == GateTag::RZ) {
          const Angle sum = *g.kind().angle() + *gates_[j]->kind().angle();
          gates_[i] = Gate(GateKind::rz(sum), q);
          gates_[j].reset();
          changed = true;
        }
      } else if (sx_power(g.tag()) > 0) {
        changed |= cancel_run(i, q);
      }
    }
    return changed;
  }

  bool cancel_pair(std::size_t i, const Gate& g) {
    if (g.tag() != GateTag::CX && g.tag() != GateTag::ECR) return false;
    const std::size_t ja = next_on(i, g.qubit(0));
    const std::size_t jb = next_on(i, g.qubit(1));
    if (ja == npos || ja != jb || !(*gates_[ja] == g)) return false;
    gates_[i].reset();
    gates_[ja].reset();
    return true;
  }

  bool cancel_run(std::size_t i, std::size_t q) {
    std::vector<std::size_t> run{i};
    int power = sx_power(gates_[i]->tag());
    std::size_t j = i;
    while (true) {
      j = next_on(j, q);
      if (!single(j, q) || sx_power(gates_[j]->tag()) < 0) return false;
      run.push_back(j);
      power += sx_power(gates_[j]->tag());
      if (power % 4 == 0) break;
    }
    for (auto k : run) gates_[k].reset();
    return true;
  }

  std::vector<std::optional<Gate>> gates_;
};

}  // namespace

std::string_view basis_name(NativeBasis b) {
  return b == NativeBasis::CX ? "cx" : "ecr";
}

std::optional<NativeBasis> basis_from_name(std::string_view name) {
  if (name == "cx") return NativeBasis::CX;
  if (name == "ecr") return NativeBasis::ECR;
  return std::nullopt;
}

bool is_native(GateTag tag, NativeBasis b) {
  switch (tag) {
    case GateTag::I:
    case GateTag::X:
    case GateTag::SX:
    case GateTag::RZ:
      return true;
    case GateTag::CX:
      return b == NativeBasis::CX;
    case GateTag::ECR:
      return b == NativeBasis::ECR;
    default:
      return false;
  }
}

const std::vector<RewriteRule>& rewrite_rules(NativeBasis b) {
  static const std::vector<RewriteRule> cx = build_rules(NativeBasis::CX);
  static const std::vector<RewriteRule> ecr = build_rules(NativeBasis::ECR);
  return b == NativeBasis::CX ? cx : ecr;
}

Circuit lower_ry(Angle theta) {
  return Circuit(1, {Gate(GateTag::SX, 0), Gate(GateKind::rz(theta), 0),
                     Gate(GateTag::SXdg, 0)});
}

std::string dump_rules(NativeBasis b) {
  std::ostringstream os;
  os << "# rewrite rules, basis " << basis_name(b) << "\n";
  auto body = [](const Circuit& c) {
    std::string s;
    for (const auto& g : c.gates()) {
      if (!s.empty()) s += "; ";
      s += tag_name(g.tag());
      if (g.kind().angle()) s += "(" + g.kind().angle()->to_string() + ")";
      for (std::size_t k = 0; k < g.kind().arity(); ++k) {
        s += (k ? ", q[" : " q[") + std::to_string(g.qubit(k)) + "]";
      }
    }
    return s;
  };
  for (const auto& r : rewrite_rules(b)) {
    os << tag_name(r.lhs.tag()) << (r.lhs.arity() == 2 ? " q[0], q[1]" : " q[0]")
       << " -> " << body(r.rhs) << "\n";
  }
  os << "ry(theta) q[0] -> " << body(lower_ry(Angle::pi_fraction(1, 4)))
     << "  (shown for theta = pi/4)\n";
  return os.str();
}

Circuit lower(const Circuit& c, NativeBasis b) {
  std::vector<Gate> out;
  for (const auto& g : c.gates()) expand(g, b, out, 0);
  return c.with_gates(std::move(out));
}

Circuit peephole(const Circuit& c) { return c.with_gates(Peephole(c).run()); }

CostReport cost_report(const Circuit& c, NativeBasis b) {
  return count_gates(peephole(lower(c, b)));
}

RouteResult route_naive(const Circuit& c, const CouplingMap& map,
                        const Placement& p, bool restore) {
  if (p.physical.size() < c.width()) {
    throw LayoutError("placement does not cover every circuit qubit");
  }
  validate_placement(p, map);
  std::vector<std::size_t> layout(p.physical.begin(),
                                  p.physical.begin() + static_cast<std::ptrdiff_t>(c.width()));
  std::vector<std::size_t> owner(map.num_qubits(), npos);
  for (std::size_t l = 0; l < layout.size(); ++l) owner[layout[l]] = l;

  std::vector<Gate> out;
  std::size_t swaps = 0;
  auto do_swap = [&](std::size_t x, std::size_t y) {
    out.emplace_back(GateTag::SWAP, x, y);
    ++swaps;
    std::swap(owner[x], owner[y]);
    if (owner[x] != npos) layout[owner[x]] = x;
    if (owner[y] != npos) layout[owner[y]] = y;
  };

  for (const auto& g : c.gates()) {
    if (g.kind().arity() == 1) {
      out.emplace_back(g.kind(), layout[g.qubit(0)]);
      continue;
    }
    std::vector<Edge> chain;
    if (!map.has_edge(layout[g.qubit(0)], layout[g.qubit(1)])) {
      const auto path = map.shortest_path(layout[g.qubit(0)], layout[g.qubit(1)]);
      if (path.empty()) throw LayoutError("coupling map is disconnected");
      for (std::size_t k = 0; k + 2 < path.size(); ++k) {
        do_swap(path[k], path[k + 1]);
        chain.emplace_back(path[k], path[k + 1]);
      }
    }
    out.emplace_back(g.kind(), layout[g.qubit(0)], layout[g.qubit(1)]);
    if (restore) {
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        do_swap(it->first, it->second);
      }
    }
  }
  return {Circuit(map.num_qubits(), std::move(out), {}, c.name()), layout, swaps};
}

}  // namespace qlayout
