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


#include "qlayout/simulator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace qlayout {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t dim_of(std::size_t n) { return std::size_t{1} << n; }

}  // namespace

Statevector Statevector::basis(std::size_t n, std::size_t index) {
  if (index >= dim_of(n)) throw SimulationError("basis index out of range");
  Statevector s{n, CVector<double>::Zero(static_cast<Eigen::Index>(dim_of(n)))};
  s.amps(static_cast<Eigen::Index>(index)) = 1.0;
  return s;
}

Statevector apply(const Circuit& circuit, const Statevector& input) {
  if (input.n != circuit.width()) throw SimulationError("width mismatch");
  Statevector out = input;
  apply_rows(circuit, out.amps);
  return out;
}

Unitary unitary_of(const Circuit& circuit) {
  if (circuit.width() > kMaxUnitaryQubits) {
    throw SimulationError("circuit too wide for a dense unitary");
  }
  const auto d = static_cast<Eigen::Index>(dim_of(circuit.width()));
  Unitary u = Unitary::Identity(d, d);
  apply_rows(circuit, u);
  return u;
}

SignedPauli pauli_conjugate(const GateKind& c, GateTag p) {
  if (c.arity() != 1) throw SimulationError("expected a single-qubit gate");
  if (p != GateTag::X && p != GateTag::Y && p != GateTag::Z) {
    throw SimulationError("expected X, Y or Z");
  }
  const Unitary cm = gate_matrix<double>(c);
  const Unitary r = cm * gate_matrix<double>(p) * cm.adjoint();
  for (GateTag q : {GateTag::X, GateTag::Y, GateTag::Z}) {
    const Unitary pm = gate_matrix<double>(q);
    for (int sign : {1, -1}) {
      if ((r - double(sign) * pm).cwiseAbs().maxCoeff() < kEquivTol) {
        return {q, sign};
      }
    }
  }
  throw SimulationError("conjugate is not a signed Pauli; gate is not Clifford");
}

std::string_view level_name(EquivalenceLevel level) {
  switch (level) {
    case EquivalenceLevel::L1:
      return "L1";
    case EquivalenceLevel::L2:
      return "L2";
    case EquivalenceLevel::L3:
      return "L3";
    case EquivalenceLevel::None:
      return "NONE";
  }
  return "NONE";
}

std::optional<EquivalenceLevel> level_from_name(std::string_view name) {
  for (auto l : {EquivalenceLevel::L1, EquivalenceLevel::L2,
                 EquivalenceLevel::L3, EquivalenceLevel::None}) {
    if (level_name(l) == name) return l;
  }
  return std::nullopt;
}

bool satisfies(EquivalenceLevel achieved, EquivalenceLevel required) {
  return static_cast<int>(achieved) <= static_cast<int>(required);
}

double fidelity(const Unitary& a, const Unitary& b) {
  return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

EquivalenceLevel equivalence(const Unitary& a, const Unitary& b) {
  if (a.rows() != b.rows()) throw SimulationError("width mismatch");
  if (fidelity(a, b) >= 1.0 - kEquivTol) return EquivalenceLevel::L1;
  const Eigen::MatrixXd ma = a.cwiseAbs();
  const Eigen::MatrixXd mb = b.cwiseAbs();
  if ((ma - mb).cwiseAbs().maxCoeff() <= kEquivTol) return EquivalenceLevel::L2;
  // Column j of U is the output for basis input j.
  const Eigen::MatrixXd pa = ma.cwiseAbs2();
  const Eigen::MatrixXd pb = mb.cwiseAbs2();
  if ((pa - pb).cwiseAbs().maxCoeff() <= kEquivTol) return EquivalenceLevel::L3;
  return EquivalenceLevel::None;
}

EquivalenceLevel equivalence(const Circuit& a, const Circuit& b) {
  if (a.width() != b.width()) throw SimulationError("width mismatch");
  return equivalence(unitary_of(a), unitary_of(b));
}

EquivalenceLevel equivalence_ancilla_zero(
    const Circuit& a, const Circuit& b,
    const std::vector<std::size_t>& ancillas) {
  if (a.width() != b.width()) throw SimulationError("width mismatch");
  const std::size_t n = a.width();
  std::size_t mask = 0;
  for (auto q : ancillas) {
    if (q >= n) throw SimulationError("ancilla out of range");
    mask |= std::size_t{1} << q;
  }
  for (std::size_t in = 0; in < dim_of(n); ++in) {
    if (in & mask) continue;
    const auto sa = apply(a, Statevector::basis(n, in));
    const auto sb = apply(b, Statevector::basis(n, in));
    std::vector<double> da(dim_of(n), 0.0);
    std::vector<double> db(dim_of(n), 0.0);
    for (std::size_t k = 0; k < dim_of(n); ++k) {
      const auto e = static_cast<Eigen::Index>(k);
      da[k & ~mask] += std::norm(sa.amps(e));
      db[k & ~mask] += std::norm(sb.amps(e));
    }
    for (std::size_t k = 0; k < dim_of(n); ++k) {
      if (std::abs(da[k] - db[k]) > kEquivTol) return EquivalenceLevel::None;
    }
  }
  return EquivalenceLevel::L3;
}

Circuit with_ancillas(const Circuit& c, std::size_t extra) {
  std::vector<QubitRole> roles = c.roles();
  roles.resize(c.width() + extra, QubitRole::Ancilla);
  return Circuit(c.width() + extra, c.gates(), roles, c.name());
}

std::string TruthTable::to_string() const {
  std::string s;
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

TruthTable TruthTable::parse(std::string_view s) {
  if (s.empty() || (s.size() & (s.size() - 1)) != 0) {
    throw std::invalid_argument("truth table length must be a power of two");
  }
  TruthTable t;
  for (char ch : s) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("truth table must contain only 0 and 1");
    }
    t.bits.push_back(ch == '1');
  }
  return t;
}

double probability_one(const Statevector& s, std::size_t qubit) {
  double p = 0.0;
  const std::size_t bit = std::size_t{1} << qubit;
  for (std::size_t k = 0; k < dim_of(s.n); ++k) {
    if (k & bit) p += std::norm(s.amps(static_cast<Eigen::Index>(k)));
  }
  return p;
}

TruthTable truth_table(const Circuit& circuit, std::size_t target,
                       const std::vector<std::size_t>& controls,
                       const std::vector<std::size_t>& ancillas) {
  const std::size_t n = circuit.width();
  auto check = [n](std::size_t q) {
    if (q >= n) throw SimulationError("qubit out of range");
  };
  check(target);
  for (auto q : controls) check(q);
  for (auto q : ancillas) check(q);
  TruthTable t;
  for (std::size_t a = 0; a < dim_of(controls.size()); ++a) {
    std::size_t in = 0;
    for (std::size_t j = 0; j < controls.size(); ++j) {
      if ((a >> j) & 1U) in |= std::size_t{1} << controls[j];
    }
    const double p1 = probability_one(apply(circuit, Statevector::basis(n, in)),
                                      target);
    if (p1 > kDetTol && p1 < 1.0 - kDetTol) {
      throw SimulationError("target outcome is not deterministic");
    }
    t.bits.push_back(p1 >= 0.5);
  }
  return t;
}

std::string TraceStep::label() const {
  switch (kind) {
    case TraceKind::Unchanged:
      return "-";
    case TraceKind::Basis:
      return bit ? "|1>" : "|0>";
    case TraceKind::Equatorial:
      break;
  }
  switch (eighths) {
    case 0:
      return "|+>";
    case 2:
      return "|+i>";
    case 4:
      return "|->";
    case 6:
      return "|-i>";
    case 1:
      return "pi/4";
    default:
      return std::to_string(eighths) + "pi/4";
  }
}

std::vector<TraceStep> phase_trace(const CoreSpec& spec, unsigned controls) {
  if (controls > 3) throw SimulationError("controls must be a 2-bit value");
  const auto stages = core_stages(spec, 0, 1, 2);
  Statevector s = Statevector::basis(3, controls);
  const auto i0 = static_cast<Eigen::Index>(controls);
  const auto i1 = static_cast<Eigen::Index>(controls | 4U);
  std::vector<TraceStep> out;
  for (std::size_t k = 0; k < stages.size(); ++k) {
    const auto& st = stages[k];
    s = apply(Circuit(3, st.gates), s);
    TraceStep step{st.label, TraceKind::Equatorial};
    if (st.control && ((controls >> *st.control) & 1U) == 0) {
      step.kind = TraceKind::Unchanged;
      out.push_back(step);
      continue;
    }
    const std::complex<double> a0 = s.amps(i0);
    const std::complex<double> a1 = s.amps(i1);
    if (k + 1 == stages.size()) {
      if (std::abs(std::abs(a0) - 1.0) < kEquivTol) {
        step.kind = TraceKind::Basis;
        step.bit = 0;
      } else if (std::abs(std::abs(a1) - 1.0) < kEquivTol) {
        step.kind = TraceKind::Basis;
        step.bit = 1;
      } else {
        throw SimulationError("target does not end in a basis state");
      }
      out.push_back(step);
      continue;
    }
    if (std::abs(std::abs(a0) - std::numbers::sqrt2 / 2) > kEquivTol ||
        std::abs(std::abs(a1) - std::numbers::sqrt2 / 2) > kEquivTol) {
      throw SimulationError("target left the equator at stage " + st.label);
    }
    const double phi = std::arg(a1 / a0) / (kPi / 4);
    const double r = std::round(phi);
    if (std::abs(phi - r) > 1e-6) {
      throw SimulationError("phase is not a multiple of pi/4 at stage " +
                            st.label);
    }
    step.eighths = ((static_cast<int>(r) % 8) + 8) % 8;
    out.push_back(step);
  }
  return out;
}

std::vector<QSpherePoint> qsphere(const Statevector& state, double cutoff) {
  std::vector<QSpherePoint> pts;
  std::optional<double> ref;
  for (std::size_t k = 0; k < dim_of(state.n); ++k) {
    const auto a = state.amps(static_cast<Eigen::Index>(k));
    if (std::abs(a) <= cutoff) continue;
    if (!ref) ref = std::arg(a);
    double ph = std::fmod(std::arg(a) - *ref, 2 * kPi);
    if (ph < 0) ph += 2 * kPi;
    if (ph > 2 * kPi - 1e-12) ph = 0;
    std::string label = "|";
    for (std::size_t q = state.n; q-- > 0;) label.push_back((k >> q) & 1U ? '1' : '0');
    label += ">";
    pts.push_back({std::move(label), std::abs(a), ph});
  }
  return pts;
}

}  // namespace qlayout
