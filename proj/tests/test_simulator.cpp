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


#include <random>

#include "doctest.h"
#include "qlayout/gate_library.hpp"
#include "qlayout/simulator.hpp"
#include "reference.hpp"

using namespace qlayout;
using testing::Mat;

namespace {

const double kPi = std::acos(-1.0);

Mat toffoli_matrix() { return testing::permutation({0, 1, 2, 7, 4, 5, 6, 3}); }

}  // namespace

TEST_CASE("gate matrices match the reference table") {
  for (int t = 0; t <= static_cast<int>(GateTag::ECR); ++t) {
    const auto tag = static_cast<GateTag>(t);
    const GateKind k = is_rotation(tag)
                           ? GateKind(tag, Angle::pi_fraction(3, 8))
                           : GateKind(tag);
    CAPTURE(tag_name(tag));
    const Mat a = gate_matrix<double>(k);
    const Mat b = testing::local_matrix(k);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((a.adjoint() * a - Mat::Identity(a.rows(), a.cols()))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("rz(pi) is -iZ") {
  const Mat rz = gate_matrix<double>(GateKind::rz(Angle::pi_fraction(1)));
  Mat expect = Mat::Zero(2, 2);
  expect(0, 0) = {0, -1};
  expect(1, 1) = {0, 1};
  CHECK((rz - expect).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("single precision kernels agree") {
  const auto f = gate_matrix<float>(GateTag::H);
  CHECK(std::abs(f(1, 1).real() + 0.70710678f) < 1e-6f);
}

TEST_CASE("unitary_of examples") {
  const Unitary x = unitary_of(Circuit(1, {Gate(GateTag::X, 0)}));
  CHECK(std::abs(x(0, 1) - 1.0) < 1e-15);
  CHECK(std::abs(x(0, 0)) < 1e-15);
  // S, X, Sdg applied in turn: Sdg X S = -Y, i.e. Y up to global phase.
  const Unitary sxs = unitary_of(Circuit(
      1, {Gate(GateTag::S, 0), Gate(GateTag::X, 0), Gate(GateTag::Sdg, 0)}));
  CHECK(equivalence(sxs, gate_matrix<double>(GateTag::Y)) ==
        EquivalenceLevel::L1);
  const Unitary cc = unitary_of(
      Circuit(2, {Gate(GateTag::CX, 0, 1), Gate(GateTag::CX, 0, 1)}));
  CHECK((cc - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK_THROWS_AS(unitary_of(Circuit(13, {})), SimulationError);
}

TEST_CASE("apply examples") {
  const Circuit empty(2, {});
  const auto s = Statevector::basis(2, 3);
  CHECK(apply(empty, s).amps.isApprox(s.amps));
  CHECK_THROWS_AS(apply(empty, Statevector::basis(3, 0)), SimulationError);

  const Circuit and3 = build_boolean(BooleanGateKind::AND);
  // |t c2 c1> = |0 1 1>
  CHECK(probability_one(apply(and3, Statevector::basis(3, 0b011)), 2) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(probability_one(apply(and3, Statevector::basis(3, 0b001)), 2) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("property: kernels agree with the reference operator") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 150; ++i) {
    const Circuit c = testing::random_circuit(rng, 4, 30);
    const Unitary u = unitary_of(c);
    const Mat r = testing::reference_unitary(c);
    CHECK((u - r).cwiseAbs().maxCoeff() < 1e-12);
    const auto d = u.rows();
    CHECK((u.adjoint() * u - Mat::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-12);

    std::normal_distribution<double> nd;
    Statevector v{c.width(), CVector<double>(d)};
    for (Eigen::Index k = 0; k < d; ++k) v.amps(k) = {nd(rng), nd(rng)};
    v.amps.normalize();
    const auto out = apply(c, v);
    CHECK(std::abs(out.norm() - 1.0) < 1e-10);
    CHECK((out.amps - u * v.amps).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("Clifford conjugation table") {
  CHECK(pauli_conjugate(GateTag::H, GateTag::Z) == SignedPauli{GateTag::X, 1});
  CHECK(pauli_conjugate(GateTag::S, GateTag::X) == SignedPauli{GateTag::Y, 1});
  CHECK(pauli_conjugate(GateTag::H, GateTag::X) == SignedPauli{GateTag::Z, 1});
  CHECK(pauli_conjugate(GateTag::Z, GateTag::X) == SignedPauli{GateTag::X, -1});
  CHECK(pauli_conjugate(GateTag::Z, GateTag::Y) == SignedPauli{GateTag::Y, -1});
  CHECK(pauli_conjugate(GateTag::X, GateTag::Z) == SignedPauli{GateTag::Z, -1});
  CHECK(pauli_conjugate(GateTag::I, GateTag::Y) == SignedPauli{GateTag::Y, 1});
  CHECK_THROWS_AS(pauli_conjugate(GateTag::T, GateTag::X), SimulationError);
  CHECK_THROWS_AS(pauli_conjugate(GateTag::CX, GateTag::X), SimulationError);
}

TEST_CASE("equivalence levels") {
  const Circuit and3 = build_boolean(BooleanGateKind::AND);
  CHECK(equivalence(and3, and3) == EquivalenceLevel::L1);
  const Unitary u = unitary_of(and3);
  const Mat tof = toffoli_matrix();
  CHECK(equivalence(u, tof) == EquivalenceLevel::L2);
  CHECK(equivalence(tof, u) == EquivalenceLevel::L2);
  CHECK(testing::magnitudes_equal(testing::reference_unitary(and3), tof));
  CHECK(testing::reference_fidelity(testing::reference_unitary(and3), tof) <
        1 - 1e-9);

  // H vs X: magnitudes differ but |+> vs |1> distributions also differ.
  CHECK(equivalence(Circuit(1, {Gate(GateTag::H, 0)}),
                    Circuit(1, {Gate(GateTag::X, 0)})) == EquivalenceLevel::None);
  // H vs H.Z: same magnitudes, not same up to global phase.
  CHECK(equivalence(Circuit(1, {Gate(GateTag::H, 0)}),
                    Circuit(1, {Gate(GateTag::H, 0), Gate(GateTag::Z, 0)})) ==
        EquivalenceLevel::L2);
  CHECK_THROWS_AS(equivalence(Circuit(1, {}), Circuit(2, {})), SimulationError);

  CHECK(satisfies(EquivalenceLevel::L1, EquivalenceLevel::L2));
  CHECK_FALSE(satisfies(EquivalenceLevel::L2, EquivalenceLevel::L1));
  CHECK(level_from_name("L3") == EquivalenceLevel::L3);
}

TEST_CASE("property: equivalence is symmetric and reflexive") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 60; ++i) {
    const Circuit a = testing::random_circuit(rng, 3, 12);
    Circuit b = testing::random_circuit(rng, 3, 12);
    b = Circuit(a.width(), i % 3 == 0 ? a.gates() : std::vector<Gate>{});
    if (i % 3 == 1) {
      auto g = a.gates();
      g.emplace_back(GateTag::Z, 0);
      b = a.with_gates(g);
    }
    CHECK(equivalence(a, a) == EquivalenceLevel::L1);
    CHECK(equivalence(a, b) == equivalence(b, a));
  }
}

TEST_CASE("ancilla-restricted classical check") {
  // CX into a fresh ancilla looks like identity on the other qubits.
  const Circuit copy(2, {Gate(GateTag::CX, 0, 1)});
  const Circuit id(2, {});
  CHECK(equivalence_ancilla_zero(copy, id, {1}) == EquivalenceLevel::L3);
  CHECK(equivalence_ancilla_zero(copy, id, {0}) == EquivalenceLevel::L3);
  CHECK(equivalence_ancilla_zero(Circuit(2, {Gate(GateTag::X, 0)}), id, {1}) ==
        EquivalenceLevel::None);
  const Circuit w = with_ancillas(Circuit(1, {Gate(GateTag::X, 0)}), 2);
  CHECK(w.width() == 3);
  CHECK(w.roles()[2] == QubitRole::Ancilla);
}

TEST_CASE("truth tables") {
  const Circuit and3 = build_boolean(BooleanGateKind::AND);
  CHECK(truth_table(and3, 2, {0, 1}).to_string() == "0001");
  CHECK(truth_table(build_boolean(BooleanGateKind::NOR), 2, {0, 1}).to_string() ==
        "1000");
  // a = control1: 00->1, a=1,b=0 -> 0, a=0,b=1 -> 1, 11 -> 1
  CHECK(truth_table(build_boolean(BooleanGateKind::IMPLICATION), 2, {0, 1})
            .to_string() == "1011");
  CHECK_THROWS_AS(truth_table(Circuit(2, {Gate(GateTag::H, 1)}), 1, {0}),
                  SimulationError);
  CHECK(TruthTable::parse("1000").bits ==
        std::vector<bool>{true, false, false, false});
  CHECK_THROWS(TruthTable::parse("100"));
  CHECK_THROWS(TruthTable::parse("10a0"));
}

TEST_CASE("phase trace of the AND core") {
  const CoreSpec and_spec = boolean_spec(BooleanGateKind::AND);
  auto labels = [&](unsigned ctl) {
    std::vector<std::string> out;
    for (const auto& s : phase_trace(and_spec, ctl)) out.push_back(s.label());
    return out;
  };
  using V = std::vector<std::string>;
  // rows |c2 c1>
  CHECK(labels(0b00) == V{"|+>", "7pi/4", "-", "|+>", "-", "7pi/4", "-", "|+>", "|0>"});
  CHECK(labels(0b01) == V{"|+>", "7pi/4", "-", "|+>", "|+>", "7pi/4", "-", "|+>", "|0>"});
  CHECK(labels(0b10) == V{"|+>", "7pi/4", "pi/4", "|+i>", "-", "pi/4", "7pi/4", "|+>", "|0>"});
  CHECK(labels(0b11) == V{"|+>", "7pi/4", "pi/4", "|+i>", "|-i>", "5pi/4", "3pi/4", "|->", "|1>"});
  CHECK_THROWS_AS(phase_trace(and_spec, 4), SimulationError);
  CoreSpec sx = and_spec;
  sx.sp1 = GateTag::SX;
  sx.sp2 = GateTag::SX;
  CHECK_NOTHROW(phase_trace(sx, 0));
}

TEST_CASE("property: phase trace agrees with octant arithmetic") {
  // T adds pi/4, S adds pi/2, an active CX reflects the phase.
  const std::array<GateTag, 4> th{GateTag::S, GateTag::Sdg, GateTag::T,
                                  GateTag::Tdg};
  auto step = [](GateTag t) {
    switch (t) {
      case GateTag::S: return 2;
      case GateTag::Sdg: return -2;
      case GateTag::T: return 1;
      default: return -1;
    }
  };
  for (int mask = 0; mask < 256; ++mask) {
    CoreSpec spec;
    for (int k = 0; k < 4; ++k) spec.theta[k] = th[(mask >> (2 * k)) & 3];
    for (unsigned ctl = 0; ctl < 4; ++ctl) {
      const bool c1 = ctl & 1U;
      const bool c2 = ctl & 2U;
      int phi = 0;
      std::vector<int> expect;
      expect.push_back(0);
      auto rot = [&](int k) { phi = ((phi + step(spec.theta[k])) % 8 + 8) % 8; expect.push_back(phi); };
      auto flip = [&](bool on) { if (on) phi = (8 - phi) % 8; expect.push_back(on ? phi : -1); };
      rot(0); flip(c2); rot(1); flip(c1); rot(2); flip(c2); rot(3);
      std::vector<TraceStep> trace;
      if (phi == 0 || phi == 4) {
        trace = phase_trace(spec, ctl);
        REQUIRE(trace.size() == 9);
        for (std::size_t k = 0; k < 8; ++k) {
          if (expect[k] < 0) {
            CHECK(trace[k].kind == TraceKind::Unchanged);
          } else {
            CHECK(trace[k].eighths == expect[k]);
          }
        }
        CHECK(trace[8].bit == (phi == 4 ? 1 : 0));
      } else {
        CHECK_THROWS_AS(phase_trace(spec, ctl), SimulationError);
      }
    }
  }
}

TEST_CASE("q-sphere points") {
  const auto zero = qsphere(Statevector::basis(3, 0));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].label == "|000>");
  CHECK(zero[0].magnitude == doctest::Approx(1.0));
  CHECK(zero[0].phase == doctest::Approx(0.0));

  Statevector pp{2, CVector<double>::Constant(4, 0.5)};
  const auto pts = qsphere(pp);
  CHECK(pts.size() == 4);
  double total = 0;
  for (const auto& p : pts) {
    CHECK(p.phase == doctest::Approx(0.0));
    total += p.magnitude * p.magnitude;
  }
  CHECK(total == doctest::Approx(1.0));

  // AND on |0> (x) |++>, computed independently with the reference operator.
  const Circuit and3 = build_boolean(BooleanGateKind::AND);
  Statevector in{3, CVector<double>::Zero(8)};
  for (int k = 0; k < 4; ++k) in.amps(k) = 0.5;
  const Eigen::VectorXcd ref = testing::reference_unitary(and3) * in.amps;
  const auto q = qsphere(apply(and3, in));
  REQUIRE(q.size() == 4);
  for (const auto& p : q) {
    const auto idx = std::stoi(p.label.substr(1, 3), nullptr, 2);
    CHECK(p.magnitude == doctest::Approx(std::abs(ref(idx))));
    double rel = std::arg(ref(idx) / ref(0));
    if (rel < -1e-12) rel += 2 * kPi;
    CHECK(p.phase == doctest::Approx(rel));
  }
  // Frozen: |000>, |001>, |010> at phase 0 and |111> at 3pi/2.
  CHECK(q[0].label == "|000>");
  CHECK(q[1].label == "|001>");
  CHECK(q[2].label == "|010>");
  CHECK(q[3].label == "|111>");
  CHECK(q[1].phase == doctest::Approx(0.0));
  CHECK(q[2].phase == doctest::Approx(0.0));
  CHECK(q[3].phase == doctest::Approx(3 * kPi / 2));
}
