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
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qlayout/circuit.hpp"
#include "qlayout/gate_library.hpp"

namespace qlayout {

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Scalar>
using CMatrix =
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using CVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using Unitary = CMatrix<double>;

inline constexpr std::size_t kMaxUnitaryQubits = 12;
inline constexpr double kEquivTol = 1e-9;
inline constexpr double kDetTol = 1e-10;

/// 2x2 or 4x4 matrix. Two-qubit gates use local index
/// (bit(qubits[0]) << 1) | bit(qubits[1]), i.e. kron(first, second).
template <typename Scalar>
CMatrix<Scalar> gate_matrix(const GateKind& kind) {
  using C = std::complex<Scalar>;
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  const C i{0, 1};
  const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
  auto phase = [&](Scalar phi) { return std::polar(Scalar(1), phi); };
  auto m2 = [](C a, C b, C c, C d) {
    CMatrix<Scalar> m(2, 2);
    m << a, b, c, d;
    return m;
  };
  auto controlled = [&](const CMatrix<Scalar>& u) {
    CMatrix<Scalar> m = CMatrix<Scalar>::Identity(4, 4);
    m.template bottomRightCorner<2, 2>() = u;
    return m;
  };
  const CMatrix<Scalar> x = m2(0, 1, 1, 0);
  const CMatrix<Scalar> y = m2(0, -i, i, 0);
  const CMatrix<Scalar> z = m2(1, 0, 0, -1);
  switch (kind.tag()) {
    case GateTag::I:
      return CMatrix<Scalar>::Identity(2, 2);
    case GateTag::X:
      return x;
    case GateTag::Y:
      return y;
    case GateTag::Z:
      return z;
    case GateTag::H:
      return m2(r, r, r, -r);
    case GateTag::SX:
      return m2(C(1, 1) / Scalar(2), C(1, -1) / Scalar(2),
                C(1, -1) / Scalar(2), C(1, 1) / Scalar(2));
    case GateTag::SXdg:
      return m2(C(1, -1) / Scalar(2), C(1, 1) / Scalar(2),
                C(1, 1) / Scalar(2), C(1, -1) / Scalar(2));
    case GateTag::S:
      return m2(1, 0, 0, i);
    case GateTag::Sdg:
      return m2(1, 0, 0, -i);
    case GateTag::T:
      return m2(1, 0, 0, phase(pi / 4));
    case GateTag::Tdg:
      return m2(1, 0, 0, phase(-pi / 4));
    case GateTag::RZ: {
      const auto g = static_cast<Scalar>(kind.angle()->radians());
      return m2(phase(-g / 2), 0, 0, phase(g / 2));
    }
    case GateTag::RY: {
      const auto g = static_cast<Scalar>(kind.angle()->radians());
      const Scalar c = std::cos(g / 2);
      const Scalar s = std::sin(g / 2);
      return m2(c, -s, s, c);
    }
    case GateTag::CX:
      return controlled(x);
    case GateTag::CY:
      return controlled(y);
    case GateTag::CZ:
      return controlled(z);
    case GateTag::SWAP: {
      CMatrix<Scalar> m = CMatrix<Scalar>::Zero(4, 4);
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
      return m;
    }
    case GateTag::ECR: {
      // (X (x) I - Y (x) X) / sqrt2, first factor on the control
      const CMatrix<Scalar> id = CMatrix<Scalar>::Identity(2, 2);
      CMatrix<Scalar> m = CMatrix<Scalar>::Zero(4, 4);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c)
            for (int d = 0; d < 2; ++d)
              m(2 * a + c, 2 * b + d) = r * (x(a, b) * id(c, d) - y(a, b) * x(c, d));
      return m;
    }
  }
  throw SimulationError("no matrix for gate");
}

namespace detail {

// Acts on the rows of `m`; a statevector is the one-column case.
template <typename Derived, typename Scalar>
void apply_1q(Eigen::MatrixBase<Derived>& m, const CMatrix<Scalar>& g,
              std::size_t q) {
  const Eigen::Index bit = Eigen::Index{1} << q;
  for (Eigen::Index k = 0; k < m.rows(); ++k) {
    if (k & bit) continue;
    const auto r0 = m.row(k).eval();
    const auto r1 = m.row(k | bit).eval();
    m.row(k) = g(0, 0) * r0 + g(0, 1) * r1;
    m.row(k | bit) = g(1, 0) * r0 + g(1, 1) * r1;
  }
}

template <typename Derived, typename Scalar>
void apply_2q(Eigen::MatrixBase<Derived>& m, const CMatrix<Scalar>& g,
              std::size_t hi, std::size_t lo) {
  const Eigen::Index bh = Eigen::Index{1} << hi;
  const Eigen::Index bl = Eigen::Index{1} << lo;
  using Row = Eigen::Matrix<std::complex<Scalar>, 1, Eigen::Dynamic>;
  for (Eigen::Index k = 0; k < m.rows(); ++k) {
    if ((k & bh) || (k & bl)) continue;
    const std::array<Eigen::Index, 4> idx{k, k | bl, k | bh, k | bh | bl};
    std::array<Row, 4> in;
    for (int a = 0; a < 4; ++a) in[a] = m.row(idx[a]);
    for (int a = 0; a < 4; ++a) {
      Row out = Row::Zero(m.cols());
      for (int b = 0; b < 4; ++b) {
        if (g(a, b) != std::complex<Scalar>(0)) out += g(a, b) * in[b];
      }
      m.row(idx[a]) = out;
    }
  }
}

}  // namespace detail

/// Applies every gate of `c`, left to right, to the rows of `m`.
template <typename Derived>
void apply_rows(const Circuit& c, Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar::value_type;
  if (m.rows() != (Eigen::Index{1} << c.width())) {
    throw SimulationError("width mismatch");
  }
  for (const auto& g : c.gates()) {
    const CMatrix<Scalar> u = gate_matrix<Scalar>(g.kind());
    if (g.kind().arity() == 1) {
      detail::apply_1q(m, u, g.qubit(0));
    } else {
      detail::apply_2q(m, u, g.qubit(0), g.qubit(1));
    }
  }
}

/// Amplitudes over |q_{n-1} ... q_0>, q_0 least significant.
struct Statevector {
  std::size_t n = 0;
  CVector<double> amps;

  static Statevector basis(std::size_t n, std::size_t index);
  double norm() const { return amps.norm(); }
};

Statevector apply(const Circuit& circuit, const Statevector& input);
Unitary unitary_of(const Circuit& circuit);

struct SignedPauli {
  GateTag pauli;
  int sign;
  bool operator==(const SignedPauli&) const = default;
};

/// C . P . C^dagger as a signed Pauli; throws if it is not one.
SignedPauli pauli_conjugate(const GateKind& c, GateTag p);

enum class EquivalenceLevel { L1, L2, L3, None };

std::string_view level_name(EquivalenceLevel level);
std::optional<EquivalenceLevel> level_from_name(std::string_view name);
/// True when `achieved` is at least as strong as `required`.
bool satisfies(EquivalenceLevel achieved, EquivalenceLevel required);

double fidelity(const Unitary& a, const Unitary& b);
EquivalenceLevel equivalence(const Unitary& a, const Unitary& b);
EquivalenceLevel equivalence(const Circuit& a, const Circuit& b);

/// Classical check restricted to inputs whose `ancillas` are |0>; output
/// distributions are compared after tracing out the ancillas. Returns L3 or
/// None.
EquivalenceLevel equivalence_ancilla_zero(
    const Circuit& a, const Circuit& b,
    const std::vector<std::size_t>& ancillas);

/// `c` padded with `extra` ancilla qubits above its current width.
Circuit with_ancillas(const Circuit& c, std::size_t extra);

/// Character i is the output bit for control assignment i, where bit j of
/// i is the value of controls[j].
struct TruthTable {
  std::vector<bool> bits;

  std::string to_string() const;
  static TruthTable parse(std::string_view s);
  bool operator==(const TruthTable&) const = default;
};

TruthTable truth_table(const Circuit& circuit, std::size_t target,
                       const std::vector<std::size_t>& controls,
                       const std::vector<std::size_t>& ancillas = {});

/// Probability that `qubit` reads 1.
double probability_one(const Statevector& s, std::size_t qubit);

enum class TraceKind { Equatorial, Unchanged, Basis };

struct TraceStep {
  std::string stage;
  TraceKind kind;
  int eighths = 0;  // phase in units of pi/4 for Equatorial
  int bit = 0;      // for Basis

  std::string label() const;
  bool operator==(const TraceStep&) const = default;
};

/// Target-wire state after each of the nine core stages, with c1 = bit 0 and
/// c2 = bit 1 of `controls` and the target starting in |0>.
std::vector<TraceStep> phase_trace(const CoreSpec& spec, unsigned controls);

struct QSpherePoint {
  std::string label;
  double magnitude;
  double phase;
};

std::vector<QSpherePoint> qsphere(const Statevector& state,
                                  double cutoff = 1e-12);

}  // namespace qlayout
