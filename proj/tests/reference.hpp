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


// Reference implementations used only by tests. They deliberately avoid the
// library kernels: matrices are typed in here and the full operator is built
// entry by entry.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qlayout/circuit.hpp"

namespace qlayout::testing {

using Cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline Mat local_matrix(const GateKind& k) {
  const double r = 1.0 / std::sqrt(2.0);
  const Cd i(0, 1);
  auto diag = [](Cd a, Cd b) {
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
  };
  Mat m(2, 2);
  switch (k.tag()) {
    case GateTag::I: return diag(1, 1);
    case GateTag::X: m << 0, 1, 1, 0; return m;
    case GateTag::Y: m << 0, -i, i, 0; return m;
    case GateTag::Z: return diag(1, -1);
    case GateTag::H: m << r, r, r, -r; return m;
    case GateTag::SX: m << Cd(.5, .5), Cd(.5, -.5), Cd(.5, -.5), Cd(.5, .5); return m;
    case GateTag::SXdg: m << Cd(.5, -.5), Cd(.5, .5), Cd(.5, .5), Cd(.5, -.5); return m;
    case GateTag::S: return diag(1, i);
    case GateTag::Sdg: return diag(1, -i);
    case GateTag::T: return diag(1, std::exp(i * M_PI / 4.0));
    case GateTag::Tdg: return diag(1, std::exp(-i * M_PI / 4.0));
    case GateTag::RZ: {
      const double g = k.angle()->radians();
      return diag(std::exp(-i * g / 2.0), std::exp(i * g / 2.0));
    }
    case GateTag::RY: {
      const double g = k.angle()->radians();
      m << std::cos(g / 2), -std::sin(g / 2), std::sin(g / 2), std::cos(g / 2);
      return m;
    }
    default: break;
  }
  Mat u = Mat::Zero(4, 4);
  switch (k.tag()) {
    case GateTag::CX: u(0, 0) = u(1, 1) = u(2, 3) = u(3, 2) = 1; return u;
    case GateTag::CY: u(0, 0) = u(1, 1) = 1; u(2, 3) = -i; u(3, 2) = i; return u;
    case GateTag::CZ: u(0, 0) = u(1, 1) = u(2, 2) = 1; u(3, 3) = -1; return u;
    case GateTag::SWAP: u(0, 0) = u(1, 2) = u(2, 1) = u(3, 3) = 1; return u;
    case GateTag::ECR:
      // rows/cols indexed (control << 1) | target
      u(0, 2) = r; u(0, 3) = Cd(0, r);
      u(1, 2) = Cd(0, r); u(1, 3) = r;
      u(2, 0) = r; u(2, 1) = Cd(0, -r);
      u(3, 0) = Cd(0, -r); u(3, 1) = r;
      return u;
    default: break;
  }
  return u;
}

inline Mat embed(const Gate& g, std::size_t n) {
  const std::size_t d = std::size_t{1} << n;
  const Mat l = local_matrix(g.kind());
  auto qs = g.qubits();
  std::size_t mask = 0;
  for (auto q : qs) mask |= std::size_t{1} << q;
  auto local = [&](std::size_t x) {
    std::size_t v = 0;
    for (auto q : qs) v = (v << 1) | ((x >> q) & 1U);
    return v;
  };
  Mat full = Mat::Zero(d, d);
  for (std::size_t row = 0; row < d; ++row) {
    for (std::size_t col = 0; col < d; ++col) {
      if ((row & ~mask) != (col & ~mask)) continue;
      full(row, col) = l(local(row), local(col));
    }
  }
  return full;
}

inline Mat reference_unitary(const Circuit& c) {
  const std::size_t d = std::size_t{1} << c.width();
  Mat u = Mat::Identity(d, d);
  for (const auto& g : c.gates()) u = embed(g, c.width()) * u;
  return u;
}

inline double reference_fidelity(const Mat& a, const Mat& b) {
  return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

inline bool magnitudes_equal(const Mat& a, const Mat& b, double tol = 1e-9) {
  return (a.cwiseAbs() - b.cwiseAbs()).cwiseAbs().maxCoeff() <= tol;
}

/// Permutation matrix with column j = e_{perm[j]}.
inline Mat permutation(const std::vector<std::size_t>& perm) {
  Mat m = Mat::Zero(perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = 1;
  return m;
}

inline const std::vector<GateTag>& clifford_t_tags() {
  static const std::vector<GateTag> tags{
      GateTag::I,  GateTag::X,   GateTag::Y,  GateTag::Z,   GateTag::H,
      GateTag::SX, GateTag::SXdg, GateTag::S, GateTag::Sdg, GateTag::T,
      GateTag::Tdg, GateTag::CX, GateTag::CY, GateTag::CZ,  GateTag::SWAP};
  return tags;
}

/// Random Clifford+T circuit, optionally sprinkled with RZ/RY/ECR.
inline Circuit random_circuit(std::mt19937_64& rng, std::size_t max_width,
                              std::size_t max_gates, bool rotations = true) {
  std::uniform_int_distribution<std::size_t> wd(1, max_width);
  const std::size_t n = wd(rng);
  std::uniform_int_distribution<std::size_t> gd(0, max_gates);
  const std::size_t count = gd(rng);
  std::vector<GateTag> pool = clifford_t_tags();
  if (rotations) {
    pool.push_back(GateTag::RZ);
    pool.push_back(GateTag::RY);
    pool.push_back(GateTag::ECR);
  }
  std::uniform_int_distribution<std::size_t> td(0, pool.size() - 1);
  std::uniform_int_distribution<std::size_t> qd(0, n - 1);
  std::uniform_int_distribution<int> ad(-15, 16);
  std::vector<Gate> gates;
  while (gates.size() < count) {
    GateTag t = pool[td(rng)];
    if (arity(t) == 2 && n < 2) continue;
    GateKind k = is_rotation(t) ? GateKind(t, Angle::pi_fraction(ad(rng), 8))
                                : GateKind(t);
    if (arity(t) == 1) {
      gates.emplace_back(k, qd(rng));
    } else {
      std::size_t a = qd(rng);
      std::size_t b = qd(rng);
      if (a == b) continue;
      gates.emplace_back(k, a, b);
    }
  }
  return Circuit(n, std::move(gates));
}

}  // namespace qlayout::testing
