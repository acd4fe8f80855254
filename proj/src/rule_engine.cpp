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


#include "qlayout/rule_engine.hpp"

#include <algorithm>

namespace qlayout {

std::string_view segment_name(Segment s) {
  switch (s) {
    case Segment::Semicircles:
      return "semicircles";
    case Segment::Quadrants:
      return "quadrants";
    case Segment::Octants:
      return "octants";
  }
  return "";
}

std::vector<GateSetStage> apply_rules() {
  using enum GateTag;
  const std::vector<Segment> seg0{Segment::Semicircles, Segment::Quadrants,
                                  Segment::Octants};
  std::vector<GateSetStage> stages;
  // Rules 1 and 2: every Clifford+T gate, every segment.
  stages.push_back({0, {I, X, Y, Z, H, SX, SXdg, S, Sdg, T, Tdg, CX, CY, CZ, SWAP}, seg0});
  // Rule 3: the target controls nothing.
  stages.push_back({1, {I, X, Y, Z, H, SX, SXdg, S, Sdg, T, Tdg}, seg0});
  // Rule 4: Z-axis rotations only.
  stages.push_back({2, {Z, S, Sdg, T, Tdg}, seg0});
  // Rule 5: no semicircles.
  stages.push_back({3, {S, Sdg, T, Tdg}, {Segment::Quadrants, Segment::Octants}});
  // Rule 6: octants.
  stages.push_back({4, {T, Tdg}, {Segment::Octants}});
  return stages;
}

std::uint64_t count_space(std::uint64_t sp, std::uint64_t ax,
                          std::uint64_t theta) {
  if (sp == 0 || ax == 0 || theta == 0) {
    throw SearchError("set sizes must be at least 1");
  }
  return sp * sp * ax * ax * theta * theta * theta * theta;
}

std::uint64_t SearchQuery::space_size() const {
  const std::uint64_t th = theta.size();
  const std::uint64_t t = symmetric ? th * th : th * th * th * th;
  return sp1.size() * sp2.size() * ax1.size() * ax2.size() * t;
}

Unitary flip_oracle(const TruthTable& f) {
  if (f.bits.size() != 4) throw SearchError("target needs 4 entries");
  Unitary u = Unitary::Zero(8, 8);
  for (Eigen::Index x = 0; x < 8; ++x) {
    const bool flip = f.bits[static_cast<std::size_t>(x & 3)];
    u(flip ? x ^ 4 : x, x) = 1.0;
  }
  return u;
}

namespace {

std::optional<TruthTable> realized(const Unitary& u) {
  TruthTable t;
  for (Eigen::Index a = 0; a < 4; ++a) {
    // column a is the output for |t=0, c2 c1 = a>
    double one = 0.0;
    for (Eigen::Index r = 4; r < 8; ++r) one += std::norm(u(r, a));
    if (one > kDetTol && one < 1.0 - kDetTol) return std::nullopt;
    t.bits.push_back(one >= 0.5);
  }
  return t;
}

}  // namespace

SearchResult search(const SearchQuery& q) {
  if (q.target.bits.size() != 4) throw SearchError("target needs 4 entries");
  if (q.sp1.empty() || q.sp2.empty() || q.ax1.empty() || q.ax2.empty() ||
      q.theta.empty()) {
    throw SearchError("gate sets must not be empty");
  }
  for (auto t : q.sp1)
    if (!is_superposition_tag(t)) throw SearchError("sp1 must hold h, sx or sxdg");
  for (auto t : q.sp2)
    if (!is_superposition_tag(t)) throw SearchError("sp2 must hold h, sx or sxdg");
  for (auto t : q.theta)
    if (!is_theta_tag(t)) throw SearchError("theta must hold s, sdg, t or tdg");
  if (q.space_size() > kSearchLimit) throw SearchError("search space too large");

  const Unitary oracle = flip_oracle(q.target);
  const std::size_t nt = q.theta.size();
  const std::size_t free = q.symmetric ? 2 : 4;
  std::size_t theta_count = 1;
  for (std::size_t k = 0; k < free; ++k) theta_count *= nt;

  SearchResult res;
  for (auto sp1 : q.sp1)
    for (auto ax1 : q.ax1)
      for (std::size_t code = 0; code < theta_count; ++code)
        for (auto ax2 : q.ax2)
          for (auto sp2 : q.sp2) {
            CoreSpec spec;
            spec.sp1 = sp1;
            spec.ax1 = ax1;
            spec.ax2 = ax2;
            spec.sp2 = sp2;
            std::size_t c = code;
            std::array<GateTag, 4> th{};
            for (std::size_t k = 0; k < free; ++k) {
              th[k] = q.theta[c % nt];
              c /= nt;
            }
            if (q.symmetric) {
              th[2] = th[0];
              th[3] = th[1];
            }
            spec.theta = th;
            ++res.visited;
            const Unitary u = unitary_of(build_core(spec));
            const auto tt = realized(u);
            if (!tt || *tt != q.target) continue;
            res.matches.push_back({spec, equivalence(u, oracle)});
          }
  std::sort(res.matches.begin(), res.matches.end(),
            [](const SearchMatch& a, const SearchMatch& b) { return a.spec < b.spec; });
  return res;
}

}  // namespace qlayout
