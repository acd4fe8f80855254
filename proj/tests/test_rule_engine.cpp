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


#include <map>
#include <sstream>

#include "doctest.h"
#include "qlayout/rule_engine.hpp"

using namespace qlayout;

namespace {

std::string join(const std::vector<GateTag>& tags) {
  std::ostringstream os;
  for (std::size_t i = 0; i < tags.size(); ++i) os << (i ? "," : "") << tag_name(tags[i]);
  return os.str();
}

std::string join(const std::vector<Segment>& segs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < segs.size(); ++i) os << (i ? "," : "") << segment_name(segs[i]);
  return os.str();
}

const std::vector<GateTag> kFour{GateTag::S, GateTag::Sdg, GateTag::T, GateTag::Tdg};

}  // namespace

TEST_CASE("rule stages") {
  const auto st = apply_rules();
  REQUIRE(st.size() == 5);
  CHECK(join(st[0].ctg) == "i,x,y,z,h,sx,sxdg,s,sdg,t,tdg,cx,cy,cz,swap");
  CHECK(join(st[0].seg) == "semicircles,quadrants,octants");
  CHECK(join(st[1].ctg) == "i,x,y,z,h,sx,sxdg,s,sdg,t,tdg");
  CHECK(join(st[2].ctg) == "z,s,sdg,t,tdg");
  CHECK(join(st[3].ctg) == "s,sdg,t,tdg");
  CHECK(join(st[3].seg) == "quadrants,octants");
  CHECK(join(st[4].ctg) == "t,tdg");
  CHECK(join(st[4].seg) == "octants");
  for (std::size_t k = 1; k < st.size(); ++k) {
    CHECK(st[k].stage == static_cast<int>(k));
    CHECK(st[k].ctg.size() < st[k - 1].ctg.size());
    for (auto t : st[k].ctg) {
      CHECK(std::find(st[k - 1].ctg.begin(), st[k - 1].ctg.end(), t) != st[k - 1].ctg.end());
    }
    for (auto s : st[k].seg) {
      CHECK(std::find(st[k - 1].seg.begin(), st[k - 1].seg.end(), s) != st[k - 1].seg.end());
    }
  }
}

TEST_CASE("count_space") {
  CHECK(count_space(1, 1, 4) == 256);
  CHECK(count_space(3, 9, 4) == 186624);
  CHECK(count_space(1, 1, 1) == 1);
  CHECK_THROWS_AS(count_space(0, 1, 1), SearchError);
}

TEST_CASE("enumeration visits the whole space") {
  SearchQuery q;
  q.target = TruthTable::parse("0001");
  q.theta = kFour;
  const auto r = search(q);
  CHECK(r.visited == 256);
  CHECK(r.visited == count_space(1, 1, 4));
  CHECK(r.visited == q.space_size());
}

TEST_CASE("AND by symmetric octant search") {
  SearchQuery q;
  q.target = TruthTable::parse("0001");
  q.symmetric = true;
  const auto r = search(q);
  CHECK(r.visited == 4);
  REQUIRE(r.matches.size() == 2);
  using enum GateTag;
  std::vector<std::array<GateTag, 4>> got;
  for (const auto& m : r.matches) {
    got.push_back(m.spec.theta);
    CHECK(m.level == EquivalenceLevel::L2);
  }
  CHECK(std::find(got.begin(), got.end(), std::array{Tdg, T, Tdg, T}) != got.end());
  CHECK(std::find(got.begin(), got.end(), std::array{T, Tdg, T, Tdg}) != got.end());
}

TEST_CASE("every Boolean row is rediscovered") {
  for (auto kind : {BooleanGateKind::AND, BooleanGateKind::NAND, BooleanGateKind::OR,
                    BooleanGateKind::NOR, BooleanGateKind::IMPLICATION,
                    BooleanGateKind::INHIBITION}) {
    CAPTURE(boolean_name(kind));
    SearchQuery q;
    for (std::size_t a = 0; a < 4; ++a) {
      q.target.bits.push_back(boolean_eval(kind, a & 1U, a & 2U));
    }
    q.ax2 = {AuxGate::I, AuxGate::Z, AuxGate::NegZ};
    q.theta = kFour;
    const auto r = search(q);
    CHECK(r.visited == 768);
    bool found = false;
    for (const auto& m : r.matches) found = found || m.spec == boolean_spec(kind);
    CHECK(found);
  }
}

TEST_CASE("OR with symmetric quadrant/octant sets") {
  SearchQuery q;
  q.target = TruthTable::parse("0111");
  q.ax2 = {AuxGate::I, AuxGate::Z, AuxGate::NegZ};
  q.theta = kFour;
  q.symmetric = true;
  const auto r = search(q);
  using enum GateTag;
  bool found = false;
  for (const auto& m : r.matches) {
    found = found || (m.spec.theta == std::array{T, T, T, T} && m.spec.ax2 == AuxGate::Z);
  }
  CHECK(found);
}

TEST_CASE("property: search is sound and complete over its space") {
  // Independent tally: simulate every spec once and bucket by realized table.
  std::map<std::string, std::vector<CoreSpec>> tally;
  std::size_t seen = 0;
  for (int code = 0; code < 256; ++code) {
    CoreSpec spec;
    for (int k = 0; k < 4; ++k) spec.theta[k] = kFour[(code >> (2 * k)) & 3];
    for (auto ax2 : {AuxGate::I, AuxGate::Z}) {
      spec.ax2 = ax2;
      ++seen;
      try {
        tally[truth_table(build_core(spec), 2, {0, 1}).to_string()].push_back(spec);
      } catch (const SimulationError&) {
      }
    }
  }
  CHECK(seen == 512);
  for (int f = 0; f < 16; ++f) {
    TruthTable t;
    for (int a = 0; a < 4; ++a) t.bits.push_back((f >> a) & 1);
    SearchQuery q;
    q.target = t;
    q.ax2 = {AuxGate::I, AuxGate::Z};
    q.theta = kFour;
    const auto r = search(q);
    CHECK(r.visited == 512);
    auto expect = tally[t.to_string()];
    std::sort(expect.begin(), expect.end());
    std::vector<CoreSpec> got;
    for (const auto& m : r.matches) {
      got.push_back(m.spec);
      CHECK(truth_table(build_core(m.spec), 2, {0, 1}) == t);
    }
    CHECK(got == expect);
    CHECK(std::is_sorted(got.begin(), got.end()));
  }
}

TEST_CASE("constant targets are allowed") {
  SearchQuery q;
  q.target = TruthTable::parse("0000");
  q.symmetric = true;
  const auto r = search(q);
  for (const auto& m : r.matches) {
    CHECK(truth_table(build_core(m.spec), 2, {0, 1}).to_string() == "0000");
  }
}

TEST_CASE("search errors") {
  SearchQuery q;
  q.target = TruthTable::parse("0001");
  q.theta.clear();
  CHECK_THROWS_AS(search(q), SearchError);
  q.theta = {GateTag::H};
  CHECK_THROWS_AS(search(q), SearchError);
  q.theta = kFour;
  q.sp1 = {GateTag::H, GateTag::SX, GateTag::SXdg};
  q.sp2 = q.sp1;
  q.ax1.assign(100, AuxGate::I);
  q.ax2.assign(100, AuxGate::I);
  CHECK_THROWS_AS(search(q), SearchError);
  q = SearchQuery{};
  q.target = TruthTable::parse("01");
  CHECK_THROWS_AS(search(q), SearchError);
}

TEST_CASE("full 186624 space runs within the guard") {
  SearchQuery q;
  q.target = TruthTable::parse("0001");
  q.sp1 = {GateTag::H, GateTag::SX, GateTag::SXdg};
  q.sp2 = q.sp1;
  q.ax1.clear();
  for (auto a : {AuxGate::I, AuxGate::X, AuxGate::SX, AuxGate::SXdg, AuxGate::Z,
                 AuxGate::S, AuxGate::Sdg, AuxGate::T, AuxGate::Tdg}) {
    q.ax1.push_back(a);
  }
  q.ax2 = q.ax1;
  q.theta = kFour;
  CHECK(q.space_size() == count_space(3, 9, 4));
}
