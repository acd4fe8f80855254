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


// qlayout: build, transpile, simulate, verify, search, cost, trace and
// reproduce the reference tables from the command line.
//
// Exit status: 0 on success, 1 when a requested check fails, 2 on bad
// input.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qlayout/gate_library.hpp"
#include "qlayout/json_io.hpp"
#include "qlayout/layout.hpp"
#include "qlayout/report.hpp"
#include "qlayout/rule_engine.hpp"
#include "qlayout/simulator.hpp"
#include "qlayout/text_format.hpp"
#include "qlayout/transpiler.hpp"

namespace fs = std::filesystem;
using namespace qlayout;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw InputError("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw InputError("cannot write " + p.string());
  out << text;
}

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::string s;
  for (const auto& e : v) s += (s.empty() ? "" : sep) + e;
  return s;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

const CLI::Validator kGateName(
    [](std::string& s) -> std::string {
      return library_from_name(s) ? "" : "unknown gate '" + s + "'";
    },
    "GATE");

const CLI::Validator kOracleName(
    [](std::string& s) -> std::string {
      return build_oracle(s) ? ""
                             : "unknown oracle '" + s + "' (known: " + join(oracle_names()) + ")";
    },
    "ORACLE");

const CLI::Validator kBits(
    [](std::string& s) -> std::string {
      if (s.empty()) return "empty bit string";
      for (char c : s) {
        if (c != '0' && c != '1') return "bit string must contain only 0 and 1";
      }
      return "";
    },
    "BITS");

const CLI::Validator kTruth(
    [](std::string& s) -> std::string {
      try {
        TruthTable::parse(s);
      } catch (const std::invalid_argument& e) {
        return e.what();
      }
      return "";
    },
    "BITS");

template <typename T, typename F>
std::vector<T> parse_set(const std::string& csv, F&& from_name, const char* what) {
  std::vector<T> out;
  for (const auto& n : split(csv)) {
    auto v = from_name(n);
    if (!v) throw InputError(std::string("unknown ") + what + " '" + n + "'");
    out.push_back(*v);
  }
  if (out.empty()) throw InputError(std::string("empty ") + what + " set");
  return out;
}

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
};

void print(const Options& o, const Json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

Json truth_json(const std::optional<TruthTable>& t) {
  return t ? Json(t->to_string()) : Json(nullptr);
}

std::optional<TruthTable> truth_of(LibraryGate g, const Circuit& c) {
  auto beh = boolean_behaviour(g);
  if (!beh) return std::nullopt;
  return truth_table(c, beh->target, beh->controls, beh->ancillas);
}

// ---------------------------------------------------------------- build

struct BuildArgs {
  std::string gate;
  std::string out;
};

int cmd_build(const Options& o, const BuildArgs& a) {
  const Circuit c = build_library(*library_from_name(a.gate));
  const std::string text = emit_text(c);
  if (!a.out.empty()) write_file(a.out, text);
  Json j = {{"gate", a.gate}, {"width", c.width()}, {"size", c.size()}};
  if (a.out.empty()) j["circuit"] = text;
  else j["file"] = a.out;
  print(o, j, a.out.empty() ? text : "wrote " + a.out + "\n");
  return kOk;
}

// ------------------------------------------------------------ transpile

struct TranspileArgs {
  std::string file;
  std::string basis;
  bool peephole = false;
  std::string out;
};

int cmd_transpile(const Options& o, const TranspileArgs& a) {
  const NativeBasis b = *basis_from_name(a.basis);
  const Circuit in = parse_text(read_file(a.file));
  Circuit c = lower(in, b);
  if (a.peephole) c = peephole(c);
  const std::string text = emit_text(c);
  if (!a.out.empty()) write_file(a.out, text);
  const CostReport r = count_gates(c);
  Json j = {{"cost", cost_to_json(in.name(), basis_name(b), r)}};
  if (a.out.empty()) j["circuit"] = text;
  std::ostringstream os;
  if (a.out.empty()) os << text;
  os << "// qc " << r.qc << ", depth " << r.depth << '\n';
  print(o, j, os.str());
  return kOk;
}

// ------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string file;
  std::string input;
};

int cmd_simulate(const Options& o, const SimulateArgs& a) {
  const Circuit c = parse_text(read_file(a.file));
  if (a.input.size() != c.width()) {
    throw InputError("input has " + std::to_string(a.input.size()) +
                     " bits but the circuit has " + std::to_string(c.width()) + " qubits");
  }
  // written like a ket: leftmost character is the highest qubit
  std::size_t index = 0;
  for (char ch : a.input) index = (index << 1) | (ch == '1' ? 1U : 0U);
  const Statevector out = apply(c, Statevector::basis(c.width(), index));
  const auto pts = qsphere(out);
  TextTable t({"state", "magnitude", "phase"});
  for (const auto& p : pts) {
    std::ostringstream m, ph;
    m.precision(6);
    ph.precision(6);
    m << std::fixed << p.magnitude;
    ph << std::fixed << p.phase;
    t.add_row({p.label, m.str(), ph.str()});
  }
  Json j = {{"input", "|" + a.input + ">"}, {"qsphere", qsphere_to_json(pts)}};
  print(o, j, t.render());
  return kOk;
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
  std::string gate;
  std::string against;
  std::string level;
  std::string truth;
};

int cmd_verify(const Options& o, const VerifyArgs& a) {
  const LibraryGate g = *library_from_name(a.gate);
  std::optional<EquivalenceLevel> wanted;
  if (!a.against.empty()) {
    wanted = level_from_name(a.level);
    if (!wanted || *wanted == EquivalenceLevel::None) {
      throw InputError("--level must be L1, L2 or L3");
    }
  }
  const Circuit c = build_library(g);
  const auto truth = truth_of(g, c);
  Json j = {{"gate", a.gate}, {"truth", truth_json(truth)}};
  std::ostringstream text;
  if (truth) text << "truth   " << truth->to_string() << '\n';
  bool ok = true;

  if (!a.against.empty()) {
    Circuit oracle = *build_oracle(a.against);
    const auto ancillas = c.qubits_with_role(QubitRole::Ancilla);
    if (oracle.width() != c.width()) {
      if (oracle.width() + ancillas.size() != c.width() ||
          ancillas.size() == 0 || ancillas.front() != oracle.width()) {
        throw InputError("width mismatch: " + a.gate + " has " + std::to_string(c.width()) +
                         " qubits, " + a.against + " has " + std::to_string(oracle.width()));
      }
      oracle = with_ancillas(oracle, ancillas.size());
    }
    const EquivalenceLevel got = ancillas.empty()
                                     ? equivalence(c, oracle)
                                     : equivalence_ancilla_zero(c, oracle, ancillas);
    ok = satisfies(got, *wanted);
    j["against"] = a.against;
    j["level"] = level_name(got);
    j["required"] = level_name(*wanted);
    text << "against " << a.against << '\n'
         << "level   " << level_name(got) << " (required " << level_name(*wanted) << ")\n";
  }
  if (!a.truth.empty()) {
    if (!truth) throw InputError(a.gate + " is not a single-output Boolean gate");
    const TruthTable want = TruthTable::parse(a.truth);
    if (want.bits.size() != truth->bits.size()) {
      throw InputError("truth table needs " + std::to_string(truth->bits.size()) + " bits");
    }
    const bool match = want == *truth;
    ok = ok && match;
    j["expected_truth"] = a.truth;
    text << "expect  " << a.truth << (match ? "  match" : "  MISMATCH") << '\n';
  }
  j["ok"] = ok;
  text << (ok ? "PASS" : "FAIL") << '\n';
  print(o, j, text.str());
  return ok ? kOk : kCheckFailed;
}

// --------------------------------------------------------------- search

struct SearchArgs {
  std::string target;
  bool symmetric = false;
  std::string theta;
  std::string sp;
  std::string ax1;
  std::string ax2;
};

int cmd_search(const Options& o, const SearchArgs& a) {
  SearchQuery q;
  q.target = TruthTable::parse(a.target);
  if (q.target.bits.size() != 4) throw InputError("--target needs 4 bits");
  q.symmetric = a.symmetric;
  if (!a.theta.empty()) q.theta = parse_set<GateTag>(a.theta, tag_from_name, "gate");
  if (!a.sp.empty()) {
    q.sp1 = parse_set<GateTag>(a.sp, tag_from_name, "gate");
    q.sp2 = q.sp1;
  }
  if (!a.ax1.empty()) q.ax1 = parse_set<AuxGate>(a.ax1, aux_from_name, "auxiliary gate");
  if (!a.ax2.empty()) q.ax2 = parse_set<AuxGate>(a.ax2, aux_from_name, "auxiliary gate");
  const SearchResult r = search(q);
  TextTable t({"sp1", "ax1", "theta1", "theta2", "theta3", "theta4", "ax2", "sp2", "level"});
  for (const auto& m : r.matches) {
    const auto& s = m.spec;
    t.add_row({std::string(tag_name(s.sp1)), std::string(aux_name(s.ax1)),
               std::string(tag_name(s.theta[0])), std::string(tag_name(s.theta[1])),
               std::string(tag_name(s.theta[2])), std::string(tag_name(s.theta[3])),
               std::string(aux_name(s.ax2)), std::string(tag_name(s.sp2)),
               std::string(level_name(m.level))});
  }
  Json j = {{"query", query_to_json(q)}, {"result", result_to_json(r)}};
  std::ostringstream text;
  text << t.render() << r.matches.size() << " matches, " << r.visited << " visited\n";
  print(o, j, text.str());
  return kOk;
}

// ----------------------------------------------------------------- cost

struct CostArgs {
  std::string gate;
  std::string basis;
  std::string layout;
  std::string placement;
};

int cmd_cost(const Options& o, const CostArgs& a) {
  const LibraryGate g = *library_from_name(a.gate);
  const NativeBasis b = *basis_from_name(a.basis);
  if (!a.placement.empty() && a.layout.empty()) {
    throw InputError("--placement needs --layout");
  }
  std::optional<CouplingMap> map;
  std::optional<Placement> p;
  if (!a.layout.empty()) {
    map = load_map(a.layout);
    p = a.placement.empty() ? place(g, ishape_brisbane(*map))
                            : parse_placement(read_file(a.placement), qubit_labels(g));
    validate_placement(*p, *map);
  }
  const Circuit c = build_library(g);
  const CostReport r = cost_report(c, b);
  Json j = cost_to_json(a.gate, basis_name(b), r);
  std::ostringstream text;
  TextTable t({"gate", "basis", "x", "sx", "rz", std::string(b == NativeBasis::ECR ? "ecr" : "cx"),
               "qc", "depth"});
  t.add_row({a.gate, std::string(basis_name(b)), std::to_string(r.count(GateTag::X)),
             std::to_string(r.count(GateTag::SX)), std::to_string(r.count(GateTag::RZ)),
             std::to_string(r.count(b == NativeBasis::ECR ? GateTag::ECR : GateTag::CX)),
             std::to_string(r.qc), std::to_string(r.depth)});
  text << t.render();
  bool ok = true;
  if (map) {
    const auto rep = verify_no_swap(peephole(lower(c, b)), *map, *p);
    ok = rep.ok;
    Json v = Json::array();
    for (const auto& viol : rep.violations) {
      v.push_back({{"gate_index", viol.gate_index},
                   {"physical", {viol.physical_a, viol.physical_b}}});
      text << "not adjacent: gate " << viol.gate_index << " on " << viol.physical_a
           << ", " << viol.physical_b << '\n';
    }
    j["layout"] = {{"map", map->name()}, {"placement", Json::parse(placement_to_json(*p))},
                   {"swap_free", rep.ok}, {"violations", v}};
    text << (rep.ok ? "swap-free on " : "needs SWAPs on ") << map->name() << '\n';
  }
  print(o, j, text.str());
  return ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- trace

struct TraceArgs {
  std::string gate;
  std::string controls;
};

std::optional<BooleanGateKind> boolean_kind(LibraryGate g) {
  switch (g) {
    case LibraryGate::and3: return BooleanGateKind::AND;
    case LibraryGate::nand3: return BooleanGateKind::NAND;
    case LibraryGate::or3: return BooleanGateKind::OR;
    case LibraryGate::nor3: return BooleanGateKind::NOR;
    case LibraryGate::imp3: return BooleanGateKind::IMPLICATION;
    case LibraryGate::inh3: return BooleanGateKind::INHIBITION;
    default: return std::nullopt;
  }
}

int cmd_trace(const Options& o, const TraceArgs& a) {
  if (a.controls.size() != 2) throw InputError("--controls needs two bits, written c2 c1");
  const auto kind = boolean_kind(*library_from_name(a.gate));
  if (!kind) throw InputError("no phase trace for " + a.gate + "; use a 3-bit Boolean gate");
  const unsigned bits = (a.controls[0] == '1' ? 2U : 0U) | (a.controls[1] == '1' ? 1U : 0U);
  const auto steps = phase_trace(boolean_spec(*kind), bits);
  TextTable t({"stage", "state"});
  for (const auto& s : steps) t.add_row({s.stage, s.label()});
  Json j = {{"gate", a.gate}, {"controls", a.controls}, {"trace", trace_to_json(steps)}};
  print(o, j, t.render());
  return kOk;
}

// --------------------------------------------------------------- tables

struct TablesArgs {
  std::string dir;
  std::string expected = QLAYOUT_DATA_DIR "/expected.json";
};

int cmd_tables(const Options& o, const TablesArgs& a) {
  const TablesReport r = build_tables(load_expected(a.expected));
  if (!a.dir.empty()) {
    fs::create_directories(a.dir);
    write_file(fs::path(a.dir) / "tables.json", r.json.dump(2) + "\n");
    write_file(fs::path(a.dir) / "tables.txt", r.text);
  }
  print(o, r.json, r.text);
  return r.failures() == 0 ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layout-aware Clifford+T gate synthesis"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable output")->configurable(false);
  app.add_option("--seed", opt.seed, "Seed for randomized steps (none are randomized today)");

  const std::string gates = join([] {
    std::vector<std::string> v;
    for (auto g : all_library_gates()) v.emplace_back(library_name(g));
    return v;
  }());

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Write a library gate as circuit text");
  b->add_option("gate", build.gate, gates)->required()->check(kGateName);
  b->add_option("-o,--output", build.out, "Output file");

  TranspileArgs tr;
  auto* t = app.add_subcommand("transpile", "Lower a circuit file to a native basis");
  t->add_option("file", tr.file)->required()->check(CLI::ExistingFile);
  t->add_option("--basis", tr.basis)->required()->check(CLI::IsMember({"cx", "ecr"}));
  t->add_flag("--peephole", tr.peephole, "Merge and cancel after lowering");
  t->add_option("-o,--output", tr.out, "Output file");

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Run a basis state through a circuit file");
  s->add_option("file", sim.file)->required()->check(CLI::ExistingFile);
  s->add_option("--input", sim.input, "Basis state, highest qubit first")
      ->required()
      ->check(kBits);

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check a gate against an oracle or a truth table");
  v->add_option("gate", ver.gate, gates)->required()->check(kGateName);
  auto* against = v->add_option("--against", ver.against, "Reference circuit")->check(kOracleName);
  auto* level = v->add_option("--level", ver.level)->check(CLI::IsMember({"L1", "L2", "L3"}));
  v->add_option("--truth", ver.truth, "Expected outputs, one per assignment")
                    ->check(kTruth);
  against->needs(level);
  level->needs(against);
  v->callback([&] {
    if (ver.against.empty() && ver.truth.empty()) {
      throw CLI::ValidationError("verify", "give --against with --level, or --truth");
    }
  });

  SearchArgs se;
  auto* q = app.add_subcommand("search", "Enumerate core configurations for a function");
  q->add_option("--target", se.target, "4-bit truth table")->required()->check(kTruth);
  q->add_flag("--symmetric", se.symmetric, "Require theta1 = theta3 and theta2 = theta4");
  q->add_option("--theta-set", se.theta, "Comma-separated theta gates");
  q->add_option("--sp-set", se.sp, "Comma-separated superposition gates");
  q->add_option("--ax1-set", se.ax1, "Comma-separated first auxiliary gates");
  q->add_option("--ax2-set", se.ax2, "Comma-separated second auxiliary gates");

  CostArgs co;
  auto* c = app.add_subcommand("cost", "Native gate counts and layout check");
  c->add_option("gate", co.gate, gates)->required()->check(kGateName);
  c->add_option("--basis", co.basis)->required()->check(CLI::IsMember({"cx", "ecr"}));
  c->add_option("--layout", co.layout, "Coupling map JSON")->check(CLI::ExistingFile);
  c->add_option("--placement", co.placement, "Placement JSON")->check(CLI::ExistingFile);

  TraceArgs tra;
  auto* r = app.add_subcommand("trace", "Phase of the target through a 3-bit core");
  r->add_option("gate", tra.gate, gates)->required()->check(kGateName);
  r->add_option("--controls", tra.controls, "Two bits, c2 then c1")->required()->check(kBits);

  TablesArgs ta;
  auto* tb = app.add_subcommand("tables", "Recompute the reference tables");
  tb->add_option("-o,--output-dir", ta.dir, "Write tables.json and tables.txt here");
  tb->add_option("--expected", ta.expected, "Expected values")->check(CLI::ExistingFile);

  // --json may also follow the verb
  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", opt.json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*b) return cmd_build(opt, build);
    if (*t) return cmd_transpile(opt, tr);
    if (*s) return cmd_simulate(opt, sim);
    if (*v) return cmd_verify(opt, ver);
    if (*q) return cmd_search(opt, se);
    if (*c) return cmd_cost(opt, co);
    if (*r) return cmd_trace(opt, tra);
    if (*tb) return cmd_tables(opt, ta);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
