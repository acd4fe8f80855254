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


#include "qlayout/text_format.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace qlayout {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

std::string emit_text(const Circuit& circuit) {
  std::ostringstream os;
  os << "qubits " << circuit.width() << "\n";
  if (!circuit.name().empty()) os << "//@name " << circuit.name() << "\n";
  for (std::size_t q = 0; q < circuit.width(); ++q) {
    if (circuit.roles()[q] != QubitRole::Control) {
      os << "//@role " << q << " " << role_name(circuit.roles()[q]) << "\n";
    }
  }
  for (const auto& g : circuit.gates()) {
    os << tag_name(g.tag());
    if (g.kind().angle()) os << "(" << g.kind().angle()->to_string() << ")";
    const auto qs = g.qubits();
    os << " q[" << qs[0] << "]";
    if (qs.size() == 2) os << ", q[" << qs[1] << "]";
    os << "\n";
  }
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::optional<std::size_t> parse_index(std::string_view s) {
  s = trim(s);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return v;
}

std::size_t parse_qubit(std::string_view s, std::size_t line) {
  s = trim(s);
  if (s.size() < 4 || s.substr(0, 2) != "q[" || s.back() != ']') {
    throw ParseError(line, "expected q[i], got '" + std::string(s) + "'");
  }
  auto idx = parse_index(s.substr(2, s.size() - 3));
  if (!idx) throw ParseError(line, "bad qubit index '" + std::string(s) + "'");
  return *idx;
}

std::vector<std::string_view> split_operands(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    auto comma = s.find(',');
    out.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Circuit parse_text(std::string_view text) {
  std::optional<std::size_t> width;
  std::string name;
  std::vector<std::pair<std::size_t, QubitRole>> roles;
  std::vector<std::pair<std::size_t, Gate>> gates;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

    line = trim(line);
    if (line.starts_with("//@")) {
      std::istringstream is{std::string(line.substr(3))};
      std::string key;
      is >> key;
      if (key == "name") {
        std::getline(is >> std::ws, name);
      } else if (key == "role") {
        std::size_t q = 0;
        std::string r;
        if (!(is >> q >> r)) throw ParseError(line_no, "malformed role line");
        auto role = role_from_name(r);
        if (!role) throw ParseError(line_no, "unknown role '" + r + "'");
        roles.emplace_back(q, *role);
      }
      continue;
    }
    if (auto c = line.find("//"); c != std::string_view::npos) {
      line = trim(line.substr(0, c));
    }
    if (line.empty()) continue;

    if (!width) {
      if (!line.starts_with("qubits")) {
        throw ParseError(line_no, "expected 'qubits N' header");
      }
      auto n = parse_index(line.substr(6));
      if (!n || *n == 0) throw ParseError(line_no, "bad qubit count");
      width = *n;
      continue;
    }

    // <tag>[(angle)] operands
    std::size_t head_end = 0;
    while (head_end < line.size() &&
           (std::isalnum(static_cast<unsigned char>(line[head_end])))) {
      ++head_end;
    }
    std::string tag_text(line.substr(0, head_end));
    auto tag = tag_from_name(tag_text);
    if (!tag) throw ParseError(line_no, "unknown gate '" + tag_text + "'");
    std::string_view rest = line.substr(head_end);

    std::optional<Angle> angle;
    if (!rest.empty() && rest.front() == '(') {
      auto close = rest.find(')');
      if (close == std::string_view::npos) {
        throw ParseError(line_no, "unterminated angle");
      }
      try {
        angle = Angle::parse(rest.substr(1, close - 1));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      rest.remove_prefix(close + 1);
    }
    if (is_rotation(*tag) != angle.has_value()) {
      throw ParseError(line_no, is_rotation(*tag)
                                    ? "missing angle for '" + tag_text + "'"
                                    : "unexpected angle for '" + tag_text + "'");
    }
    GateKind kind = angle ? GateKind(*tag, *angle) : GateKind(*tag);

    auto ops = split_operands(trim(rest));
    if (ops.size() != arity(*tag)) {
      throw ParseError(line_no, "arity mismatch: '" + tag_text + "' expects " +
                                    std::to_string(arity(*tag)) +
                                    " qubit(s), got " +
                                    std::to_string(ops.size()));
    }
    std::vector<std::size_t> qs;
    for (auto op : ops) {
      auto q = parse_qubit(op, line_no);
      if (q >= *width) {
        throw ParseError(line_no, "qubit index " + std::to_string(q) +
                                      " out of declared width " +
                                      std::to_string(*width));
      }
      qs.push_back(q);
    }
    try {
      if (qs.size() == 1) {
        gates.emplace_back(line_no, Gate(kind, qs[0]));
      } else {
        gates.emplace_back(line_no, Gate(kind, qs[0], qs[1]));
      }
    } catch (const CircuitError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!width) throw ParseError(line_no, "missing 'qubits N' header");

  CircuitBuilder b(*width, name);
  for (auto& [q, r] : roles) {
    if (q >= *width) throw ParseError(line_no, "role for out-of-range qubit");
    b.role(q, r);
  }
  for (auto& [ln, g] : gates) b.add(g);
  return b.build();
}

}  // namespace qlayout
