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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qlayout/circuit.hpp"

namespace qlayout {

/// Syntax or semantic error in circuit text, with its 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Line format:
///
///   qubits 3
///   //@name and3
///   //@role 2 target
///   h q[2]
///   rz(-pi/4) q[2]
///   cx q[1], q[2]
///
/// `//@` lines carry the circuit name and qubit roles; any other `//` text
/// is a comment.
std::string emit_text(const Circuit& circuit);
Circuit parse_text(std::string_view text);

}  // namespace qlayout
