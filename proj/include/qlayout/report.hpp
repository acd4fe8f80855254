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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qlayout/gate_library.hpp"
#include "qlayout/json_io.hpp"

namespace qlayout {

/// Whitespace-aligned text table.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header);
  void add_row(std::vector<std::string> row);
  std::string render() const;

 private:
  std::vector<std::vector<std::string>> rows_;
};

/// One compared value. Soft cells are reported but never fail the run.
struct Cell {
  std::string table;
  std::string row;
  std::string column;
  std::string expected;
  std::string actual;
  bool pass = false;
  bool soft = false;
};

struct TablesReport {
  std::vector<Cell> cells;
  Json json;
  std::string text;
  std::size_t failures() const;  // hard cells only
};

/// Expected values as shipped in data/expected.json.
Json load_expected(const std::filesystem::path& file);

/// Recomputes every table in `expected` and compares cell by cell.
TablesReport build_tables(const Json& expected);

/// Reference (non layout-aware) circuit with the same width and qubit
/// roles as `g`; empty for the reference gates themselves.
std::optional<Circuit> standard_counterpart(LibraryGate g);

}  // namespace qlayout
