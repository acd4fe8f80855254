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


// Writes the bundled heavy-hex coupling map.

#include <fstream>
#include <iostream>

#include "qlayout/layout.hpp"

int main(int argc, char** argv) {
  const std::string json = qlayout::map_to_json(qlayout::heavy_hex_eagle()) + "\n";
  if (argc < 2) {
    std::cout << json;
    return 0;
  }
  std::ofstream out(argv[1]);
  if (!out) {
    std::cerr << "cannot write " << argv[1] << "\n";
    return 1;
  }
  out << json;
  return 0;
}
