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

#include <cstdint>
#include <string>
#include <string_view>

namespace qlayout {

/// Rotation angle held as an exact multiple of pi (num/den) where possible,
/// falling back to plain radians. Always normalized to (-2pi, 2pi].
class Angle {
 public:
  Angle() = default;

  static Angle pi_fraction(std::int64_t num, std::int64_t den = 1);
  static Angle from_radians(double radians);

  bool is_exact() const { return exact_; }
  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  double radians() const;

  /// True when a rotation by this angle is the identity up to global phase.
  bool is_multiple_of_2pi() const;

  Angle operator-() const;
  Angle operator+(const Angle& other) const;
  Angle operator-(const Angle& other) const { return *this + (-other); }

  /// Structural equality: exact angles compare by fraction, decimal ones by
  /// value.
  bool operator==(const Angle& other) const;

  /// Renders `pi`, `-pi/4`, `3*pi/4`, `0`, or a decimal.
  std::string to_string() const;

  /// Accepts the forms produced by to_string() plus `k*pi` and `pi/m`.
  /// Throws std::invalid_argument on malformed input.
  static Angle parse(std::string_view text);

 private:
  bool exact_ = true;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double rad_ = 0.0;
};

}  // namespace qlayout
