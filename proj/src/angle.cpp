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


#include "qlayout/angle.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qlayout {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_radians(double r) {
  // into (-2pi, 2pi]
  r = std::fmod(r, 2.0 * kTwoPi);
  if (r <= -kTwoPi) r += 2.0 * kTwoPi;
  if (r > kTwoPi) r -= 2.0 * kTwoPi;
  return r;
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("bad integer in angle: '" + std::string(s) +
                                "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Angle Angle::pi_fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("angle denominator is zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  // 4pi periodic; keep num/den in (-2, 2].
  const std::int64_t period = 4 * den;
  num %= period;
  if (num <= -2 * den) num += period;
  if (num > 2 * den) num -= period;
  Angle a;
  a.exact_ = true;
  a.num_ = num;
  a.den_ = den;
  a.rad_ = static_cast<double>(num) * std::numbers::pi / static_cast<double>(den);
  return a;
}

Angle Angle::from_radians(double radians) {
  Angle a;
  a.exact_ = false;
  a.rad_ = wrap_radians(radians);
  return a;
}

double Angle::radians() const { return rad_; }

bool Angle::is_multiple_of_2pi() const {
  if (exact_) return num_ % (2 * den_) == 0;
  const double r = std::remainder(rad_, kTwoPi);
  return std::abs(r) < 1e-12;
}

Angle Angle::operator-() const {
  if (exact_) return pi_fraction(-num_, den_);
  return from_radians(-rad_);
}

Angle Angle::operator+(const Angle& other) const {
  if (exact_ && other.exact_) {
    const std::int64_t l = std::lcm(den_, other.den_);
    return pi_fraction(num_ * (l / den_) + other.num_ * (l / other.den_), l);
  }
  return from_radians(rad_ + other.rad_);
}

bool Angle::operator==(const Angle& other) const {
  if (exact_ != other.exact_) return false;
  if (exact_) return num_ == other.num_ && den_ == other.den_;
  return rad_ == other.rad_;
}

std::string Angle::to_string() const {
  if (!exact_) {
    std::ostringstream os;
    os.precision(17);
    os << rad_;
    std::string s = os.str();
    // Keep decimals distinguishable from exact integers on re-parse.
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
  }
  if (num_ == 0) return "0";
  std::string s;
  if (num_ < 0) s += '-';
  const std::int64_t mag = num_ < 0 ? -num_ : num_;
  if (mag != 1) s += std::to_string(mag) + "*";
  s += "pi";
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

Angle Angle::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty angle");
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) {
    if (s == "0") return pi_fraction(0, 1);
    std::string buf(s);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(buf, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad angle: '" + buf + "'");
    }
    if (used != buf.size()) throw std::invalid_argument("bad angle: '" + buf + "'");
    return from_radians(v);
  }
  // [-][k*]pi[/m]
  std::string_view head = trim(s.substr(0, pi_pos));
  std::string_view tail = trim(s.substr(pi_pos + 2));
  std::int64_t num = 1;
  if (!head.empty()) {
    bool neg = false;
    if (head.front() == '-') {
      neg = true;
      head = trim(head.substr(1));
    }
    if (!head.empty()) {
      if (head.back() != '*') throw std::invalid_argument("bad angle: '" + std::string(s) + "'");
      head.remove_suffix(1);
      num = parse_int(trim(head));
    }
    if (neg) num = -num;
  }
  std::int64_t den = 1;
  if (!tail.empty()) {
    if (tail.front() != '/') throw std::invalid_argument("bad angle: '" + std::string(s) + "'");
    den = parse_int(trim(tail.substr(1)));
  }
  return pi_fraction(num, den);
}

}  // namespace qlayout
