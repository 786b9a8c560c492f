// Copyright 2026 The lincol Authors
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

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace lincol {

__extension__ using Wide = __int128;  // overflow-free products of int64

// Exact rational number over int64, always in lowest terms with a positive
// denominator. Intermediate products use 128-bit arithmetic; a result that
// does not fit back into int64 throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  // "p/q", or just "p" when q == 1.
  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Parses "p/q" or "p".
  static Rational parse(const std::string& text) {
    auto slash = text.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        auto v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return Rational(v);
      }
      auto n = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw std::invalid_argument(text);
      auto rest = text.substr(slash + 1);
      auto d = std::stoll(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(text);
      return Rational(n, d);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
  }

  Rational operator-() const { return from_wide(-static_cast<Wide>(num_), den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    using W = Wide;
    return from_wide(W(a.num_) * b.den_ + W(b.num_) * a.den_, W(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    using W = Wide;
    return from_wide(W(a.num_) * b.num_, W(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    using W = Wide;
    return from_wide(W(a.num_) * b.den_, W(a.den_) * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    using W = Wide;
    W lhs = W(a.num_) * b.den_;
    W rhs = W(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Wide gcd_wide(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(Wide num, Wide den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Wide g = gcd_wide(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr Wide kMax = INT64_MAX;
    if (num > kMax || num < -kMax || den > kMax) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  void assign(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace lincol
