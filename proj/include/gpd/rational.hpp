// Copyright 2026 The gpd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GPD_RATIONAL_HPP
#define GPD_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace gpd {

using BigInt = boost::multiprecision::cpp_int;

/*
 * Exact rational number over arbitrary-precision integers.
 *
 * Always stored reduced: den >= 1 and gcd(|num|, den) == 1, so the
 * defaulted member-wise equality is value equality.  Arithmetic never
 * overflows; operands grow as needed.
 */
class Rat {
 public:
  Rat() = default;

  template <std::integral T>
  Rat(T value) : num_(value) {}  // NOLINT: implicit integer embedding

  Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rat operator-() const {
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
  }

  Rat& operator+=(const Rat& o) {
    if (den_ == o.den_) {
      num_ += o.num_;
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ *= o.den_;
    }
    normalize();
    return *this;
  }

  Rat& operator-=(const Rat& o) { return *this += -o; }

  Rat& operator*=(const Rat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }

  Rat& operator/=(const Rat& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat&, const Rat&) = default;

  // Denominators are positive, so cross-multiplication preserves order.
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Canonical text: "a" for integers, "a/b" otherwise, sign on the numerator.
  std::string to_string() const {
    std::string s = num_.str();
    if (den_ != 1) {
      s += '/';
      s += den_.str();
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_ = 0;
  BigInt den_ = 1;
};

inline Rat rat(BigInt num, BigInt den) { return Rat(std::move(num), std::move(den)); }

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

enum class RatParseError { empty, malformed, zero_denominator };

struct RatParseResult {
  std::optional<Rat> value;
  RatParseError error = RatParseError::malformed;
};

// Grammar: -?[0-9]+(/[0-9]+)?  with no embedded whitespace, no decimals.
inline RatParseResult parse_rat(std::string_view text) {
  RatParseResult result;
  if (text.empty()) {
    result.error = RatParseError::empty;
    return result;
  }
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num_part = body;
  std::string_view den_part;
  bool has_den = false;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_part = body.substr(0, slash);
    den_part = body.substr(slash + 1);
    has_den = true;
  }
  if (!digits(num_part) || (has_den && !digits(den_part))) return result;

  BigInt num{std::string(num_part)};
  BigInt den = has_den ? BigInt(std::string(den_part)) : BigInt(1);
  if (den == 0) {
    result.error = RatParseError::zero_denominator;
    return result;
  }
  if (negative) num = -num;
  result.value = Rat(std::move(num), std::move(den));
  return result;
}

}  // namespace gpd

#endif  // GPD_RATIONAL_HPP
