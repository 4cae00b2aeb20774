// Copyright 2026 The szx Authors
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

#ifndef SZX_RATIONAL_HPP
#define SZX_RATIONAL_HPP

#include <gmpxx.h>

#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace szx {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Phases, transform coefficients and spider-nest values are all
/// carried as Rationals so that congruences mod 2 are decided exactly.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT

  template <std::unsigned_integral T>
  Rational(T value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT

  Rational(const BigInt& value) : value_(value) {}  // NOLINT

  /// Throws DomainError when `denominator` is zero.
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "p", "-p" or "p/q" (whitespace not allowed). Throws ParseError.
  static Rational parse(std::string_view text);

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const;

  [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  /// True iff the value lies in 2Z.
  [[nodiscard]] bool is_even_integer() const;

  /// Canonical representative in [0, 2).
  [[nodiscard]] Rational mod2() const;

  [[nodiscard]] double to_double() const { return value_.get_d(); }

  [[nodiscard]] const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

/// 2^exponent, exact. Negative exponents give dyadic fractions.
Rational pow2(long exponent);

/// (-1)^k for any integer k.
inline int minus_one_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace szx

#endif  // SZX_RATIONAL_HPP
