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

#include "szx/rational.hpp"

#include <cctype>

#include "szx/errors.hpp"

namespace szx {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return BigInt(digits, 10);
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  BigInt d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

std::string Rational::str() const { return value_.get_str(10); }

bool Rational::is_even_integer() const {
  if (!is_integer()) return false;
  return mpz_even_p(value_.get_num_mpz_t()) != 0;
}

Rational Rational::mod2() const {
  // x - 2 * floor(x / 2)
  BigInt twice_den = 2 * value_.get_den();
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), twice_den.get_mpz_t());
  mpq_class r = value_ - mpq_class(2 * q);
  r.canonicalize();
  return Rational(std::move(r));
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw DomainError("division by zero");
  value_ /= other.value_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

Rational pow2(long exponent) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Rational(p);
  return Rational(BigInt(1), p);
}

}  // namespace szx
