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

#ifndef SZX_PHASE_FUNCTIONS_HPP
#define SZX_PHASE_FUNCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "szx/bitvec.hpp"
#include "szx/rational.hpp"

namespace szx {

/// Largest qubit count for a tabulated phase function (2^20 rationals).
inline constexpr std::size_t kMaxPhaseQubits = 20;

/// Semi-boolean function f : 2^n -> Q, the exponent of the diagonal gate
/// |x> |-> e^{i pi f(x)} |x>. Values are indexed by the big-endian integer
/// encoding of x and are never reduced mod 2.
class PhaseFunction {
 public:
  PhaseFunction() : values_(1) {}
  /// The zero function on n qubits.
  explicit PhaseFunction(std::size_t n);
  /// Throws DimensionError unless |values| == 2^n.
  PhaseFunction(std::size_t n, std::vector<Rational> values);

  [[nodiscard]] std::size_t qubits() const { return n_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }

  [[nodiscard]] const Rational& operator[](std::uint64_t x) const { return values_[x]; }
  Rational& operator[](std::uint64_t x) { return values_[x]; }
  [[nodiscard]] const Rational& at(const BitVec& x) const;

  [[nodiscard]] const std::vector<Rational>& values() const { return values_; }

  PhaseFunction& operator+=(const PhaseFunction& other);
  PhaseFunction& operator-=(const PhaseFunction& other);
  PhaseFunction& operator*=(const Rational& c);
  friend PhaseFunction operator+(PhaseFunction a, const PhaseFunction& b) { return a += b; }
  friend PhaseFunction operator-(PhaseFunction a, const PhaseFunction& b) { return a -= b; }
  friend PhaseFunction operator*(const Rational& c, PhaseFunction f) { return f *= c; }

  friend bool operator==(const PhaseFunction&, const PhaseFunction&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> values_;
};

/// Phase function that depends only on the Hamming weight: f(x) = F(|x|).
class SymmetricPhaseFunction {
 public:
  SymmetricPhaseFunction() : by_weight_(1) {}
  explicit SymmetricPhaseFunction(std::size_t n) : n_(n), by_weight_(n + 1) {}
  /// Throws DimensionError unless |by_weight| == n + 1.
  SymmetricPhaseFunction(std::size_t n, std::vector<Rational> by_weight);

  [[nodiscard]] std::size_t qubits() const { return n_; }
  [[nodiscard]] const Rational& operator[](std::size_t w) const { return by_weight_[w]; }
  Rational& operator[](std::size_t w) { return by_weight_[w]; }
  [[nodiscard]] const std::vector<Rational>& by_weight() const { return by_weight_; }

  friend bool operator==(const SymmetricPhaseFunction&,
                         const SymmetricPhaseFunction&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> by_weight_;
};

// ---------------------------------------------------------------------------
// Fast transforms on 2^n. Each is an in-place butterfly over exact rationals
// that splits on the most significant qubit first.

/// f^ = W^{(x)n} f with W = 1/2 [[1, 1], [1, -1]], i.e.
/// f^(s) = 2^{-n} sum_x f(x) (-1)^{s.x}.
PhaseFunction walsh(const PhaseFunction& f);
/// Unnormalised butterfly [[1, 1], [1, -1]]^{(x)n}; inverts walsh.
PhaseFunction walsh_inverse(const PhaseFunction& f);

/// f~ = M^{(x)n} f with M = [[1, 0], [-1, 1]], i.e.
/// f~(x) = sum_{s <= x} (-1)^{|x|+|s|} f(s).
PhaseFunction moebius(const PhaseFunction& f);
/// [[1, 0], [1, 1]]^{(x)n}: f(x) = sum_{s <= x} f~(s).
PhaseFunction moebius_inverse(const PhaseFunction& f);

enum class Basis { kChi, kOmega, kXi };

/// omega: parity of x AND s; xi: [s <= x]; chi: 1 - 2 omega.
/// Throws DimensionError when |s| != |x|.
Rational basis_eval(Basis kind, const BitVec& s, const BitVec& x);

// ---------------------------------------------------------------------------
// Symmetric calculus

PhaseFunction expand_symmetric(const SymmetricPhaseFunction& f);

/// Restriction of f to weight classes. Throws DomainError when f is not
/// symmetric.
SymmetricPhaseFunction restrict_symmetric(const PhaseFunction& f);

/// F~(m) = sum_k C(m, k) (-1)^{m-k} F(k).
SymmetricPhaseFunction binomial_transform(const SymmetricPhaseFunction& f);
/// F(m) = sum_k C(m, k) F~(k).
SymmetricPhaseFunction binomial_inverse(const SymmetricPhaseFunction& f);

/// K^n_k(m) = sum_j C(m, j) C(n - m, k - j) (-1)^j.
/// Throws DomainError unless 0 <= k, m <= n.
BigInt kravchuk(long n, long k, long m);

/// Row-major (n+1) x (n+1) table, entry [k][m] = K^n_k(m).
std::vector<std::vector<BigInt>> kravchuk_table(std::size_t n);

/// F^(m) = 2^{-n} sum_k F(k) K^n_k(m).
SymmetricPhaseFunction kravchuk_transform(const SymmetricPhaseFunction& f);
/// F(m) = sum_k F^(k) K^n_k(m).
SymmetricPhaseFunction kravchuk_inverse(const SymmetricPhaseFunction& f);

}  // namespace szx

#endif  // SZX_PHASE_FUNCTIONS_HPP
