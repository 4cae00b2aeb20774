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

/// \file
///
/// Certification of spider-nest identities for symmetric phase-gadget
/// compositions.
///
/// A symmetric composition puts the same gadget phase on every support of a
/// given weight. Reading those phases as a Walsh spectrum S^ (gadget phase
/// -2 S^(k) on each support of weight k), the composition implements
/// e^{i pi (S - S(0))} where S is the Kravchuk inverse of S^. It is the
/// identity exactly when S is constant mod 2.

#ifndef SZX_SPIDER_NEST_HPP
#define SZX_SPIDER_NEST_HPP

#include <cstddef>
#include <vector>

#include "szx/phase_functions.hpp"
#include "szx/tensor.hpp"

namespace szx {

/// Largest n accepted by the exact checker.
inline constexpr std::size_t kMaxNestQubits = 64;
/// Largest n accepted by the numeric oracle.
inline constexpr std::size_t kMaxNumericNestQubits = 16;

struct NestReport {
  std::size_t n = 0;
  /// S = kravchuk_inverse(S^).
  std::vector<Rational> s_values;
  /// S(m) mod 2, in [0, 2).
  std::vector<Rational> residues;
  bool is_identity = false;
  /// S(0) mod 2.
  Rational global_phase_exponent;
};

/// Throws DomainError for n > kMaxNestQubits.
NestReport nest_check(const SymmetricPhaseFunction& s_hat);

/// S^(k) = -a(k) / 2 for symmetric gadget phases a.
SymmetricPhaseFunction gadget_phases_to_spectrum(const SymmetricPhaseFunction& phases);
/// a(k) = -2 S^(k).
SymmetricPhaseFunction spectrum_to_gadget_phases(const SymmetricPhaseFunction& s_hat);

/// S^(1) = (n-2)(n-3)/16, S^(2) = -(n-3)/8, S^(3) = 1/8, S^(n) = -1/8, zero
/// elsewhere. Throws DomainError for n < 4.
SymmetricPhaseFunction family_de2020fast(std::size_t n);

/// Closed-form Kravchuk inverse of family_de2020fast(n) at weight m.
/// Throws DomainError unless n >= 4 and 0 <= m <= n.
Rational closed_form_S(long n, long m);

/// The m-dependent part -m^3/6 + 3m^2/4 - 5m/6 - (-1)^m/8. Throws DomainError
/// for m < 0.
Rational closed_form_S_prime(long m);

struct MunsonReport {
  std::size_t n = 0;
  Rational alpha;
  /// Binomial transform of G(m) = alpha (1 - (-1)^m) / 2, weights 0..n.
  std::vector<Rational> g_tilde;
  /// G~(m) mod 2.
  std::vector<Rational> residues;
  /// Weights m >= 1 whose residue is nonzero.
  std::vector<std::size_t> residual_weights;
  /// gadget(1..1, alpha) equals the hyperedge composition with phases
  /// residue(|s|), decided pointwise mod 2.
  bool is_identity = false;
};

/// Throws DomainError unless 1 <= n <= kMaxPhaseQubits.
MunsonReport munson_check(const Rational& alpha, std::size_t n);

/// Independent oracle: T(x) = sum_k (-2 S^(k)) #{s : |s| = k, s.x odd},
/// evaluated on every weight class of x; true iff T is even everywhere.
/// Throws SizeLimitError for n > kMaxNumericNestQubits.
bool nest_numeric(const SymmetricPhaseFunction& s_hat);

/// Exact brute force over all 2^n x and all 2^n supports; for small n.
bool nest_brute_force(const SymmetricPhaseFunction& s_hat);

/// The symmetric gadget composition as a diagram: one gadget per nonzero
/// support, in lexicographic order.
Diagram nest_gadget_diagram(const SymmetricPhaseFunction& s_hat);

}  // namespace szx

#endif  // SZX_SPIDER_NEST_HPP
