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
/// Registry of rewrite equations, each checked as a matrix identity with no
/// scalar correction.
///
/// | id                  | params              | equation                                |
/// |---------------------|---------------------|-----------------------------------------|
/// | farrow-apply        | f, x                | F . |x> = |f(x)>                       |
/// | farrow-erase        | f                   | erase . F = erase                       |
/// | farrow-copy         | f                   | copy . F = (F (x) F) . copy             |
/// | farrow-dagger       | f                   | [[F^dagger]] = [[F]]^dagger             |
/// | red-arrow-erase     | A                   | A . |0> = |0>                           |
/// | red-arrow-copy      | A                   | A . merge = merge . (A (x) A)           |
/// | red-arrow-rows      | A, B                | divide . (A; B) = (A (x) B) . copy      |
/// | red-arrow-cols      | A, B                | (A B) . gather = merge . (A (x) B)      |
/// | red-arrow-compose   | A, B                | A . B = AB                              |
/// | yellow-arrow-erase  | A                   | A . |1..1> = |1..1>                     |
/// | yellow-arrow-copy   | A                   | A . and = and . (A (x) A)               |
/// | yellow-arrow-rows   | A, B                | divide . (A; B) = (A (x) B) . copy      |
/// | yellow-arrow-cols   | A, B                | (A B) . gather = and . (A (x) B)        |
/// | green-fusion        | k, in, out, j, a, b | two green spiders joined by one leg     |
/// | red-fusion          | k, in, out, j, a, b | two red spiders joined by one leg       |
/// | divider-gatherer    | n, m                | divider . gatherer = id on [n](x)[m]    |
/// | gatherer-divider    | n, m                | gatherer . divider = id on [n+m]        |
/// | diag-phase-form     | f                   | copy . D = (D (x) id) . copy            |
/// | diag-unitary        | f                   | D^dagger . D = id                       |
/// | diag-compose        | f, g                | D(f) . D(g) = D(f + g)                  |
/// | diag-semantics      | f                   | [[D(f)]] = diag(e^{i pi f})             |
/// | gadget-semantics    | support, phase      | [[gadget]] = diag(e^{i pi a Omega_s})   |
/// | hyperedge-semantics | support, phase      | [[hyperedge]] = diag(e^{i pi b xi_s})   |
/// | stack-form          | kind, n, terms      | stacked terms = sequential terms        |
/// | graph-operator      | graph               | [[G]] = product of C-Z over edges       |
/// | graph-compose       | graph, other        | G . H = (G xor H)                       |
/// | cnot-synthesis      | A                   | red arrow A = its CNOT circuit          |
///
/// Matrices use the 0/1 row JSON encoding, functions the BooleanFunction
/// encoding, and phase vectors lists of rationals.

#ifndef SZX_RULES_HPP
#define SZX_RULES_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "szx/json_io.hpp"
#include "szx/tensor.hpp"

namespace szx {

struct RuleInstance {
  Diagram lhs;
  /// A diagram, or a matrix for semantic rules.
  std::variant<Diagram, ComplexMatrix> rhs;
};

struct RuleCheck {
  bool holds = false;
  double max_delta = 0.0;
};

/// Every registered id, in table order.
const std::vector<std::string>& rule_ids();
bool is_rule(std::string_view id);

/// Throws DomainError for an unknown id and ParseError for bad params.
RuleInstance build_rule(std::string_view id, const Json& params);

/// Evaluates both sides and compares them entrywise with tolerance `tol`.
RuleCheck verify_rule(std::string_view id, const Json& params, double tol = 1e-9,
                      const EvalOptions& options = {});

}  // namespace szx

#endif  // SZX_RULES_HPP
