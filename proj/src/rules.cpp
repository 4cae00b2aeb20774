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

#include "szx/rules.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "szx/diagonal_gates.hpp"
#include "szx/diagrams.hpp"
#include "szx/errors.hpp"

namespace szx {

namespace {

using Builder = std::function<RuleInstance(const Json&)>;

BitVec to_bits(std::size_t length, std::uint64_t value) {
  return BitVec::from_index(length, value);
}

// [k] (x) [k] -> [k], bitwise AND.
Diagram and_merge(std::size_t k) {
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  std::vector<std::uint64_t> table(std::size_t{1} << (2 * k));
  for (std::uint64_t v = 0; v < table.size(); ++v) table[v] = (v >> k) & v & mask;
  return zx::seq({zx::gatherer(k, k), zx::function_arrow(BooleanFunction(2 * k, k, table))});
}

Diagram wires(std::size_t k, std::size_t copies) {
  return zx::wire(WireType::power(k, copies));
}

std::size_t size_param(const Json& p, const char* key) {
  const Json& v = p.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("rule parameter '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

RuleInstance fusion(const Json& p, bool green) {
  const std::size_t k = size_param(p, "k");
  const std::size_t in = size_param(p, "in");
  const std::size_t out = size_param(p, "out");
  const std::size_t j = size_param(p, "j");
  if (out < 1) throw DomainError("fusion needs out >= 1");
  const auto a = p.contains("a") ? rationals_from_json(p.at("a")) : std::vector<Rational>(k);
  const auto b = p.contains("b") ? rationals_from_json(p.at("b")) : std::vector<Rational>(k);
  if (a.size() != k || b.size() != k) throw DimensionError("fusion phase vectors need length k");
  std::vector<Rational> sum(k);
  for (std::size_t i = 0; i < k; ++i) sum[i] = a[i] + b[i];
  auto spider = green ? &zx::green : &zx::red;
  std::vector<Diagram> second{spider(k, 1, j, b)};
  if (out > 1) second.push_back(wires(k, out - 1));
  return {zx::seq({spider(k, in, out, a), zx::par(second)}), spider(k, in, out - 1 + j, sum)};
}

const std::vector<std::pair<std::string, Builder>>& registry() {
  static const std::vector<std::pair<std::string, Builder>> rules = {
      {"farrow-apply",
       [](const Json& p) -> RuleInstance {
         const auto f = boolean_function_from_json(p.at("f"));
         const BitVec x = bitvec_from_json(p.at("x"));
         if (x.size() != f.in_bits()) throw DimensionError("x must have n bits");
         const std::uint64_t fx = f(x.size() == 0 ? 0 : x.to_index());
         return {zx::seq({zx::basis_state(x), zx::function_arrow(f)}),
                 zx::basis_state(to_bits(f.out_bits(), fx))};
       }},
      {"farrow-erase",
       [](const Json& p) -> RuleInstance {
         const auto f = boolean_function_from_json(p.at("f"));
         return {zx::seq({zx::function_arrow(f), zx::green(f.out_bits(), 1, 0)}),
                 zx::green(f.in_bits(), 1, 0)};
       }},
      {"farrow-copy",
       [](const Json& p) -> RuleInstance {
         const auto f = boolean_function_from_json(p.at("f"));
         const Diagram arrow = zx::function_arrow(f);
         return {zx::seq({arrow, zx::green(f.out_bits(), 1, 2)}),
                 zx::seq({zx::green(f.in_bits(), 1, 2), zx::par({arrow, arrow})})};
       }},
      {"farrow-dagger",
       [](const Json& p) -> RuleInstance {
         const Diagram arrow = zx::function_arrow(boolean_function_from_json(p.at("f")));
         return {dagger(arrow), eval_diagram(arrow).adjoint()};
       }},
      {"red-arrow-erase",
       [](const Json& p) -> RuleInstance {
         const F2Matrix a = f2_matrix_from_json(p.at("A"));
         return {zx::seq({zx::red(a.cols(), 0, 1), zx::red_arrow(a)}), zx::red(a.rows(), 0, 1)};
       }},
      {"red-arrow-copy",
       [](const Json& p) -> RuleInstance {
         const F2Matrix a = f2_matrix_from_json(p.at("A"));
         const Diagram arrow = zx::red_arrow(a);
         return {zx::seq({zx::red(a.cols(), 2, 1), arrow}),
                 zx::seq({zx::par({arrow, arrow}), zx::red(a.rows(), 2, 1)})};
       }},
      {"red-arrow-rows",
       [](const Json& p) -> RuleInstance {
         const F2Matrix a = f2_matrix_from_json(p.at("A"));
         const F2Matrix b = f2_matrix_from_json(p.at("B"));
         return {zx::seq({zx::red_arrow(vstack(a, b)), zx::divider(a.rows(), b.rows())}),
                 zx::seq({zx::green(a.cols(), 1, 2), zx::par({zx::red_arrow(a), zx::red_arrow(b)})})};
       }},
      {"red-arrow-cols",
       [](const Json& p) -> RuleInstance {
         const F2Matrix a = f2_matrix_from_json(p.at("A"));
         const F2Matrix b = f2_matrix_from_json(p.at("B"));
         return {zx::seq({zx::gatherer(a.cols(), b.cols()), zx::red_arrow(hstack(a, b))}),
                 zx::seq({zx::par({zx::red_arrow(a), zx::red_arrow(b)}), zx::red(a.rows(), 2, 1)})};
       }},
      {"red-arrow-compose",
       [](const Json& p) -> RuleInstance {
         const F2Matrix a = f2_matrix_from_json(p.at("A"));
         const F2Matrix b = f2_matrix_from_json(p.at("B"));
         return {zx::seq({zx::red_arrow(b), zx::red_arrow(a)}), zx::red_arrow(f2_matmul(a, b))};
       }},
      {"yellow-arrow-erase",
       [](const Json& p) -> RuleInstance {
         const BoolMatrix a = bool_matrix_from_json(p.at("A"));
         return {zx::seq({zx::basis_state(BitVec::ones(a.cols())), zx::yellow_arrow(a)}),
                 zx::basis_state(BitVec::ones(a.rows()))};
       }},
      {"yellow-arrow-copy",
       [](const Json& p) -> RuleInstance {
         const BoolMatrix a = bool_matrix_from_json(p.at("A"));
         const Diagram arrow = zx::yellow_arrow(a);
         return {zx::seq({and_merge(a.cols()), arrow}),
                 zx::seq({zx::par({arrow, arrow}), and_merge(a.rows())})};
       }},
      {"yellow-arrow-rows",
       [](const Json& p) -> RuleInstance {
         const BoolMatrix a = bool_matrix_from_json(p.at("A"));
         const BoolMatrix b = bool_matrix_from_json(p.at("B"));
         return {zx::seq({zx::yellow_arrow(vstack(a, b)), zx::divider(a.rows(), b.rows())}),
                 zx::seq({zx::green(a.cols(), 1, 2),
                          zx::par({zx::yellow_arrow(a), zx::yellow_arrow(b)})})};
       }},
      {"yellow-arrow-cols",
       [](const Json& p) -> RuleInstance {
         const BoolMatrix a = bool_matrix_from_json(p.at("A"));
         const BoolMatrix b = bool_matrix_from_json(p.at("B"));
         return {zx::seq({zx::gatherer(a.cols(), b.cols()), zx::yellow_arrow(hstack(a, b))}),
                 zx::seq({zx::par({zx::yellow_arrow(a), zx::yellow_arrow(b)}),
                          and_merge(a.rows())})};
       }},
      {"green-fusion", [](const Json& p) { return fusion(p, true); }},
      {"red-fusion", [](const Json& p) { return fusion(p, false); }},
      {"divider-gatherer",
       [](const Json& p) -> RuleInstance {
         const std::size_t n = size_param(p, "n");
         const std::size_t m = size_param(p, "m");
         return {zx::seq({zx::gatherer(n, m), zx::divider(n, m)}),
                 zx::par({zx::wire(n), zx::wire(m)})};
       }},
      {"gatherer-divider",
       [](const Json& p) -> RuleInstance {
         const std::size_t n = size_param(p, "n");
         const std::size_t m = size_param(p, "m");
         return {zx::seq({zx::divider(n, m), zx::gatherer(n, m)}), zx::wire(n + m)};
       }},
      {"diag-phase-form",
       [](const Json& p) -> RuleInstance {
         const PhaseFunction f = phase_function_from_json(p.at("f"));
         const std::size_t n = f.qubits();
         const Diagram d = diag_diagram(f);
         return {zx::seq({d, zx::green(n, 1, 2)}),
                 zx::seq({zx::green(n, 1, 2), zx::par({d, zx::wire(n)})})};
       }},
      {"diag-unitary",
       [](const Json& p) -> RuleInstance {
         const PhaseFunction f = phase_function_from_json(p.at("f"));
         const Diagram d = diag_diagram(f);
         return {zx::seq({d, dagger(d)}), zx::wire(f.qubits())};
       }},
      {"diag-compose",
       [](const Json& p) -> RuleInstance {
         const PhaseFunction f = phase_function_from_json(p.at("f"));
         const PhaseFunction g = phase_function_from_json(p.at("g"));
         if (f.qubits() != g.qubits()) throw DimensionError("diag-compose: sizes differ");
         return {zx::seq({diag_diagram(g), diag_diagram(f)}), diag_diagram(f + g)};
       }},
      {"diag-semantics",
       [](const Json& p) -> RuleInstance {
         const PhaseFunction f = phase_function_from_json(p.at("f"));
         return {diag_diagram(f), phase_matrix(f)};
       }},
      {"gadget-semantics",
       [](const Json& p) -> RuleInstance {
         const BitVec s = bitvec_from_json(p.at("support"));
         const Rational a = rational_from_json(p.at("phase"));
         return {gadget_diagram(s, a),
                 phase_matrix(terms_phasefn({TermKind::kGadget, s.size(), {{s, a}}}))};
       }},
      {"hyperedge-semantics",
       [](const Json& p) -> RuleInstance {
         const BitVec s = bitvec_from_json(p.at("support"));
         const Rational b = rational_from_json(p.at("phase"));
         return {hyperedge_diagram(s, b),
                 phase_matrix(terms_phasefn({TermKind::kHyperedge, s.size(), {{s, b}}}))};
       }},
      {"stack-form",
       [](const Json& p) -> RuleInstance {
         const TermList t = term_list_from_json(p);
         return {terms_stack_diagram(t), terms_diagram(t)};
       }},
      {"graph-operator",
       [](const Json& p) -> RuleInstance {
         const Graph g = graph_from_json(p.at("graph"));
         return {graph_operator_diagram(half_adjacency(g)), phase_matrix(graph_phasefn(g))};
       }},
      {"graph-compose",
       [](const Json& p) -> RuleInstance {
         const Graph g = graph_from_json(p.at("graph"));
         const Graph h = graph_from_json(p.at("other"));
         return {zx::seq({graph_operator_diagram(half_adjacency(h)),
                          graph_operator_diagram(half_adjacency(g))}),
                 graph_operator_diagram(half_adjacency(graph_compose(g, h)))};
       }},
      {"cnot-synthesis",
       [](const Json& p) -> RuleInstance {
         const F2Matrix a = f2_matrix_from_json(p.at("A"));
         return {zx::red_arrow(a), cnot_circuit_diagram(a.rows(), cnot_synthesize(a))};
       }},
  };
  return rules;
}

const Builder& find_builder(std::string_view id) {
  const auto& rules = registry();
  const auto it = std::find_if(rules.begin(), rules.end(),
                               [&](const auto& entry) { return entry.first == id; });
  if (it == rules.end()) throw DomainError("unknown rule '" + std::string(id) + "'");
  return it->second;
}

}  // namespace

const std::vector<std::string>& rule_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return ids;
}

bool is_rule(std::string_view id) {
  const auto& ids = rule_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

RuleInstance build_rule(std::string_view id, const Json& params) {
  const Builder& builder = find_builder(id);
  try {
    return builder(params);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(id) + ": " + e.what());
  }
}

RuleCheck verify_rule(std::string_view id, const Json& params, double tol,
                      const EvalOptions& options) {
  const RuleInstance rule = build_rule(id, params);
  const ComplexMatrix lhs = eval_diagram(rule.lhs, options);
  const ComplexMatrix rhs = std::holds_alternative<Diagram>(rule.rhs)
                                ? eval_diagram(std::get<Diagram>(rule.rhs), options)
                                : std::get<ComplexMatrix>(rule.rhs);
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw DimensionError(std::string(id) + ": sides have different shapes");
  }
  RuleCheck check;
  check.max_delta = max_abs_diff(lhs, rhs);
  check.holds = check.max_delta <= tol;
  return check;
}

}  // namespace szx
