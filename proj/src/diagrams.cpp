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

#include "szx/diagrams.hpp"

#include <utility>

#include "szx/errors.hpp"

namespace szx {

namespace {

// copy ; (keep (x) phase) where `phase : [n] -> [0]`.
Diagram copy_then_phase(std::size_t n, const Diagram& phase) {
  return zx::seq({zx::green(n, 1, 2), zx::par({zx::wire(n), phase})});
}

template <class S>
BinaryMatrix<S> row_matrix(const BitVec& s) {
  BinaryMatrix<S> m(1, s.size());
  for (std::size_t j = 0; j < s.size(); ++j) m.set(0, j, s[j]);
  return m;
}

// Wires [1]^count, or the empty wire.
Diagram single_wires(std::size_t count) {
  if (count == 0) return zx::wire(0);
  std::vector<Diagram> parts(count, zx::wire(1));
  return zx::par(parts);
}

// Swap of single wires at positions i, i + 1 (1-based) on [1]^n.
Diagram adjacent_swap(std::size_t n, std::size_t i) {
  std::vector<Diagram> parts;
  if (i > 1) parts.push_back(single_wires(i - 1));
  parts.push_back(zx::swap(1, 1));
  if (n > i + 1) parts.push_back(single_wires(n - i - 1));
  return zx::par(parts);
}

}  // namespace

Diagram diag_diagram(const PhaseFunction& f) {
  const std::size_t n = f.qubits();
  return copy_then_phase(
      n, zx::seq({zx::function_arrow(BooleanFunction::set_function(n)),
                  zx::green(f.size(), 1, 0, f.values())}));
}

Diagram gadget_diagram(const BitVec& s, const Rational& a) {
  if (s.is_zero()) throw DomainError("phase gadget needs a nonzero support");
  return copy_then_phase(
      s.size(), zx::seq({zx::red_arrow(row_matrix<GF2>(s)), zx::green(1, 1, 0, {a})}));
}

Diagram hyperedge_diagram(const BitVec& s, const Rational& b) {
  return copy_then_phase(
      s.size(), zx::seq({zx::yellow_arrow(row_matrix<Boolean>(s)), zx::green(1, 1, 0, {b})}));
}

Diagram graph_operator_diagram(const F2Matrix& gamma) {
  if (gamma.rows() != gamma.cols()) {
    throw DomainError("half adjacency matrix must be square");
  }
  const std::size_t n = gamma.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (gamma.at(i, j)) {
        throw DomainError("half adjacency matrix must be strictly upper triangular");
      }
    }
  }
  return zx::seq({zx::green(n, 1, 2),
                  zx::par({zx::wire(n), zx::seq({zx::red_arrow(gamma), zx::hadamard(n)})}),
                  zx::green(n, 2, 1)});
}

Diagram gadget_stack_diagram(const PhaseFunction& coefficients) {
  const std::size_t n = coefficients.qubits();
  return copy_then_phase(
      n, zx::seq({zx::red_arrow(stack_matrix(n).as<GF2>()),
                  zx::green(coefficients.size(), 1, 0, coefficients.values())}));
}

Diagram hyperedge_stack_diagram(const PhaseFunction& coefficients) {
  const std::size_t n = coefficients.qubits();
  return copy_then_phase(
      n, zx::seq({zx::yellow_arrow(stack_matrix(n)),
                  zx::green(coefficients.size(), 1, 0, coefficients.values())}));
}

Diagram split_register(std::size_t n) {
  if (n <= 1) return zx::wire(n);
  return zx::seq({zx::divider(1, n - 1), zx::par({zx::wire(1), split_register(n - 1)})});
}

Diagram join_register(std::size_t n) {
  if (n <= 1) return zx::wire(n);
  return zx::seq({zx::par({zx::wire(1), join_register(n - 1)}), zx::gatherer(1, n - 1)});
}

Diagram cnot_circuit_diagram(std::size_t n, const std::vector<TransvectionStep>& steps) {
  if (steps.empty() || n < 2) {
    if (!steps.empty()) throw DomainError("CNOT needs two qubits");
    return zx::wire(n);
  }
  // Control on the first of two single wires: copy it green, merge red.
  const Diagram local_cnot =
      zx::seq({zx::par({zx::green(1, 1, 2), zx::wire(1)}),
               zx::par({zx::wire(1), zx::red(1, 2, 1)})});
  const Diagram local = (n == 2) ? local_cnot : zx::par({local_cnot, single_wires(n - 2)});

  std::vector<Diagram> parts{split_register(n)};
  for (const auto& step : steps) {
    if (step.source == step.target || step.source < 1 || step.target < 1 ||
        step.source > n || step.target > n) {
      throw DomainError("invalid CNOT step");
    }
    // Bring the control to position 1 and the target to position 2.
    std::vector<Diagram> route;
    for (std::size_t i = step.source - 1; i >= 1; --i) route.push_back(adjacent_swap(n, i));
    const std::size_t target = (step.target < step.source) ? step.target + 1 : step.target;
    for (std::size_t i = target - 1; i >= 2; --i) route.push_back(adjacent_swap(n, i));
    for (const auto& r : route) parts.push_back(r);
    parts.push_back(local);
    for (auto it = route.rbegin(); it != route.rend(); ++it) parts.push_back(dagger(*it));
  }
  parts.push_back(join_register(n));
  return zx::seq(parts);
}

ComplexMatrix phase_matrix(const PhaseFunction& f) {
  std::vector<Complex> d(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) d[x] = unit_phase(f[x]);
  return ComplexMatrix::diagonal(d);
}

}  // namespace szx
