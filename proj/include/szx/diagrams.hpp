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

#ifndef SZX_DIAGRAMS_HPP
#define SZX_DIAGRAMS_HPP

#include <cstddef>
#include <vector>

#include "szx/binary_matrix.hpp"
#include "szx/boolean_core.hpp"
#include "szx/phase_functions.hpp"
#include "szx/tensor.hpp"

namespace szx {

// All constructions below are scalar-exact: the well-tempered factors of
// their generators multiply to exactly 1.

/// e^{i pi f}: copy the register, send one copy through h_n into a green
/// spider carrying the phase vector f, keep the other.
Diagram diag_diagram(const PhaseFunction& f);

/// e^{i pi a Omega_s}. Throws DomainError when s is zero.
Diagram gadget_diagram(const BitVec& s, const Rational& a);

/// e^{i pi b xi_s}, a generalised hyperedge.
Diagram hyperedge_diagram(const BitVec& s, const Rational& b);

/// Product of C-Z over the edges encoded by a strictly upper triangular half
/// adjacency matrix: copy, red arrow Gamma, Hadamards, merge.
/// Throws DomainError when `gamma` is not square strictly upper triangular.
Diagram graph_operator_diagram(const F2Matrix& gamma);

/// All 2^n phase gadgets at once through the stack matrix H_n used as a red
/// arrow; coefficient a(s) sits on support s (a(0) is ignored by Omega_0).
Diagram gadget_stack_diagram(const PhaseFunction& coefficients);

/// All 2^n hyperedges at once through H_n used as a yellow arrow.
Diagram hyperedge_stack_diagram(const PhaseFunction& coefficients);

/// [n] -> [1]^n and back.
Diagram split_register(std::size_t n);
Diagram join_register(std::size_t n);

/// CNOT circuit on one register built from single-qubit spiders and swaps,
/// independent of red arrows. Qubits are 1-based.
Diagram cnot_circuit_diagram(std::size_t n, const std::vector<TransvectionStep>& steps);

/// diag(e^{i pi f(x)}) computed directly from the values of f.
ComplexMatrix phase_matrix(const PhaseFunction& f);

}  // namespace szx

#endif  // SZX_DIAGRAMS_HPP
