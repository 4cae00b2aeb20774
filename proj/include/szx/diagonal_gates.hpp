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

#ifndef SZX_DIAGONAL_GATES_HPP
#define SZX_DIAGONAL_GATES_HPP

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "szx/binary_matrix.hpp"
#include "szx/phase_functions.hpp"
#include "szx/tensor.hpp"

namespace szx {

/// e^{i pi f} == e^{i pi g}: f(x) - g(x) is an even integer for every x.
/// Throws DimensionError when the sizes differ.
bool gate_equal(const PhaseFunction& f, const PhaseFunction& g);

// ---------------------------------------------------------------------------
// Graphs

/// Simple undirected graph on vertices 1..n; edges stored as (i, j), i < j.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  explicit Graph(std::size_t n = 0) : n_(n) {}
  /// Throws DomainError on self-loops or vertices outside 1..n. Repeated
  /// edges collapse.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  static Graph star(std::size_t n);  // centre 1
  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);

  [[nodiscard]] std::size_t vertices() const { return n_; }
  [[nodiscard]] const std::set<Edge>& edges() const { return edges_; }
  [[nodiscard]] bool has_edge(std::size_t i, std::size_t j) const;
  [[nodiscard]] std::vector<std::size_t> neighbors(std::size_t u) const;
  void toggle_edge(std::size_t i, std::size_t j);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(std::size_t v) const;

  std::size_t n_ = 0;
  std::set<Edge> edges_;
};

/// Strictly upper triangular Gamma with Gamma + Gamma^t = adjacency.
F2Matrix half_adjacency(const Graph& g);
F2Matrix adjacency(const Graph& g);

/// f(x) = number of edges with both ends set.
PhaseFunction graph_phasefn(const Graph& g);

/// C-Z is an involution, so edge sets compose by symmetric difference.
/// Throws DimensionError on different vertex counts.
Graph graph_compose(const Graph& a, const Graph& b);

/// Toggles every edge among the neighbours of u. Throws DomainError.
Graph local_complement(const Graph& g, std::size_t u);

struct LocalCompResult {
  bool holds = false;
  double fidelity = 0.0;
  /// <(G*u)+ | X_u(-pi/2) Z_{N_u}(pi/2) G+>, normalised to modulus one.
  Complex global_phase{1.0, 0.0};
};

/// Compares X_u(-pi/2) Z_{N_u}(pi/2) G|+> with (G*u)|+> as state vectors,
/// up to global phase. Throws DomainError for n > 16 or a bad vertex.
LocalCompResult verify_local_comp(const Graph& g, std::size_t u, double tol);

/// G X_i = X_i Z_{N(i)} G, checked on the phase function as
/// f(x + e_i) = f(x) + sum_{j in N(i)} x_j (mod 2) for all x; also
/// G|0> = |0>, i.e. f(0) is even.
bool pauli_push_check(const Graph& g, std::size_t i);

// ---------------------------------------------------------------------------
// Hypergraphs and term lists

struct Hypergraph {
  std::size_t n = 0;
  /// Nonempty supports of length n.
  std::set<BitVec> hyperedges;
};

/// Sum of xi_e over hyperedges. Throws DomainError on empty or mis-sized
/// hyperedges.
PhaseFunction hypergraph_phasefn(const Hypergraph& h);

enum class TermKind { kGadget, kHyperedge };

struct Term {
  BitVec support;
  Rational phase;

  friend bool operator==(const Term&, const Term&) = default;
};

struct TermList {
  TermKind kind = TermKind::kGadget;
  std::size_t n = 0;
  std::vector<Term> terms;

  friend bool operator==(const TermList&, const TermList&) = default;
};

/// sum_t phase_t * basis(support_t, .), with basis Omega for gadgets and xi
/// for hyperedges. Throws DomainError on mis-sized or zero gadget supports.
PhaseFunction terms_phasefn(const TermList& t);

struct Decomposition {
  Rational constant;
  TermList terms;
};

/// f = f(0) - 2 sum_s f^(s) Omega_s: gadget phase -2 f^(s) on every s != 0
/// with a nonzero coefficient, lexicographic by support.
Decomposition fourier_decompose(const PhaseFunction& f);

/// f = sum_s f~(s) xi_s, constant f~(0) = f(0).
Decomposition moebius_decompose(const PhaseFunction& f);

/// constant + terms_phasefn(terms).
PhaseFunction reconstruct(const Decomposition& d);

/// Sequential composition of one gadget/hyperedge diagram per term; the
/// identity wire for an empty list.
Diagram terms_diagram(const TermList& t);

/// Every term at once through the stack matrix H_n.
Diagram terms_stack_diagram(const TermList& t);

}  // namespace szx

#endif  // SZX_DIAGONAL_GATES_HPP
