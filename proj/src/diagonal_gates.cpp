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

#include "szx/diagonal_gates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "szx/diagrams.hpp"
#include "szx/errors.hpp"

namespace szx {

bool gate_equal(const PhaseFunction& f, const PhaseFunction& g) {
  if (f.qubits() != g.qubits()) throw DimensionError("gate_equal: sizes differ");
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!(f[x] - g[x]).is_even_integer()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : n_(n) {
  for (auto [i, j] : edges) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw DomainError("graph: self-loop on vertex " + std::to_string(i));
    edges_.insert({std::min(i, j), std::max(i, j)});
  }
}

Graph Graph::star(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 2; v <= n; ++v) g.edges_.insert({1, v});
  return g;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) g.edges_.insert({i, j});
  }
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 1; v < n; ++v) g.edges_.insert({v, v + 1});
  return g;
}

void Graph::check_vertex(std::size_t v) const {
  if (v < 1 || v > n_) {
    throw DomainError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

bool Graph::has_edge(std::size_t i, std::size_t j) const {
  return edges_.count({std::min(i, j), std::max(i, j)}) != 0;
}

std::vector<std::size_t> Graph::neighbors(std::size_t u) const {
  check_vertex(u);
  std::vector<std::size_t> out;
  for (auto [i, j] : edges_) {
    if (i == u) out.push_back(j);
    if (j == u) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Graph::toggle_edge(std::size_t i, std::size_t j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw DomainError("graph: self-loop on vertex " + std::to_string(i));
  const Edge e{std::min(i, j), std::max(i, j)};
  if (!edges_.erase(e)) edges_.insert(e);
}

F2Matrix half_adjacency(const Graph& g) {
  F2Matrix m(g.vertices(), g.vertices());
  for (auto [i, j] : g.edges()) m.set(i - 1, j - 1, true);
  return m;
}

F2Matrix adjacency(const Graph& g) {
  F2Matrix m(g.vertices(), g.vertices());
  for (auto [i, j] : g.edges()) {
    m.set(i - 1, j - 1, true);
    m.set(j - 1, i - 1, true);
  }
  return m;
}

PhaseFunction graph_phasefn(const Graph& g) {
  const std::size_t n = g.vertices();
  PhaseFunction f(n);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    long count = 0;
    for (auto [i, j] : g.edges()) {
      if (index_bit(x, n, i) && index_bit(x, n, j)) ++count;
    }
    f[x] = count;
  }
  return f;
}

Graph graph_compose(const Graph& a, const Graph& b) {
  if (a.vertices() != b.vertices()) throw DimensionError("graph_compose: sizes differ");
  Graph c = a;
  for (auto [i, j] : b.edges()) c.toggle_edge(i, j);
  return c;
}

Graph local_complement(const Graph& g, std::size_t u) {
  const auto nbrs = g.neighbors(u);
  Graph out = g;
  for (std::size_t a = 0; a < nbrs.size(); ++a) {
    for (std::size_t b = a + 1; b < nbrs.size(); ++b) out.toggle_edge(nbrs[a], nbrs[b]);
  }
  return out;
}

namespace {

using State = std::vector<Complex>;

State graph_state(const Graph& g) {
  const std::size_t n = g.vertices();
  const double amp = std::pow(2.0, -static_cast<double>(n) / 2.0);
  State psi(std::size_t{1} << n, amp);
  for (auto [i, j] : g.edges()) {
    for (std::uint64_t x = 0; x < psi.size(); ++x) {
      if (index_bit(x, n, i) && index_bit(x, n, j)) psi[x] = -psi[x];
    }
  }
  return psi;
}

// diag(1, e^{i theta}) on qubit q.
void apply_z_phase(State& psi, std::size_t n, std::size_t q, double theta) {
  const Complex e = std::polar(1.0, theta);
  for (std::uint64_t x = 0; x < psi.size(); ++x) {
    if (index_bit(x, n, q)) psi[x] *= e;
  }
}

void apply_hadamard(State& psi, std::size_t n, std::size_t q) {
  const std::uint64_t bit = std::uint64_t{1} << (n - q);
  const double r = 1.0 / std::numbers::sqrt2;
  for (std::uint64_t x = 0; x < psi.size(); ++x) {
    if ((x & bit) != 0) continue;
    const Complex a = psi[x];
    const Complex b = psi[x | bit];
    psi[x] = r * (a + b);
    psi[x | bit] = r * (a - b);
  }
}

}  // namespace

LocalCompResult verify_local_comp(const Graph& g, std::size_t u, double tol) {
  const std::size_t n = g.vertices();
  if (n > 16) throw DomainError("verify_local_comp: at most 16 vertices");
  const auto nbrs = g.neighbors(u);

  State lhs = graph_state(g);
  for (auto v : nbrs) apply_z_phase(lhs, n, v, std::numbers::pi / 2);
  // X_u(theta) = H Z_u(theta) H.
  apply_hadamard(lhs, n, u);
  apply_z_phase(lhs, n, u, -std::numbers::pi / 2);
  apply_hadamard(lhs, n, u);

  const State rhs = graph_state(local_complement(g, u));
  Complex overlap{};
  for (std::size_t x = 0; x < lhs.size(); ++x) overlap += std::conj(rhs[x]) * lhs[x];

  LocalCompResult out;
  out.fidelity = std::norm(overlap);
  if (std::abs(overlap) > 0.0) out.global_phase = overlap / std::abs(overlap);
  out.holds = out.fidelity >= 1.0 - tol;
  return out;
}

bool pauli_push_check(const Graph& g, std::size_t i) {
  const std::size_t n = g.vertices();
  const auto nbrs = g.neighbors(i);
  const PhaseFunction f = graph_phasefn(g);
  if (!f[0].is_even_integer()) return false;
  const std::uint64_t flip = std::uint64_t{1} << (n - i);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    long increment = 0;
    for (auto j : nbrs) increment += index_bit(x, n, j) ? 1 : 0;
    if (!(f[x ^ flip] - f[x] - Rational(increment)).is_even_integer()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Hypergraphs and term lists

PhaseFunction hypergraph_phasefn(const Hypergraph& h) {
  TermList t{TermKind::kHyperedge, h.n, {}};
  for (const auto& e : h.hyperedges) {
    if (e.is_zero()) throw DomainError("hyperedges must be nonempty");
    t.terms.push_back({e, 1});
  }
  return terms_phasefn(t);
}

PhaseFunction terms_phasefn(const TermList& t) {
  PhaseFunction f(t.n);
  for (const auto& term : t.terms) {
    if (term.support.size() != t.n) throw DomainError("term support has the wrong length");
    if (t.kind == TermKind::kGadget && term.support.is_zero()) {
      throw DomainError("gadget supports must be nonzero");
    }
    const std::uint64_t s = term.support.to_index();
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      const bool hit = (t.kind == TermKind::kGadget)
                           ? (std::popcount(s & x) % 2 == 1)
                           : ((s & x) == s);
      if (hit) f[x] += term.phase;
    }
  }
  return f;
}

Decomposition fourier_decompose(const PhaseFunction& f) {
  const PhaseFunction hat = walsh(f);
  Decomposition d{f[0], {TermKind::kGadget, f.qubits(), {}}};
  for (std::uint64_t s = 1; s < hat.size(); ++s) {
    if (hat[s].is_zero()) continue;
    d.terms.terms.push_back({BitVec::from_index(f.qubits(), s), Rational(-2) * hat[s]});
  }
  return d;
}

Decomposition moebius_decompose(const PhaseFunction& f) {
  const PhaseFunction tilde = moebius(f);
  Decomposition d{tilde[0], {TermKind::kHyperedge, f.qubits(), {}}};
  for (std::uint64_t s = 1; s < tilde.size(); ++s) {
    if (tilde[s].is_zero()) continue;
    d.terms.terms.push_back({BitVec::from_index(f.qubits(), s), tilde[s]});
  }
  return d;
}

PhaseFunction reconstruct(const Decomposition& d) {
  PhaseFunction f = terms_phasefn(d.terms);
  for (std::size_t x = 0; x < f.size(); ++x) f[x] += d.constant;
  return f;
}

Diagram terms_diagram(const TermList& t) {
  std::vector<Diagram> parts;
  for (const auto& term : t.terms) {
    if (term.support.size() != t.n) throw DomainError("term support has the wrong length");
    parts.push_back(t.kind == TermKind::kGadget ? gadget_diagram(term.support, term.phase)
                                                : hyperedge_diagram(term.support, term.phase));
  }
  if (parts.empty()) return zx::wire(t.n);
  return zx::seq(parts);
}

Diagram terms_stack_diagram(const TermList& t) {
  PhaseFunction coefficients(t.n);
  for (const auto& term : t.terms) {
    if (term.support.size() != t.n) throw DomainError("term support has the wrong length");
    coefficients[term.support.to_index()] += term.phase;
  }
  return t.kind == TermKind::kGadget ? gadget_stack_diagram(coefficients)
                                     : hyperedge_stack_diagram(coefficients);
}

}  // namespace szx
