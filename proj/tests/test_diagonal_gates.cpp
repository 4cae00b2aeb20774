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

#include <gtest/gtest.h>

#include <algorithm>

#include "szx/diagonal_gates.hpp"
#include "szx/diagrams.hpp"
#include "szx/errors.hpp"
#include "szx/random.hpp"

namespace szx {
namespace {

constexpr double kTol = 1e-9;

Rational q(const char* text) { return Rational::parse(text); }

// Value of a term list at x, summed term by term.
Rational brute_terms(const TermList& t, const BitVec& x) {
  Rational total;
  for (const Term& term : t.terms) {
    bool parity = false;
    bool covered = true;
    for (std::size_t i = 0; i < t.n; ++i) {
      if (term.support[i]) {
        parity = parity != x[i];
        covered = covered && x[i];
      }
    }
    const bool hit = t.kind == TermKind::kGadget ? parity : covered;
    if (hit) total += term.phase;
  }
  return total;
}

std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<Graph::Edge> pairs;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Graph> graphs;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Graph::Edge> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if ((mask >> e) & 1U) edges.push_back(pairs[e]);
    }
    graphs.emplace_back(n, edges);
  }
  return graphs;
}

TEST(GateEqual, ModTwo) {
  const PhaseFunction f(2, {0, q("1/2"), 1, q("3/4")});
  PhaseFunction g = f;
  g[1] += 2;
  g[2] -= 4;
  EXPECT_TRUE(gate_equal(f, g));
  g[3] += 1;
  EXPECT_FALSE(gate_equal(f, g));
  EXPECT_THROW(gate_equal(f, PhaseFunction(3)), DimensionError);
}

TEST(Fourier, ControlledZ) {
  const Decomposition d = fourier_decompose(PhaseFunction(2, {0, 0, 0, 1}));
  EXPECT_EQ(d.constant, Rational(0));
  EXPECT_EQ(d.terms.kind, TermKind::kGadget);
  const std::vector<Term> want = {{BitVec{0, 1}, q("1/2")},
                                  {BitVec{1, 0}, q("1/2")},
                                  {BitVec{1, 1}, q("-1/2")}};
  EXPECT_EQ(d.terms.terms, want);
}

TEST(Moebius, ControlledZIsOneHyperedge) {
  const Decomposition d = moebius_decompose(PhaseFunction(2, {0, 0, 0, 1}));
  EXPECT_EQ(d.constant, Rational(0));
  EXPECT_EQ(d.terms.kind, TermKind::kHyperedge);
  ASSERT_EQ(d.terms.terms.size(), 1u);
  EXPECT_EQ(d.terms.terms[0].support, (BitVec{1, 1}));
  EXPECT_EQ(d.terms.terms[0].phase, Rational(1));
}

TEST(Decompose, ZeroFunctionHasNoTerms) {
  for (const auto& d : {fourier_decompose(PhaseFunction(3)), moebius_decompose(PhaseFunction(3))}) {
    EXPECT_TRUE(d.terms.terms.empty());
    EXPECT_EQ(d.constant, Rational(0));
    EXPECT_EQ(reconstruct(d), PhaseFunction(3));
    EXPECT_TRUE(matrices_equal(eval_diagram(terms_diagram(d.terms)), ComplexMatrix::identity(8), kTol));
  }
}

void check_compilation(Decomposition (*decompose)(const PhaseFunction&), std::uint64_t seed) {
  Rng rng(seed);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 1 + rep % 6;
    const PhaseFunction f = random_phase_function(rng, n);
    const Decomposition d = decompose(f);
    EXPECT_EQ(reconstruct(d), f);
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      EXPECT_EQ(d.constant + brute_terms(d.terms, BitVec::from_index(n, x)), f[x]);
    }
    for (const Term& t : d.terms.terms) EXPECT_FALSE(t.support.is_zero());
    if (n <= 4) {
      const ComplexMatrix compiled = unit_phase(d.constant) * eval_diagram(terms_diagram(d.terms));
      EXPECT_LT(max_abs_diff(compiled, phase_matrix(f)), kTol);
      EXPECT_LT(max_abs_diff(eval_diagram(terms_stack_diagram(d.terms)),
                             eval_diagram(terms_diagram(d.terms))),
                kTol);
    }
  }
}

TEST(Fourier, CompilesRandomFunctions) { check_compilation(fourier_decompose, 41); }
TEST(Moebius, CompilesRandomFunctions) { check_compilation(moebius_decompose, 42); }

TEST(Terms, PhaseFunctionMatchesBruteForce) {
  Rng rng(43);
  for (auto kind : {TermKind::kGadget, TermKind::kHyperedge}) {
    TermList t{kind, 4, {}};
    for (int i = 0; i < 6; ++i) t.terms.push_back({random_nonzero_bitvec(rng, 4), random_dyadic(rng)});
    const PhaseFunction f = terms_phasefn(t);
    for (std::uint64_t x = 0; x < 16; ++x) EXPECT_EQ(f[x], brute_terms(t, BitVec::from_index(4, x)));
  }
}

TEST(Graph, Construction) {
  EXPECT_THROW(Graph(3, {{1, 1}}), DomainError);
  EXPECT_THROW(Graph(3, {{1, 4}}), DomainError);
  EXPECT_THROW(Graph(3, {{0, 2}}), DomainError);
  const Graph g(3, {{2, 1}, {1, 2}, {3, 2}});
  EXPECT_EQ(g.edges().size(), 2u);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_TRUE(g.has_edge(3, 2));
  EXPECT_EQ(g.neighbors(2), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(Graph::star(4).edges().size(), 3u);
  EXPECT_EQ(Graph::complete(5).edges().size(), 10u);
  EXPECT_EQ(Graph::path(5).edges().size(), 4u);
}

TEST(Graph, Matrices) {
  const Graph g(3, {{1, 2}, {2, 3}});
  EXPECT_EQ(half_adjacency(g), (F2Matrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
  EXPECT_EQ(adjacency(g), (F2Matrix{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}));
}

TEST(Graph, PhaseFunctionCountsEdges) {
  Rng rng(44);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = random_graph(rng, 5);
    const PhaseFunction f = graph_phasefn(g);
    for (std::uint64_t x = 0; x < 32; ++x) {
      const BitVec v = BitVec::from_index(5, x);
      long count = 0;
      for (const auto& [i, j] : g.edges()) count += (v.qubit(i) && v.qubit(j)) ? 1 : 0;
      EXPECT_EQ(f[x], Rational(count));
    }
    EXPECT_LT(max_abs_diff(eval_diagram(graph_operator_diagram(half_adjacency(g))), phase_matrix(f)),
              kTol);
  }
}

TEST(Graph, ComposeIsProductOfOperators) {
  Rng rng(45);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph a = random_graph(rng, 4);
    const Graph b = random_graph(rng, 4);
    const Graph c = graph_compose(a, b);
    EXPECT_TRUE(gate_equal(graph_phasefn(c), graph_phasefn(a) + graph_phasefn(b)));
    for (const auto& e : c.edges()) EXPECT_NE(a.has_edge(e.first, e.second), b.has_edge(e.first, e.second));
  }
  EXPECT_THROW(graph_compose(Graph(3), Graph(4)), DimensionError);
}

TEST(LocalComplement, Definition) {
  Rng rng(46);
  for (int rep = 0; rep < 30; ++rep) {
    const Graph g = random_graph(rng, 6);
    const std::size_t u = 1 + draw(rng, 6);
    const Graph h = local_complement(g, u);
    const auto nu = g.neighbors(u);
    for (std::size_t i = 1; i <= 6; ++i) {
      for (std::size_t j = i + 1; j <= 6; ++j) {
        const bool both = std::count(nu.begin(), nu.end(), i) && std::count(nu.begin(), nu.end(), j);
        EXPECT_EQ(h.has_edge(i, j), g.has_edge(i, j) != both);
      }
    }
    EXPECT_EQ(local_complement(h, u), g);
  }
  EXPECT_EQ(local_complement(Graph::star(5), 1), Graph::complete(5));
}

TEST(LocalComplement, ExhaustiveSmallGraphs) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Graph& g : all_graphs(n)) {
      for (std::size_t u = 1; u <= n; ++u) {
        const LocalCompResult r = verify_local_comp(g, u, kTol);
        EXPECT_TRUE(r.holds);
        EXPECT_GE(r.fidelity, 1 - kTol);
        EXPECT_NEAR(std::abs(r.global_phase), 1.0, kTol);
      }
    }
  }
}

TEST(LocalComplement, RandomAndStars) {
  Rng rng(47);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 2 + draw(rng, 6);
    const Graph g = random_graph(rng, n);
    const std::size_t u = 1 + draw(rng, n);
    EXPECT_TRUE(verify_local_comp(g, u, kTol).holds) << n << " " << u;
  }
  for (std::size_t n = 2; n <= 7; ++n) {
    for (std::size_t u = 1; u <= n; ++u) EXPECT_TRUE(verify_local_comp(Graph::star(n), u, kTol).holds);
  }
  EXPECT_THROW(verify_local_comp(Graph(17), 1, kTol), DomainError);
  EXPECT_THROW(verify_local_comp(Graph(3), 4, kTol), DomainError);
}

TEST(PauliPush, ExhaustiveAndRandom) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      for (std::size_t i = 1; i <= n; ++i) EXPECT_TRUE(pauli_push_check(g, i));
    }
  }
  Rng rng(48);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = random_graph(rng, 8);
    EXPECT_TRUE(pauli_push_check(g, 1 + draw(rng, 8)));
  }
}

TEST(Hypergraph, PhaseFunction) {
  Hypergraph h{3, {BitVec{1, 1, 1}, BitVec{0, 1, 1}}};
  const PhaseFunction f = hypergraph_phasefn(h);
  for (std::uint64_t x = 0; x < 8; ++x) {
    const BitVec v = BitVec::from_index(3, x);
    const long want = (v.qubit(1) && v.qubit(2) && v.qubit(3) ? 1 : 0) + (v.qubit(2) && v.qubit(3) ? 1 : 0);
    EXPECT_EQ(f[x], Rational(want));
  }
  const Decomposition d = moebius_decompose(f);
  EXPECT_EQ(d.terms.terms.size(), 2u);
}

}  // namespace
}  // namespace szx
