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

// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <string>

#include "szx/diagonal_gates.hpp"
#include "szx/diagrams.hpp"
#include "szx/random.hpp"
#include "szx/rules.hpp"
#include "szx/spider_nest.hpp"
#include "szx/suites.hpp"

namespace szx {
namespace {

constexpr double kTol = 1e-9;

Rational q(const char* text) { return Rational::parse(text); }

ComplexMatrix diag_of(const PhaseFunction& f) {
  ComplexMatrix m(f.size(), f.size());
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    m(x, x) = std::polar(1.0, std::numbers::pi * f[x].to_double());
  }
  return m;
}

PhaseFunction dense_walsh(const PhaseFunction& f) {
  const std::uint64_t size = f.size();
  std::vector<Rational> out(size);
  const Rational norm = Rational(1) / Rational(BigInt(size));
  for (std::uint64_t s = 0; s < size; ++s) {
    for (std::uint64_t x = 0; x < size; ++x) {
      if (std::popcount(s & x) % 2 == 0) {
        out[s] += f[x];
      } else {
        out[s] -= f[x];
      }
    }
    out[s] *= norm;
  }
  return {f.qubits(), out};
}

PhaseFunction dense_moebius(const PhaseFunction& f) {
  const std::uint64_t size = f.size();
  std::vector<Rational> out(size);
  for (std::uint64_t x = 0; x < size; ++x) {
    for (std::uint64_t s = 0; s < size; ++s) {
      if ((s & ~x) != 0) continue;
      if ((std::popcount(x) + std::popcount(s)) % 2 == 0) {
        out[x] += f[s];
      } else {
        out[x] -= f[s];
      }
    }
  }
  return {f.qubits(), out};
}

BigInt choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

bool criterion_cz() {
  const ComplexMatrix m = eval_diagram(graph_operator_diagram(F2Matrix{{0, 1}, {0, 0}}));
  return matrices_equal(m, ComplexMatrix::diagonal({1.0, 1.0, 1.0, -1.0}), kTol);
}

bool criterion_scalar() {
  Rng rng(2);
  for (int rep = 0; rep < 50; ++rep) {
    const PhaseFunction f = random_phase_function(rng, 1 + rep % 4);
    if (!matrices_equal(eval_diagram(diag_diagram(f)), diag_of(f), kTol)) return false;
  }
  return true;
}

bool criterion_rules() {
  const std::set<std::string> required = {
      "farrow-apply",  "farrow-erase",    "farrow-copy",       "farrow-dagger",
      "red-arrow-copy", "red-arrow-erase", "red-arrow-rows",   "red-arrow-cols",
      "yellow-arrow-copy", "yellow-arrow-erase", "green-fusion", "red-fusion",
      "diag-unitary"};
  std::set<std::string> seen;
  for (const char* suite : {"arrows", "spiders"}) {
    const Json report = run_suite(suite, {3, 3, kTol});
    for (const auto& r : report["results"]) {
      if (!r["holds"].get<bool>() || r["cases"].get<std::size_t>() == 0) return false;
      seen.insert(r["rule"].get<std::string>());
    }
  }
  for (const auto& id : required) {
    if (!seen.count(id)) return false;
  }
  return true;
}

bool criterion_transforms() {
  Rng rng(4);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      const PhaseFunction f = random_phase_function(rng, n);
      if (walsh(f) != dense_walsh(f) || moebius(f) != dense_moebius(f)) return false;
    }
  }
  for (std::size_t n = 0; n <= 12; ++n) {
    const PhaseFunction f = random_phase_function(rng, n);
    if (walsh_inverse(walsh(f)) != f || walsh(walsh_inverse(f)) != f) return false;
    if (moebius_inverse(moebius(f)) != f || moebius(moebius_inverse(f)) != f) return false;
  }
  return true;
}

bool compilation(Decomposition (*decompose)(const PhaseFunction&), std::uint64_t seed) {
  Rng rng(seed);
  for (int rep = 0; rep < 100; ++rep) {
    const PhaseFunction f = random_phase_function(rng, 1 + rep % 6);
    const Decomposition d = decompose(f);
    PhaseFunction sum(f.qubits());
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      sum[x] = d.constant;
      const BitVec v = BitVec::from_index(f.qubits(), x);
      for (const Term& t : d.terms.terms) {
        const Basis b = d.terms.kind == TermKind::kGadget ? Basis::kOmega : Basis::kXi;
        sum[x] += t.phase * basis_eval(b, t.support, v);
      }
    }
    if (sum != f) return false;
    if (f.qubits() <= 4) {
      const ComplexMatrix m = unit_phase(d.constant) * eval_diagram(terms_diagram(d.terms));
      if (!matrices_equal(m, diag_of(f), kTol)) return false;
    }
  }
  return true;
}

bool criterion_fourier() { return compilation(fourier_decompose, 5); }

bool criterion_moebius() {
  if (!compilation(moebius_decompose, 6)) return false;
  const Decomposition cz = moebius_decompose(PhaseFunction(2, {0, 0, 0, 1}));
  return cz.constant == Rational(0) && cz.terms.terms.size() == 1 &&
         cz.terms.terms[0].support == BitVec({1, 1}) && cz.terms.terms[0].phase == Rational(1);
}

bool criterion_symmetric() {
  Rng rng(7);
  for (std::size_t n = 0; n <= 10; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      const SymmetricPhaseFunction f = random_symmetric(rng, n);
      if (walsh(expand_symmetric(f)) != expand_symmetric(kravchuk_transform(f))) return false;
    }
  }
  for (long n = 0; n <= 12; ++n) {
    for (long k = 0; k <= n; ++k) {
      for (long m = 0; m <= n; ++m) {
        if (choose(n, m) * kravchuk(n, k, m) != choose(n, k) * kravchuk(n, m, k)) return false;
      }
      for (long l = 0; l <= n; ++l) {
        BigInt sum = 0;
        for (long m = 0; m <= n; ++m) sum += choose(n, m) * kravchuk(n, k, m) * kravchuk(n, l, m);
        const BigInt want = k == l ? BigInt(BigInt(1) << static_cast<unsigned>(n)) * choose(n, k) : BigInt(0);
        if (sum != want) return false;
      }
    }
  }
  return true;
}

bool criterion_hyperedge() {
  for (const char* beta : {"1", "3/4", "-5/8"}) {
    for (std::size_t n = 0; n <= 12; ++n) {
      SymmetricPhaseFunction h(n);
      h[n] = q(beta);
      const SymmetricPhaseFunction t = kravchuk_transform(h);
      const Rational scale = q(beta) / Rational(BigInt(BigInt(1) << static_cast<unsigned>(n)));
      for (std::size_t m = 0; m <= n; ++m) {
        if (t[m] != (m % 2 == 0 ? scale : -scale)) return false;
      }
    }
  }
  return true;
}

bool criterion_munson() {
  const SymmetricPhaseFunction g(3, {0, q("1/4"), 0, q("1/4")});
  const SymmetricPhaseFunction t = binomial_transform(g);
  if (t[1] != q("1/4") || t[2] != q("-1/2") || t[3] != Rational(1)) return false;
  for (std::size_t n = 1; n <= 16; ++n) {
    if (!munson_check(q("1/4"), n).is_identity) return false;
  }
  return true;
}

bool criterion_nest() {
  for (std::size_t n = 4; n <= 64; ++n) {
    const SymmetricPhaseFunction s = family_de2020fast(n);
    const NestReport r = nest_check(s);
    if (!r.is_identity) return false;
    if (n <= 24) {
      for (std::size_t m = 0; m <= n; ++m) {
        if (closed_form_S(static_cast<long>(n), static_cast<long>(m)) != r.s_values[m]) return false;
      }
    }
    if (n <= 16 && !nest_numeric(s)) return false;
  }
  for (long l = 0; l < 12; ++l) {
    if (!(closed_form_S_prime(l) + q("1/8")).is_even_integer()) return false;
  }
  return !nest_check(SymmetricPhaseFunction(3, {0, q("1/2"), 0, 0})).is_identity;
}

bool criterion_graphs() {
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      std::vector<Graph::Edge> edges;
      std::size_t e = 0;
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j, ++e) {
          if ((mask >> e) & 1U) edges.emplace_back(i, j);
        }
      }
      const Graph g(n, edges);
      for (std::size_t v = 1; v <= n; ++v) {
        if (!pauli_push_check(g, v)) return false;
        if (n <= 4 && !verify_local_comp(g, v, kTol).holds) return false;
      }
    }
  }
  Rng rng(11);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = 6 + draw(rng, 3);
    if (!pauli_push_check(random_graph(rng, n), 1 + draw(rng, n))) return false;
  }
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 2 + draw(rng, 6);
    const LocalCompResult r = verify_local_comp(random_graph(rng, n), 1 + draw(rng, n), kTol);
    if (!r.holds || r.fidelity < 1 - kTol) return false;
  }
  for (std::size_t n = 2; n <= 7; ++n) {
    for (std::size_t u = 1; u <= n; ++u) {
      if (!verify_local_comp(Graph::star(n), u, kTol).holds) return false;
    }
  }
  return true;
}

bool criterion_cnot() {
  Rng rng(12);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 1 + rep % 8;
    const F2Matrix a = random_invertible(rng, n);
    const auto steps = cnot_synthesize(a);
    if (!(replay_transvections(n, steps) == a)) return false;
    const double delta = max_abs_diff(eval_diagram(zx::red_arrow(a)),
                                      eval_diagram(cnot_circuit_diagram(n, steps)));
    if (delta > kTol) return false;
  }
  return true;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<bool()> check;
};

}  // namespace
}  // namespace szx

int main() {
  using namespace szx;
  const std::vector<Criterion> criteria = {
      {1, "controlled-Z semantics", 1, criterion_cz},
      {2, "well-tempered scalar cancellation", 10, criterion_scalar},
      {3, "rewrite rule suite", 0, criterion_rules},
      {4, "transform exactness", 0, criterion_transforms},
      {5, "Fourier compilation", 0, criterion_fourier},
      {6, "Moebius compilation", 0, criterion_moebius},
      {7, "symmetric consistency", 0, criterion_symmetric},
      {8, "hyperedge transform", 0, criterion_hyperedge},
      {9, "Munson identity", 0, criterion_munson},
      {10, "de2020fast spider nest", 30, criterion_nest},
      {11, "graph theorems", 0, criterion_graphs},
      {12, "CNOT synthesis", 0, criterion_cnot},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = c.check();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      ok = false;
      note += " (over the time budget)";
    }
    std::printf("%s criterion %2d: %s [%.3f s]%s\n", ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                note.c_str());
    failures += ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
