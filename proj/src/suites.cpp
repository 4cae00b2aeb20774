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

#include "szx/suites.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "szx/diagrams.hpp"
#include "szx/errors.hpp"
#include "szx/random.hpp"
#include "szx/rules.hpp"

namespace szx {

namespace {

// Largest phase-function size evaluated through diag_diagram.
constexpr std::size_t kMaxDiagQubits = 4;

struct Outcome {
  std::size_t cases = 0;
  bool holds = true;
  double max_delta = 0.0;

  void add(bool ok, double delta) {
    ++cases;
    holds = holds && ok;
    max_delta = std::max(max_delta, delta);
  }
};

using Check = std::function<Outcome(Rng&, const SuiteOptions&)>;

struct Entry {
  std::string name;
  Check check;
};

// FNV-1a, so each check draws from its own stream.
std::uint64_t stream_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return seed ^ h;
}

// A registry rule driven by a case generator.
Entry rule_entry(std::string id,
                 std::function<std::vector<Json>(Rng&, std::size_t)> cases) {
  return {id, [id, cases](Rng& rng, const SuiteOptions& o) {
            Outcome out;
            for (const auto& params : cases(rng, o.sizes)) {
              const RuleCheck c = verify_rule(id, params, o.tol);
              out.add(c.holds, c.max_delta);
            }
            return out;
          }};
}

std::vector<Json> function_cases(Rng& rng, std::size_t sizes, bool with_input) {
  std::vector<Json> out;
  for (std::size_t n = 0; n <= sizes; ++n) {
    for (std::size_t m = 0; m <= sizes; ++m) {
      Json p{{"f", to_json(random_boolean_function(rng, n, m))}};
      if (with_input) p["x"] = random_bitvec(rng, n).str();
      out.push_back(std::move(p));
    }
  }
  const std::size_t k = std::min<std::size_t>(sizes, 2);
  Json p{{"f", {{"set_function", k}}}};
  if (with_input) p["x"] = random_bitvec(rng, k).str();
  out.push_back(std::move(p));
  return out;
}

template <class S>
std::vector<Json> matrix_cases(Rng& rng, std::size_t sizes) {
  std::vector<Json> out;
  for (std::size_t r = 1; r <= sizes; ++r) {
    for (std::size_t c = 1; c <= sizes; ++c) {
      BinaryMatrix<S> a(r, c);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) a.set(i, j, draw(rng, 2) == 1);
      }
      out.push_back({{"A", to_json(a)}});
    }
  }
  return out;
}

// Pairs sharing columns (stack_rows) or rows (otherwise).
template <class S>
std::vector<Json> pair_cases(Rng& rng, std::size_t sizes, bool stack_rows) {
  const auto random = [&](std::size_t r, std::size_t c) {
    BinaryMatrix<S> a(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) a.set(i, j, draw(rng, 2) == 1);
    }
    return to_json(a);
  };
  std::vector<Json> out;
  for (std::size_t shared = 1; shared <= sizes; ++shared) {
    for (std::size_t a = 1; a <= sizes; ++a) {
      for (std::size_t b = 1; b <= sizes; ++b) {
        if (stack_rows) {
          out.push_back({{"A", random(a, shared)}, {"B", random(b, shared)}});
        } else {
          out.push_back({{"A", random(shared, a)}, {"B", random(shared, b)}});
        }
      }
    }
  }
  return out;
}

std::vector<Json> compose_cases(Rng& rng, std::size_t sizes) {
  std::vector<Json> out;
  for (std::size_t n = 1; n <= sizes; ++n) {
    for (std::size_t p = 1; p <= sizes; ++p) {
      for (std::size_t m = 1; m <= sizes; ++m) {
        out.push_back({{"A", to_json(random_f2_matrix(rng, m, p))},
                       {"B", to_json(random_f2_matrix(rng, p, n))}});
      }
    }
  }
  return out;
}

std::vector<Json> fusion_cases(Rng& rng, std::size_t sizes) {
  std::vector<Json> out;
  for (std::size_t k = 1; k <= sizes; ++k) {
    for (std::size_t in = 0; in <= 1; ++in) {
      for (std::size_t legs = 1; legs <= 2; ++legs) {
        for (std::size_t j = 0; j <= 2; ++j) {
          std::vector<Rational> a;
          std::vector<Rational> b;
          for (std::size_t i = 0; i < k; ++i) {
            a.push_back(random_dyadic(rng));
            b.push_back(random_dyadic(rng));
          }
          out.push_back({{"k", k}, {"in", in}, {"out", legs}, {"j", j},
                         {"a", to_json(a)}, {"b", to_json(b)}});
        }
      }
    }
  }
  return out;
}

std::vector<Json> register_pair_cases(std::size_t sizes) {
  std::vector<Json> out;
  for (std::size_t n = 0; n <= sizes; ++n) {
    for (std::size_t m = 0; m <= sizes; ++m) out.push_back({{"n", n}, {"m", m}});
  }
  return out;
}

std::vector<Json> phase_cases(Rng& rng, std::size_t sizes, bool pair) {
  std::vector<Json> out;
  for (std::size_t n = 1; n <= std::min(sizes, kMaxDiagQubits); ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      Json p{{"f", to_json(random_phase_function(rng, n))}};
      if (pair) p["g"] = to_json(random_phase_function(rng, n));
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<Json> term_cases(Rng& rng, std::size_t sizes, bool gadget) {
  std::vector<Json> out;
  for (std::size_t n = 1; n <= sizes; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      const BitVec s = gadget ? random_nonzero_bitvec(rng, n) : random_bitvec(rng, n);
      out.push_back({{"support", s.str()}, {"phase", random_dyadic(rng).str()}});
    }
  }
  return out;
}

std::vector<Json> stack_cases(Rng& rng, std::size_t sizes) {
  std::vector<Json> out;
  for (std::size_t n = 1; n <= std::min<std::size_t>(sizes, 3); ++n) {
    for (bool gadget : {true, false}) {
      TermList t{gadget ? TermKind::kGadget : TermKind::kHyperedge, n, {}};
      const std::size_t count = 1 + draw(rng, 4);
      for (std::size_t i = 0; i < count; ++i) {
        t.terms.push_back({gadget ? random_nonzero_bitvec(rng, n) : random_bitvec(rng, n),
                           random_dyadic(rng)});
      }
      out.push_back(to_json(t));
    }
  }
  return out;
}

std::vector<Json> graph_cases(Rng& rng, std::size_t sizes, bool pair) {
  std::vector<Json> out;
  for (std::size_t n = 1; n <= sizes + 1; ++n) {
    Json complete{{"graph", to_json(Graph::complete(n))}};
    if (pair) complete["other"] = to_json(Graph::star(n));
    out.push_back(std::move(complete));
    for (int rep = 0; rep < 3; ++rep) {
      Json p{{"graph", to_json(random_graph(rng, n))}};
      if (pair) p["other"] = to_json(random_graph(rng, n));
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<Json> cnot_cases(Rng& rng, std::size_t sizes) {
  std::vector<Json> out;
  for (std::size_t n = 1; n <= sizes + 1; ++n) {
    for (int rep = 0; rep < 3; ++rep) out.push_back({{"A", to_json(random_invertible(rng, n))}});
  }
  return out;
}

// Exact reconstruction in R plus tensor confirmation of the compiled terms.
Outcome compile_check(Rng& rng, const SuiteOptions& o, bool fourier) {
  Outcome out;
  for (std::size_t n = 1; n <= o.sizes; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      const PhaseFunction f = random_phase_function(rng, n);
      const Decomposition d = fourier ? fourier_decompose(f) : moebius_decompose(f);
      const bool exact = reconstruct(d) == f;
      double delta = 0.0;
      if (n <= kMaxDiagQubits) {
        const ComplexMatrix compiled = unit_phase(d.constant) * eval_diagram(terms_diagram(d.terms));
        delta = max_abs_diff(compiled, phase_matrix(f));
      }
      out.add(exact && delta <= o.tol, delta);
    }
  }
  return out;
}

// Every graph on n vertices, by edge mask.
template <class F>
void for_each_graph(std::size_t n, F&& visit) {
  std::vector<Graph::Edge> all;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) all.emplace_back(i, j);
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    std::vector<Graph::Edge> edges;
    for (std::size_t e = 0; e < all.size(); ++e) {
      if ((mask >> e) & 1U) edges.push_back(all[e]);
    }
    visit(Graph(n, edges));
  }
}

Outcome pauli_push(Rng& rng, const SuiteOptions& o) {
  Outcome out;
  const std::size_t exhaustive = std::min<std::size_t>(o.sizes, 5);
  for (std::size_t n = 1; n <= exhaustive; ++n) {
    for_each_graph(n, [&](const Graph& g) {
      for (std::size_t v = 1; v <= n; ++v) out.add(pauli_push_check(g, v), 0.0);
    });
  }
  for (std::size_t n = exhaustive + 1; n <= std::min<std::size_t>(o.sizes, 8); ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const Graph g = random_graph(rng, n);
      out.add(pauli_push_check(g, 1 + draw(rng, n)), 0.0);
    }
  }
  return out;
}

Outcome local_comp(Rng& rng, const SuiteOptions& o) {
  Outcome out;
  const auto record = [&](const Graph& g, std::size_t u) {
    const LocalCompResult r = verify_local_comp(g, u, o.tol);
    out.add(r.holds, 1.0 - r.fidelity);
  };
  const std::size_t exhaustive = std::min<std::size_t>(o.sizes, 5);
  for (std::size_t n = 1; n <= exhaustive; ++n) {
    for_each_graph(n, [&](const Graph& g) {
      for (std::size_t u = 1; u <= n; ++u) record(g, u);
    });
  }
  for (std::size_t n = exhaustive + 1; n <= std::min<std::size_t>(o.sizes, 12); ++n) {
    record(Graph::star(n), 1);
    for (int rep = 0; rep < 25; ++rep) record(random_graph(rng, n), 1 + draw(rng, n));
  }
  return out;
}

std::vector<Entry> arrows_suite() {
  return {
      rule_entry("farrow-apply", [](Rng& r, std::size_t s) { return function_cases(r, s, true); }),
      rule_entry("farrow-erase", [](Rng& r, std::size_t s) { return function_cases(r, s, false); }),
      rule_entry("farrow-copy", [](Rng& r, std::size_t s) { return function_cases(r, s, false); }),
      rule_entry("farrow-dagger", [](Rng& r, std::size_t s) { return function_cases(r, s, false); }),
      rule_entry("red-arrow-erase", matrix_cases<GF2>),
      rule_entry("red-arrow-copy", matrix_cases<GF2>),
      rule_entry("red-arrow-rows", [](Rng& r, std::size_t s) { return pair_cases<GF2>(r, s, true); }),
      rule_entry("red-arrow-cols", [](Rng& r, std::size_t s) { return pair_cases<GF2>(r, s, false); }),
      rule_entry("red-arrow-compose", compose_cases),
      rule_entry("yellow-arrow-erase", matrix_cases<Boolean>),
      rule_entry("yellow-arrow-copy", matrix_cases<Boolean>),
      rule_entry("yellow-arrow-rows",
                 [](Rng& r, std::size_t s) { return pair_cases<Boolean>(r, s, true); }),
      rule_entry("yellow-arrow-cols",
                 [](Rng& r, std::size_t s) { return pair_cases<Boolean>(r, s, false); }),
      rule_entry("divider-gatherer", [](Rng&, std::size_t s) { return register_pair_cases(s); }),
      rule_entry("gatherer-divider", [](Rng&, std::size_t s) { return register_pair_cases(s); }),
      rule_entry("cnot-synthesis", cnot_cases),
  };
}

std::vector<Entry> spiders_suite() {
  return {
      rule_entry("green-fusion", fusion_cases),
      rule_entry("red-fusion", fusion_cases),
      rule_entry("diag-phase-form", [](Rng& r, std::size_t s) { return phase_cases(r, s, false); }),
      rule_entry("diag-unitary", [](Rng& r, std::size_t s) { return phase_cases(r, s, false); }),
      rule_entry("diag-compose", [](Rng& r, std::size_t s) { return phase_cases(r, s, true); }),
  };
}

std::vector<Entry> diagonal_suite() {
  return {
      rule_entry("diag-semantics", [](Rng& r, std::size_t s) { return phase_cases(r, s, false); }),
      rule_entry("gadget-semantics", [](Rng& r, std::size_t s) { return term_cases(r, s, true); }),
      rule_entry("hyperedge-semantics",
                 [](Rng& r, std::size_t s) { return term_cases(r, s, false); }),
      rule_entry("stack-form", stack_cases),
      {"fourier-compile", [](Rng& r, const SuiteOptions& o) { return compile_check(r, o, true); }},
      {"moebius-compile", [](Rng& r, const SuiteOptions& o) { return compile_check(r, o, false); }},
  };
}

std::vector<Entry> graph_suite() {
  return {
      rule_entry("graph-operator", [](Rng& r, std::size_t s) { return graph_cases(r, s, false); }),
      rule_entry("graph-compose", [](Rng& r, std::size_t s) { return graph_cases(r, s, true); }),
      {"pauli-push", pauli_push},
  };
}

std::vector<Entry> localcomp_suite() { return {{"local-comp", local_comp}}; }

std::vector<Entry> suite_entries(std::string_view name) {
  if (name == "arrows") return arrows_suite();
  if (name == "spiders") return spiders_suite();
  if (name == "diagonal") return diagonal_suite();
  if (name == "graph") return graph_suite();
  if (name == "localcomp") return localcomp_suite();
  if (name == "all") {
    std::vector<Entry> all;
    for (const auto& part : {"arrows", "spiders", "diagonal", "graph", "localcomp"}) {
      auto entries = suite_entries(part);
      all.insert(all.end(), entries.begin(), entries.end());
    }
    return all;
  }
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"arrows", "spiders", "diagonal",
                                                 "graph", "localcomp", "all"};
  return names;
}

Json run_suite(std::string_view name, const SuiteOptions& options) {
  if (options.sizes == 0) throw DomainError("suite sizes must be at least 1");
  const auto entries = suite_entries(name);
  Json results = Json::array();
  bool holds = true;
  for (const auto& entry : entries) {
    Rng rng(stream_seed(options.seed, entry.name));
    const Outcome o = entry.check(rng, options);
    holds = holds && o.holds;
    results.push_back(
        {{"rule", entry.name}, {"cases", o.cases}, {"holds", o.holds}, {"max_delta", o.max_delta}});
  }
  return {{"suite", name},
          {"sizes", options.sizes},
          {"seed", options.seed},
          {"tol", options.tol},
          {"holds", holds},
          {"results", results}};
}

}  // namespace szx
