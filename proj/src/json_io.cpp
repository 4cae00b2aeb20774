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

#include "szx/json_io.hpp"

#include <fstream>
#include <sstream>
#include <type_traits>
#include <utility>

#include "szx/diagrams.hpp"
#include "szx/errors.hpp"

namespace szx {

namespace {

// Runs `body`, turning library-level JSON failures into ParseError.
template <class F>
auto guarded(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

const Json& unwrap_matrix(const Json& j) {
  if (j.is_object()) return j.at("matrix");
  return j;
}

template <class S>
BinaryMatrix<S> binary_matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    const Json& rows = unwrap_matrix(j);
    if (!rows.is_array()) throw ParseError("matrix must be an array of rows");
    std::vector<std::vector<int>> data;
    for (const auto& row : rows) {
      if (!row.is_array()) throw ParseError("matrix row must be an array");
      std::vector<int> r;
      for (const auto& e : row) {
        if (!e.is_number_integer() || (e.get<int>() != 0 && e.get<int>() != 1)) {
          throw ParseError("matrix entries must be 0 or 1");
        }
        r.push_back(e.get<int>());
      }
      data.push_back(std::move(r));
    }
    for (const auto& r : data) {
      if (r.size() != data.front().size()) throw ParseError("ragged matrix rows");
    }
    return BinaryMatrix<S>::from_rows(data);
  });
}

std::vector<std::size_t> vertex_list(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of vertices");
  std::vector<std::size_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 1) {
      throw ParseError("vertices are positive integers");
    }
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

std::vector<Rational> phases_field(const Json& j, std::size_t k) {
  if (!j.contains("phases")) return std::vector<Rational>(k);
  return rationals_from_json(j.at("phases"));
}

Diagram generator_from_json(const Json& j) {
  const std::string node = j.at("node").get<std::string>();
  if (node == "wire") {
    if (j.contains("registers")) {
      std::vector<std::size_t> regs;
      for (const auto& r : j.at("registers")) regs.push_back(r.get<std::size_t>());
      return zx::wire(WireType(regs));
    }
    return zx::wire(size_field(j, "n"));
  }
  if (node == "swap") return zx::swap(size_field(j, "n"), size_field(j, "m"));
  if (node == "cup") return zx::cup(size_field(j, "n"));
  if (node == "cap") return zx::cap(size_field(j, "n"));
  if (node == "divider") return zx::divider(size_field(j, "n"), size_field(j, "m"));
  if (node == "gatherer") return zx::gatherer(size_field(j, "n"), size_field(j, "m"));
  if (node == "green" || node == "red" || node == "h") {
    const std::size_t k = size_field(j, "k");
    const std::size_t in = size_field(j, "in");
    const std::size_t out = size_field(j, "out");
    auto phases = phases_field(j, k);
    if (phases.size() != k) throw ParseError("phase vector length must equal k");
    if (node == "green") return zx::green(k, in, out, std::move(phases));
    if (node == "red") return zx::red(k, in, out, std::move(phases));
    return zx::harvestman(k, in, out, std::move(phases));
  }
  if (node == "farrow") {
    Diagram d = zx::function_arrow(boolean_function_from_json(j));
    return j.value("adjoint", false) ? dagger(d) : d;
  }
  if (node == "redarrow") return zx::red_arrow(f2_matrix_from_json(j));
  if (node == "yellowarrow") return zx::yellow_arrow(bool_matrix_from_json(j));
  if (node == "diag") return diag_diagram(phase_function_from_json(j));
  if (node == "gadget") {
    return gadget_diagram(bitvec_from_json(j.at("support")), rational_from_json(j.at("phase")));
  }
  if (node == "hyperedge") {
    return hyperedge_diagram(bitvec_from_json(j.at("support")),
                             rational_from_json(j.at("phase")));
  }
  if (node == "graph") return graph_operator_diagram(half_adjacency(graph_from_json(j)));
  throw ParseError("unknown diagram node '" + node + "'");
}

Diagram diagram_list(const Json& parts, bool sequential) {
  if (!parts.is_array() || parts.empty()) {
    throw ParseError(std::string(sequential ? "seq" : "par") + " needs a nonempty array");
  }
  std::vector<Diagram> ds;
  for (const auto& p : parts) ds.push_back(diagram_from_json(p));
  return sequential ? zx::seq(ds) : zx::par(ds);
}

Json spider_json(const char* node, std::size_t k, std::size_t in, std::size_t out,
                 const std::vector<Rational>& phases) {
  return {{"node", node}, {"k", k}, {"in", in}, {"out", out}, {"phases", to_json(phases)}};
}

Json generator_to_json(const Generator& g) {
  return std::visit(
      [](const auto& gen) -> Json {
        using T = std::decay_t<decltype(gen)>;
        if constexpr (std::is_same_v<T, WireGen>) {
          return {{"node", "wire"}, {"n", gen.n}};
        } else if constexpr (std::is_same_v<T, SwapGen>) {
          return {{"node", "swap"}, {"n", gen.n}, {"m", gen.m}};
        } else if constexpr (std::is_same_v<T, CupGen>) {
          return {{"node", "cup"}, {"n", gen.n}};
        } else if constexpr (std::is_same_v<T, CapGen>) {
          return {{"node", "cap"}, {"n", gen.n}};
        } else if constexpr (std::is_same_v<T, DividerGen>) {
          return {{"node", "divider"}, {"n", gen.n}, {"m", gen.m}};
        } else if constexpr (std::is_same_v<T, GathererGen>) {
          return {{"node", "gatherer"}, {"n", gen.n}, {"m", gen.m}};
        } else if constexpr (std::is_same_v<T, SpiderGen>) {
          return spider_json(gen.color == SpiderColor::kGreen ? "green" : "red", gen.k, gen.in,
                             gen.out, gen.phases);
        } else if constexpr (std::is_same_v<T, HarvestmanGen>) {
          return spider_json("h", gen.k, gen.in, gen.out, gen.phases);
        } else {
          Json j = to_json(gen.f);
          j["node"] = "farrow";
          if (gen.adjoint) j["adjoint"] = true;
          return j;
        }
      },
      g);
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("rational must be a string \"p/q\" or an integer");
}

Json to_json(const Rational& r) { return r.str(); }

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

Json to_json(const std::vector<Rational>& values) {
  Json j = Json::array();
  for (const auto& v : values) j.push_back(v.str());
  return j;
}

BitVec bitvec_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("bit vector must be a string of 0/1");
  return BitVec::parse(j.get<std::string>());
}

Json to_json(const BitVec& v) { return v.str(); }

F2Matrix f2_matrix_from_json(const Json& j) { return binary_matrix_from_json<GF2>(j); }
BoolMatrix bool_matrix_from_json(const Json& j) { return binary_matrix_from_json<Boolean>(j); }

BooleanFunction boolean_function_from_json(const Json& j) {
  return guarded("boolean function", [&] {
    if (j.contains("set_function")) {
      return BooleanFunction::set_function(size_field(j, "set_function"));
    }
    const std::size_t n = size_field(j, "n");
    const std::size_t m = size_field(j, "m");
    std::vector<std::uint64_t> table;
    for (const auto& v : j.at("table")) {
      if (v.is_string()) {
        const BitVec bits = BitVec::parse(v.get<std::string>());
        if (bits.size() != m) throw ParseError("table entry width differs from m");
        table.push_back(m == 0 ? 0 : bits.to_index());
      } else if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)) {
        table.push_back(v.get<std::uint64_t>());
      } else {
        throw ParseError("table entries are bit strings or non-negative integers");
      }
    }
    try {
      return BooleanFunction(n, m, std::move(table));
    } catch (const DimensionError& e) {
      throw ParseError(e.what());
    }
  });
}

Json to_json(const BooleanFunction& f) {
  return {{"n", f.in_bits()}, {"m", f.out_bits()}, {"table", f.table()}};
}

PhaseFunction phase_function_from_json(const Json& j) {
  return guarded("phase function", [&] {
    const std::size_t n = size_field(j, "n");
    if (n > kMaxPhaseQubits) throw ParseError("phase function on too many qubits");
    auto values = rationals_from_json(j.at("values"));
    if (values.size() != (std::size_t{1} << n)) throw ParseError("expected 2^n values");
    return PhaseFunction(n, std::move(values));
  });
}

Json to_json(const PhaseFunction& f) {
  return {{"n", f.qubits()}, {"values", to_json(f.values())}};
}

SymmetricPhaseFunction symmetric_from_json(const Json& j) {
  return guarded("symmetric phase function", [&] {
    const std::size_t n = size_field(j, "n");
    auto values = rationals_from_json(j.at("by_weight"));
    if (values.size() != n + 1) throw ParseError("expected n + 1 weight classes");
    return SymmetricPhaseFunction(n, std::move(values));
  });
}

Json to_json(const SymmetricPhaseFunction& f) {
  return {{"n", f.qubits()}, {"by_weight", to_json(f.by_weight())}};
}

Graph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    const std::size_t n = size_field(j, "n");
    std::vector<Graph::Edge> edges;
    for (const auto& e : j.value("edges", Json::array())) {
      const auto v = vertex_list(e);
      if (v.size() != 2) throw ParseError("edges are vertex pairs");
      edges.emplace_back(v[0], v[1]);
    }
    return Graph(n, edges);
  });
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i, j});
  return {{"n", g.vertices()}, {"edges", edges}};
}

Hypergraph hypergraph_from_json(const Json& j) {
  return guarded("hypergraph", [&] {
    Hypergraph h;
    h.n = size_field(j, "n");
    for (const auto& e : j.value("hyperedges", Json::array())) {
      BitVec s(h.n);
      for (auto v : vertex_list(e)) {
        if (v > h.n) throw DomainError("hyperedge vertex outside 1..n");
        s.set(v - 1, true);
      }
      if (s.is_zero()) throw DomainError("hyperedges must be nonempty");
      h.hyperedges.insert(s);
    }
    return h;
  });
}

Json to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (const auto& s : h.hyperedges) {
    Json e = Json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i]) e.push_back(i + 1);
    }
    edges.push_back(e);
  }
  return {{"n", h.n}, {"hyperedges", edges}};
}

TermList term_list_from_json(const Json& j) {
  return guarded("term list", [&] {
    TermList t;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "gadget") {
      t.kind = TermKind::kGadget;
    } else if (kind == "hyperedge") {
      t.kind = TermKind::kHyperedge;
    } else {
      throw ParseError("term kind must be 'gadget' or 'hyperedge'");
    }
    for (const auto& term : j.at("terms")) {
      t.terms.push_back({bitvec_from_json(term.at("support")),
                         rational_from_json(term.at("phase"))});
    }
    if (j.contains("n")) {
      t.n = size_field(j, "n");
    } else if (!t.terms.empty()) {
      t.n = t.terms.front().support.size();
    } else {
      throw ParseError("term list needs 'n' when empty");
    }
    for (const auto& term : t.terms) {
      if (term.support.size() != t.n) throw ParseError("term support has the wrong length");
    }
    return t;
  });
}

Json to_json(const TermList& t) {
  Json terms = Json::array();
  for (const auto& term : t.terms) {
    terms.push_back({{"support", term.support.str()}, {"phase", term.phase.str()}});
  }
  return {{"kind", t.kind == TermKind::kGadget ? "gadget" : "hyperedge"},
          {"n", t.n},
          {"terms", terms}};
}

Json to_json(const Decomposition& d) {
  Json j = to_json(d.terms);
  j["constant"] = d.constant.str();
  return j;
}

Diagram diagram_from_json(const Json& j) {
  return guarded("diagram", [&] {
    if (!j.is_object()) throw ParseError("diagram must be an object");
    if (j.contains("seq")) return diagram_list(j.at("seq"), true);
    if (j.contains("par")) return diagram_list(j.at("par"), false);
    if (j.contains("dagger")) return dagger(diagram_from_json(j.at("dagger")));
    if (j.contains("node")) return generator_from_json(j);
    throw ParseError("diagram needs one of 'node', 'seq', 'par', 'dagger'");
  });
}

Json to_json(const Diagram& d) {
  if (d.is_generator()) return generator_to_json(d.generator());
  // Flatten chains of the same combinator into one list.
  const bool sequential = d.is_seq();
  std::vector<const Diagram*> stack{&d};
  Json parts = Json::array();
  while (!stack.empty()) {
    const Diagram* cur = stack.back();
    stack.pop_back();
    if (!cur->is_generator() && cur->is_seq() == sequential) {
      stack.push_back(&cur->rhs());
      stack.push_back(&cur->lhs());
    } else {
      parts.push_back(to_json(*cur));
    }
  }
  return {{sequential ? "seq" : "par", parts}};
}

Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      // Normalise -0.0 so reports are stable.
      const double re = m(i, k).real() + 0.0;
      const double im = m(i, k).imag() + 0.0;
      row.push_back({re, im});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix complex_matrix_from_json(const Json& j) {
  return guarded("complex matrix", [&] {
    const Json& rows = unwrap_matrix(j);
    if (!rows.is_array() || rows.empty()) throw ParseError("matrix must be a nonempty array");
    const std::size_t cols = rows.front().size();
    ComplexMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].is_array() || rows[i].size() != cols) throw ParseError("ragged matrix rows");
      for (std::size_t k = 0; k < cols; ++k) {
        const Json& e = rows[i][k];
        if (e.is_number()) {
          m(i, k) = Complex(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
          m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
        } else {
          throw ParseError("matrix entries are [re, im] pairs");
        }
      }
    }
    return m;
  });
}

Json to_json(const std::vector<TransvectionStep>& steps) {
  Json j = Json::array();
  for (const auto& s : steps) j.push_back({{"source", s.source}, {"target", s.target}});
  return j;
}

Json to_json(const NestReport& r) {
  return {{"n", r.n},
          {"is_identity", r.is_identity},
          {"S", to_json(r.s_values)},
          {"residues", to_json(r.residues)},
          {"global_phase_exponent", r.global_phase_exponent.str()}};
}

Json to_json(const MunsonReport& r) {
  return {{"n", r.n},
          {"alpha", r.alpha.str()},
          {"is_identity", r.is_identity},
          {"G_tilde", to_json(r.g_tilde)},
          {"residues", to_json(r.residues)},
          {"residual_weights", r.residual_weights}};
}

}  // namespace szx
