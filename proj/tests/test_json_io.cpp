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

#include "szx/diagrams.hpp"
#include "szx/errors.hpp"
#include "szx/json_io.hpp"
#include "szx/random.hpp"
#include "szx/suites.hpp"

namespace szx {
namespace {

constexpr double kTol = 1e-9;

TEST(JsonIo, Rationals) {
  EXPECT_EQ(rational_from_json("3/4"), Rational::parse("3/4"));
  EXPECT_EQ(rational_from_json(-2), Rational(-2));
  EXPECT_EQ(to_json(Rational::parse("-6/8")), Json("-3/4"));
  EXPECT_THROW(rational_from_json("1/0"), ParseError);
  EXPECT_THROW(rational_from_json(0.5), ParseError);
  EXPECT_THROW(rational_from_json("x"), ParseError);
}

TEST(JsonIo, Matrices) {
  const F2Matrix a = f2_matrix_from_json(parse_json("[[1,0,1],[0,1,1]]"));
  EXPECT_EQ(a, (F2Matrix{{1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(to_json(a), parse_json("[[1,0,1],[0,1,1]]"));
  EXPECT_EQ(f2_matrix_from_json(parse_json(R"({"matrix": [[1]]})")), F2Matrix{{1}});
  EXPECT_THROW(f2_matrix_from_json(parse_json("[[1,0],[1]]")), ParseError);
  EXPECT_THROW(f2_matrix_from_json(parse_json("[[2]]")), ParseError);
}

TEST(JsonIo, FunctionsRoundTrip) {
  Rng rng(51);
  const BooleanFunction f = random_boolean_function(rng, 3, 2);
  EXPECT_EQ(boolean_function_from_json(to_json(f)), f);
  const BooleanFunction g = boolean_function_from_json(parse_json(R"({"n":1,"m":2,"table":["00","11"]})"));
  EXPECT_EQ(g(1), 3u);
  const PhaseFunction p = random_phase_function(rng, 3);
  EXPECT_EQ(phase_function_from_json(to_json(p)), p);
  const SymmetricPhaseFunction s = random_symmetric(rng, 4);
  EXPECT_EQ(symmetric_from_json(to_json(s)), s);
  EXPECT_THROW(phase_function_from_json(parse_json(R"({"n":2,"values":["0"]})")), Error);
  EXPECT_THROW(symmetric_from_json(parse_json(R"({"n":2,"by_weight":["0","1"]})")), Error);
}

TEST(JsonIo, GraphsAndTerms) {
  const Graph g = graph_from_json(parse_json(R"({"n":3,"edges":[[1,2],[2,3]]})"));
  EXPECT_EQ(g, Graph(3, {{1, 2}, {2, 3}}));
  EXPECT_EQ(graph_from_json(to_json(g)), g);
  EXPECT_THROW(graph_from_json(parse_json(R"({"n":3,"edges":[[1,1]]})")), DomainError);
  const Hypergraph h = hypergraph_from_json(parse_json(R"({"n":3,"hyperedges":[[1,2,3],[2]]})"));
  EXPECT_EQ(h.hyperedges.size(), 2u);
  EXPECT_TRUE(h.hyperedges.count(BitVec{0, 1, 0}));
  const TermList t = term_list_from_json(
      parse_json(R"({"kind":"gadget","n":4,"terms":[{"support":"0110","phase":"-1/2"}]})"));
  EXPECT_EQ(t.terms.size(), 1u);
  EXPECT_EQ(t.terms[0].support, (BitVec{0, 1, 1, 0}));
  EXPECT_EQ(term_list_from_json(to_json(t)), t);
  EXPECT_THROW(term_list_from_json(parse_json(R"({"kind":"blob","n":1,"terms":[]})")), ParseError);
  EXPECT_THROW(term_list_from_json(parse_json(R"({"kind":"gadget","n":2,"terms":[{"support":"1","phase":"1"}]})")),
               Error);
}

TEST(JsonIo, DiagramsRoundTrip) {
  const Json cz = parse_json(R"({"node":"graph","n":2,"edges":[[1,2]]})");
  EXPECT_TRUE(matrices_equal(eval_diagram(diagram_from_json(cz)),
                             ComplexMatrix::diagonal({1.0, 1.0, 1.0, -1.0}), kTol));
  const Json nested = parse_json(R"({"seq":[
      {"node":"divider","n":1,"m":1},
      {"par":[{"node":"green","k":1,"in":1,"out":1,"phases":["1/2"]},{"node":"h","k":1,"in":1,"out":1}]},
      {"dagger":{"node":"divider","n":1,"m":1}}]})");
  const Diagram d = diagram_from_json(nested);
  EXPECT_EQ(d.domain(), (WireType{2}));
  const Diagram again = diagram_from_json(to_json(d));
  EXPECT_EQ(max_abs_diff(eval_diagram(d), eval_diagram(again)), 0.0);
  const Json f = parse_json(R"({"node":"farrow","n":1,"m":2,"table":[0,3],"adjoint":true})");
  EXPECT_EQ(diagram_from_json(f).domain(), (WireType{2}));
}

TEST(JsonIo, DiagramErrors) {
  EXPECT_THROW(diagram_from_json(parse_json(R"({"node":"blob"})")), ParseError);
  EXPECT_THROW(diagram_from_json(parse_json(R"({"node":"green","k":1})")), ParseError);
  EXPECT_THROW(diagram_from_json(parse_json(R"({"node":"green","k":2,"in":1,"out":1,"phases":["1"]})")),
               ParseError);
  EXPECT_THROW(diagram_from_json(parse_json(R"({"seq":[]})")), ParseError);
  EXPECT_THROW(diagram_from_json(parse_json(R"({"seq":[{"node":"wire","n":1},{"node":"wire","n":2}]})")),
               TypeMismatchError);
  EXPECT_THROW(parse_json("{"), ParseError);
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), ParseError);
}

TEST(JsonIo, ComplexMatrices) {
  ComplexMatrix m(1, 2);
  m(0, 0) = {0.5, -0.0};
  m(0, 1) = {0.0, 1.0};
  const Json j = to_json(m);
  EXPECT_EQ(j, parse_json("[[[0.5,0.0],[0.0,1.0]]]"));
  EXPECT_FALSE(std::signbit(j[0][0][1].get<double>()));
  EXPECT_EQ(max_abs_diff(complex_matrix_from_json(j), m), 0.0);
  EXPECT_THROW(complex_matrix_from_json(parse_json("[[[1]]]")), ParseError);
}

TEST(JsonIo, Reports) {
  const Json steps = to_json(std::vector<TransvectionStep>{{2, 1}});
  EXPECT_EQ(steps, parse_json(R"([{"source":2,"target":1}])"));
  const Json nest = to_json(nest_check(family_de2020fast(4)));
  EXPECT_EQ(nest["global_phase_exponent"], Json("1/8"));
  EXPECT_EQ(nest["S"].size(), 5u);
  EXPECT_TRUE(nest["is_identity"].get<bool>());
}

TEST(Suites, AllHoldAtDefaultSizes) {
  for (const auto& name : suite_names()) {
    const Json report = run_suite(name);
    EXPECT_TRUE(report["holds"].get<bool>()) << report.dump(2);
    for (const auto& r : report["results"]) {
      EXPECT_GT(r["cases"].get<std::size_t>(), 0u) << r["rule"];
      EXPECT_LE(r["max_delta"].get<double>(), 1e-9) << r["rule"];
    }
  }
}

TEST(Suites, SeededRunsAreReproducible) {
  EXPECT_EQ(run_suite("arrows", {2, 7, 1e-9}), run_suite("arrows", {2, 7, 1e-9}));
  EXPECT_THROW(run_suite("bogus"), DomainError);
  EXPECT_THROW(run_suite("arrows", {0, 0, 1e-9}), DomainError);
}

TEST(Suites, ZeroToleranceStillReportsDeltas) {
  const Json report = run_suite("graph", {2, 0, 0.0});
  for (const auto& r : report["results"]) {
    EXPECT_EQ(r["holds"].get<bool>(), r["max_delta"].get<double>() == 0.0) << r["rule"];
  }
}

}  // namespace
}  // namespace szx
