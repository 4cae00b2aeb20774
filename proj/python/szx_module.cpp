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

// Low-level bindings. Structured values cross the boundary as JSON text; the
// `szx` package converts them to and from Python objects.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "szx/diagonal_gates.hpp"
#include "szx/diagrams.hpp"
#include "szx/errors.hpp"
#include "szx/json_io.hpp"
#include "szx/rules.hpp"
#include "szx/spider_nest.hpp"
#include "szx/suites.hpp"

namespace py = pybind11;

namespace szx {
namespace {

py::array_t<std::complex<double>> to_array(const ComplexMatrix& m) {
  py::array_t<std::complex<double>> out({m.rows(), m.cols()});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) view(i, j) = m(i, j);
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace
}  // namespace szx

PYBIND11_MODULE(_core, m) {
  using namespace szx;
  m.doc() = "Scalable ZX semantics, diagonal gate compilation and spider-nest certificates";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<TypeMismatchError>(m, "TypeMismatchError", base.ptr());
  py::register_exception<SizeLimitError>(m, "SizeLimitError", base.ptr());
  py::register_exception<NotInvertibleError>(m, "NotInvertibleError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());

  m.def(
      "eval_diagram",
      [](const std::string& diagram, std::size_t max_wire_qubits) {
        EvalOptions options;
        options.max_wire_qubits = max_wire_qubits;
        return to_array(eval_diagram(diagram_from_json(parse_json(diagram)), options));
      },
      py::arg("diagram"), py::arg("max_wire_qubits") = EvalOptions{}.max_wire_qubits,
      "Matrix of a diagram given as JSON text.");
  m.def(
      "diagram_type",
      [](const std::string& diagram) {
        const Diagram d = diagram_from_json(parse_json(diagram));
        return py::make_tuple(d.domain().registers(), d.codomain().registers());
      },
      py::arg("diagram"), "Domain and codomain register sizes.");

  m.def("rule_ids", &rule_ids);
  m.def(
      "verify_rule",
      [](const std::string& id, const std::string& params, double tol) {
        const RuleCheck c = verify_rule(id, parse_json(params), tol);
        return py::make_tuple(c.holds, c.max_delta);
      },
      py::arg("id"), py::arg("params"), py::arg("tol") = 1e-9, "(holds, max_delta)");
  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, std::size_t sizes, std::uint64_t seed, double tol) {
        return dump(run_suite(name, {sizes, seed, tol}));
      },
      py::arg("name"), py::arg("sizes") = 3, py::arg("seed") = 0, py::arg("tol") = 1e-9);

  m.def(
      "decompose",
      [](const std::string& phasefn, const std::string& transform) {
        const PhaseFunction f = phase_function_from_json(parse_json(phasefn));
        if (transform == "walsh") return dump(to_json(fourier_decompose(f)));
        if (transform == "moebius") return dump(to_json(moebius_decompose(f)));
        throw DomainError("transform must be walsh or moebius");
      },
      py::arg("phasefn"), py::arg("transform") = "walsh");
  m.def(
      "walsh",
      [](const std::string& f) { return dump(to_json(walsh(phase_function_from_json(parse_json(f))))); },
      py::arg("phasefn"));
  m.def(
      "moebius",
      [](const std::string& f) { return dump(to_json(moebius(phase_function_from_json(parse_json(f))))); },
      py::arg("phasefn"));
  m.def(
      "kravchuk_transform",
      [](const std::string& f) {
        return dump(to_json(kravchuk_transform(symmetric_from_json(parse_json(f)))));
      },
      py::arg("symmetric"));
  m.def(
      "binomial_transform",
      [](const std::string& f) {
        return dump(to_json(binomial_transform(symmetric_from_json(parse_json(f)))));
      },
      py::arg("symmetric"));

  m.def(
      "nest_check",
      [](const std::string& s_hat) { return dump(to_json(nest_check(symmetric_from_json(parse_json(s_hat))))); },
      py::arg("spectrum"));
  m.def(
      "nest_numeric",
      [](const std::string& s_hat) { return nest_numeric(symmetric_from_json(parse_json(s_hat))); },
      py::arg("spectrum"));
  m.def("family_de2020fast", [](std::size_t n) { return dump(to_json(family_de2020fast(n))); },
        py::arg("n"));
  m.def("closed_form_S", [](long n, long k) { return closed_form_S(n, k).str(); }, py::arg("n"),
        py::arg("m"));
  m.def(
      "munson_check",
      [](const std::string& alpha, std::size_t n) {
        return dump(to_json(munson_check(Rational::parse(alpha), n)));
      },
      py::arg("alpha"), py::arg("n"));

  m.def(
      "cnot_synthesize",
      [](const std::string& matrix) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const auto& s : cnot_synthesize(f2_matrix_from_json(parse_json(matrix)))) {
          out.emplace_back(s.source, s.target);
        }
        return out;
      },
      py::arg("matrix"), "CNOT list as (source, target) pairs, 1-based.");

  m.def(
      "local_complement",
      [](const std::string& graph, std::size_t u) {
        return dump(to_json(local_complement(graph_from_json(parse_json(graph)), u)));
      },
      py::arg("graph"), py::arg("u"));
  m.def(
      "verify_local_comp",
      [](const std::string& graph, std::size_t u, double tol) {
        const LocalCompResult r = verify_local_comp(graph_from_json(parse_json(graph)), u, tol);
        return py::make_tuple(r.holds, r.fidelity, r.global_phase);
      },
      py::arg("graph"), py::arg("u"), py::arg("tol") = 1e-9, "(holds, fidelity, global_phase)");
  m.def(
      "pauli_push_check",
      [](const std::string& graph, std::size_t i) {
        return pauli_push_check(graph_from_json(parse_json(graph)), i);
      },
      py::arg("graph"), py::arg("i"));
}
