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

/// \file
///
/// JSON encodings. Every `*_from_json` throws ParseError on malformed input;
/// values that parse but violate a domain invariant keep their own error type.
///
/// Rationals are strings "p" or "p/q" (plain integers are also accepted),
/// bit vectors are strings "0110", 0/1 matrices are arrays of rows, and
/// complex matrices are arrays of rows of [re, im] pairs.

#ifndef SZX_JSON_IO_HPP
#define SZX_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "szx/diagonal_gates.hpp"
#include "szx/spider_nest.hpp"
#include "szx/tensor.hpp"

namespace szx {

using Json = nlohmann::json;

/// Reads and parses a file. Throws ParseError when unreadable or not JSON.
Json read_json_file(const std::string& path);
/// Parses text. Throws ParseError.
Json parse_json(const std::string& text);

Rational rational_from_json(const Json& j);
Json to_json(const Rational& r);
std::vector<Rational> rationals_from_json(const Json& j);
Json to_json(const std::vector<Rational>& values);

BitVec bitvec_from_json(const Json& j);
Json to_json(const BitVec& v);

/// Accepts an array of rows or {"matrix": rows}.
F2Matrix f2_matrix_from_json(const Json& j);
BoolMatrix bool_matrix_from_json(const Json& j);
template <class S>
Json to_json(const BinaryMatrix<S>& m) {
  return Json(m.to_rows());
}

/// {"n", "m", "table"} or {"set_function": n}.
BooleanFunction boolean_function_from_json(const Json& j);
Json to_json(const BooleanFunction& f);

/// {"n", "values"}.
PhaseFunction phase_function_from_json(const Json& j);
Json to_json(const PhaseFunction& f);

/// {"n", "by_weight"}.
SymmetricPhaseFunction symmetric_from_json(const Json& j);
Json to_json(const SymmetricPhaseFunction& f);

/// {"n", "edges": [[i, j], ...]}, 1-based.
Graph graph_from_json(const Json& j);
Json to_json(const Graph& g);

/// {"n", "hyperedges": [[v, ...], ...]}, 1-based vertex lists.
Hypergraph hypergraph_from_json(const Json& j);
Json to_json(const Hypergraph& h);

/// {"kind": "gadget"|"hyperedge", "n", "terms": [{"support", "phase"}]}.
/// "n" may be omitted when there is at least one term.
TermList term_list_from_json(const Json& j);
Json to_json(const TermList& t);
/// The term list plus "constant".
Json to_json(const Decomposition& d);

/// Generators: {"node": kind, ...} with kind one of wire, swap, cup, cap,
/// divider, gatherer, green, red, h, farrow, redarrow, yellowarrow; the
/// composites diag, gadget, hyperedge and graph; and the combinators
/// {"seq": [...]}, {"par": [...]}, {"dagger": d}.
Diagram diagram_from_json(const Json& j);
/// Emits only generators and seq/par, so composites come back expanded.
Json to_json(const Diagram& d);

Json to_json(const ComplexMatrix& m);
/// Accepts an array of rows or {"matrix": rows}.
ComplexMatrix complex_matrix_from_json(const Json& j);

Json to_json(const std::vector<TransvectionStep>& steps);

Json to_json(const NestReport& r);
Json to_json(const MunsonReport& r);

}  // namespace szx

#endif  // SZX_JSON_IO_HPP
