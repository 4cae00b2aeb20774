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
/// Seeded property suites over the rule registry and the graph theorems.
///
/// | suite     | checks                                                     |
/// |-----------|------------------------------------------------------------|
/// | arrows    | function/red/yellow arrow laws, divider laws, CNOT circuits |
/// | spiders   | fusion, phase form, unitarity, composition                 |
/// | diagonal  | gate semantics, stack form, Fourier/Moebius compilation     |
/// | graph     | graph operators, composition, Pauli pushing                |
/// | localcomp | local complementation                                      |
/// | all       | every suite above, in that order                           |

#ifndef SZX_SUITES_HPP
#define SZX_SUITES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "szx/json_io.hpp"

namespace szx {

struct SuiteOptions {
  /// Largest register size in qubits; graph suites use it as the largest
  /// exhaustively enumerated vertex count (capped at 5).
  std::size_t sizes = 3;
  std::uint64_t seed = 0;
  double tol = 1e-9;
};

const std::vector<std::string>& suite_names();

/// {"suite", "sizes", "seed", "tol", "holds", "results": [{"rule", "cases",
/// "holds", "max_delta"}]}. Result order is fixed by the suite definition.
/// Throws DomainError for an unknown suite or sizes of 0.
Json run_suite(std::string_view name, const SuiteOptions& options = {});

}  // namespace szx

#endif  // SZX_SUITES_HPP
