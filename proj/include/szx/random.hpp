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
/// Seeded random instances. Draws use only the raw mt19937_64 stream, so a
/// seed produces the same instances on every platform.

#ifndef SZX_RANDOM_HPP
#define SZX_RANDOM_HPP

#include <cstdint>
#include <random>

#include "szx/diagonal_gates.hpp"
#include "szx/phase_functions.hpp"

namespace szx {

using Rng = std::mt19937_64;

/// Uniform in [0, bound); bound > 0.
std::uint64_t draw(Rng& rng, std::uint64_t bound);
/// Uniform in [lo, hi].
long draw_between(Rng& rng, long lo, long hi);

/// p / 2^max_log_denominator with p uniform in [-2^(d+1), 2^(d+1)].
Rational random_dyadic(Rng& rng, unsigned max_log_denominator = 3);
BitVec random_bitvec(Rng& rng, std::size_t n);
BitVec random_nonzero_bitvec(Rng& rng, std::size_t n);
F2Matrix random_f2_matrix(Rng& rng, std::size_t rows, std::size_t cols);
BoolMatrix random_bool_matrix(Rng& rng, std::size_t rows, std::size_t cols);
/// Product of random transvections and a random permutation.
F2Matrix random_invertible(Rng& rng, std::size_t n);
BooleanFunction random_boolean_function(Rng& rng, std::size_t n, std::size_t m);
PhaseFunction random_phase_function(Rng& rng, std::size_t n, unsigned max_log_denominator = 3);
SymmetricPhaseFunction random_symmetric(Rng& rng, std::size_t n,
                                        unsigned max_log_denominator = 3);
/// Each edge present with probability 1/2.
Graph random_graph(Rng& rng, std::size_t n);

}  // namespace szx

#endif  // SZX_RANDOM_HPP
