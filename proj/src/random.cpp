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

#include "szx/random.hpp"

#include <numeric>
#include <utility>

namespace szx {

std::uint64_t draw(Rng& rng, std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % bound;
}

long draw_between(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

Rational random_dyadic(Rng& rng, unsigned max_log_denominator) {
  const long den = 1L << max_log_denominator;
  return Rational(BigInt(draw_between(rng, -2 * den, 2 * den)), BigInt(den));
}

BitVec random_bitvec(Rng& rng, std::size_t n) {
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, draw(rng, 2) == 1);
  return v;
}

BitVec random_nonzero_bitvec(Rng& rng, std::size_t n) {
  BitVec v = random_bitvec(rng, n);
  while (v.is_zero()) v = random_bitvec(rng, n);
  return v;
}

namespace {

template <class S>
BinaryMatrix<S> random_binary(Rng& rng, std::size_t rows, std::size_t cols) {
  BinaryMatrix<S> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, draw(rng, 2) == 1);
  }
  return m;
}

}  // namespace

F2Matrix random_f2_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  return random_binary<GF2>(rng, rows, cols);
}

BoolMatrix random_bool_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  return random_binary<Boolean>(rng, rows, cols);
}

F2Matrix random_invertible(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[draw(rng, i)]);
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, perm[i], true);
  if (n < 2) return m;
  const std::size_t steps = 4 * n * n;
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t src = draw(rng, n);
    std::size_t dst = draw(rng, n - 1);
    if (dst >= src) ++dst;
    for (std::size_t j = 0; j < n; ++j) m.set(dst, j, m.at(dst, j) != m.at(src, j));
  }
  return m;
}

BooleanFunction random_boolean_function(Rng& rng, std::size_t n, std::size_t m) {
  std::vector<std::uint64_t> table(std::size_t{1} << n);
  const std::uint64_t range = std::uint64_t{1} << m;
  for (auto& v : table) v = draw(rng, range);
  return BooleanFunction(n, m, std::move(table));
}

PhaseFunction random_phase_function(Rng& rng, std::size_t n, unsigned max_log_denominator) {
  PhaseFunction f(n);
  for (std::size_t x = 0; x < f.size(); ++x) f[x] = random_dyadic(rng, max_log_denominator);
  return f;
}

SymmetricPhaseFunction random_symmetric(Rng& rng, std::size_t n,
                                        unsigned max_log_denominator) {
  SymmetricPhaseFunction f(n);
  for (std::size_t w = 0; w <= n; ++w) f[w] = random_dyadic(rng, max_log_denominator);
  return f;
}

Graph random_graph(Rng& rng, std::size_t n) {
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (draw(rng, 2) == 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

}  // namespace szx
