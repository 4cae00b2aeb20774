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

#ifndef SZX_BOOLEAN_CORE_HPP
#define SZX_BOOLEAN_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "szx/binary_matrix.hpp"
#include "szx/bitvec.hpp"
#include "szx/rational.hpp"

namespace szx {

// ---------------------------------------------------------------------------
// F2 linear algebra

/// C = A B over F2. Throws DimensionError unless A.cols == B.rows.
F2Matrix f2_matmul(const F2Matrix& a, const F2Matrix& b);

/// y = A x over F2.
BitVec f2_apply(const F2Matrix& a, const BitVec& x);

struct Subspaces {
  std::size_t rank = 0;
  std::vector<BitVec> kernel_basis;  // vectors in F2^cols
  std::vector<BitVec> image_basis;   // vectors in F2^rows
};

/// Rank, a kernel basis and an image basis of A. The image basis consists of
/// the pivot columns of A; rank + |kernel_basis| == A.cols.
Subspaces f2_subspaces(const F2Matrix& a);

std::size_t f2_rank(const F2Matrix& a);

/// Im(C;D) == Ker(A B) as subspaces of F2^(A.cols + B.cols).
/// Shapes: A is r x p, B is r x q, C is p x t, D is q x t.
/// Throws DimensionError on incompatible blocks.
bool f2_meta_condition(const F2Matrix& a, const F2Matrix& b, const F2Matrix& c,
                       const F2Matrix& d);

/// A CNOT inside one register: x[target] ^= x[source]. Qubits are 1-based.
struct TransvectionStep {
  std::size_t source = 0;
  std::size_t target = 0;

  friend bool operator==(const TransvectionStep&, const TransvectionStep&) = default;
};

/// CNOT circuit for an invertible A. Applying the steps in order, as row
/// operations on the identity (row[target] += row[source]), rebuilds A; the
/// circuit maps |x> to |Ax>. Throws NotInvertibleError for singular A and
/// DimensionError for non-square A.
std::vector<TransvectionStep> cnot_synthesize(const F2Matrix& a);

/// Replays CNOT steps on the n x n identity.
F2Matrix replay_transvections(std::size_t n,
                              const std::vector<TransvectionStep>& steps);

// ---------------------------------------------------------------------------
// Boolean semiring

/// y[i] = AND of x[j] over the support of row i (the empty AND is 1).
/// Throws DimensionError unless A.cols == |x|.
BitVec yellow_apply(const BoolMatrix& a, const BitVec& x);

/// h_n: the 2^n-bit indicator of x.
BitVec set_function(std::size_t n, const BitVec& x);

/// H_n: the 2^n x n matrix whose row s is the bit pattern of s. n == 0 gives
/// a single empty row.
BoolMatrix stack_matrix(std::size_t n);

/// C(n, k), zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

// ---------------------------------------------------------------------------
// Boolean functions, as carried by function arrows

/// Total map 2^n -> 2^m stored as a table of big-endian output indices.
class BooleanFunction {
 public:
  BooleanFunction() = default;
  /// Throws DimensionError when the table size is not 2^n or an output does
  /// not fit in m bits.
  BooleanFunction(std::size_t in_bits, std::size_t out_bits,
                  std::vector<std::uint64_t> table);

  static BooleanFunction identity(std::size_t n);
  /// x |-> A x over F2.
  static BooleanFunction from_f2(const F2Matrix& a);
  /// x |-> yellow_apply(A, x).
  static BooleanFunction from_boolean(const BoolMatrix& a);
  /// h_n.
  static BooleanFunction set_function(std::size_t n);

  [[nodiscard]] std::size_t in_bits() const { return in_bits_; }
  [[nodiscard]] std::size_t out_bits() const { return out_bits_; }
  [[nodiscard]] std::uint64_t operator()(std::uint64_t x) const { return table_[x]; }
  [[nodiscard]] const std::vector<std::uint64_t>& table() const { return table_; }

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  std::size_t in_bits_ = 0;
  std::size_t out_bits_ = 0;
  std::vector<std::uint64_t> table_{0};
};

/// Largest domain size accepted when tabulating a BooleanFunction.
inline constexpr std::size_t kMaxFunctionInputBits = 24;

}  // namespace szx

#endif  // SZX_BOOLEAN_CORE_HPP
