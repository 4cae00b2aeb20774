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

#include "szx/boolean_core.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace szx {

// ---------------------------------------------------------------------------
// BitVec

BitVec::BitVec(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw DimensionError("bit values must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

BitVec BitVec::from_index(std::size_t length, std::uint64_t index) {
  BitVec v(length);
  for (std::size_t q = 1; q <= length; ++q) v.set(q - 1, index_bit(index, length, q));
  return v;
}

BitVec BitVec::parse(std::string_view text) {
  BitVec v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v.set(i, true);
    } else if (text[i] != '0') {
      throw ParseError("malformed bit string '" + std::string(text) + "'");
    }
  }
  return v;
}

std::uint64_t BitVec::to_index() const {
  if (bits_.size() > 64) throw DimensionError("bit vector longer than 64 bits");
  std::uint64_t index = 0;
  for (auto b : bits_) index = (index << 1U) | b;
  return index;
}

std::size_t BitVec::popcount() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string BitVec::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

bool is_subset(const BitVec& s, const BitVec& x) {
  if (s.size() != x.size()) throw DimensionError("bit vector lengths differ");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] && !x[i]) return false;
  }
  return true;
}

bool parity_dot(const BitVec& s, const BitVec& x) {
  if (s.size() != x.size()) throw DimensionError("bit vector lengths differ");
  bool p = false;
  for (std::size_t i = 0; i < s.size(); ++i) p ^= (s[i] && x[i]);
  return p;
}

// ---------------------------------------------------------------------------
// F2 linear algebra

F2Matrix f2_matmul(const F2Matrix& a, const F2Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("f2_matmul: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  F2Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      bool v = false;
      for (std::size_t k = 0; k < a.cols(); ++k) v ^= (a.at(i, k) && b.at(k, j));
      c.set(i, j, v);
    }
  }
  return c;
}

BitVec f2_apply(const F2Matrix& a, const BitVec& x) {
  if (a.cols() != x.size()) throw DimensionError("f2_apply: size mismatch");
  BitVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool v = false;
    for (std::size_t j = 0; j < a.cols(); ++j) v ^= (a.at(i, j) && x[j]);
    y.set(i, v);
  }
  return y;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row, in row order.
std::vector<std::size_t> rref(F2Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && !m.at(p, col)) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const bool t = m.at(p, j);
        m.set(p, j, m.at(row, j));
        m.set(row, j, t);
      }
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || !m.at(i, col)) continue;
      for (std::size_t j = col; j < m.cols(); ++j) {
        m.set(i, j, m.at(i, j) != m.at(row, j));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Subspaces f2_subspaces(const F2Matrix& a) {
  F2Matrix r = a;
  const auto pivots = rref(r);
  Subspaces out;
  out.rank = pivots.size();

  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVec v(a.cols());
    v.set(free, true);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (r.at(i, free)) v.set(pivots[i], true);
    }
    out.kernel_basis.push_back(std::move(v));
  }
  for (auto p : pivots) out.image_basis.push_back(a.column(p));
  return out;
}

std::size_t f2_rank(const F2Matrix& a) {
  F2Matrix r = a;
  return rref(r).size();
}

bool f2_meta_condition(const F2Matrix& a, const F2Matrix& b, const F2Matrix& c,
                       const F2Matrix& d) {
  if (a.rows() != b.rows() || c.cols() != d.cols() || c.rows() != a.cols() ||
      d.rows() != b.cols()) {
    throw DimensionError(
        "f2_meta_condition: need A r x p, B r x q, C p x t, D q x t");
  }
  const F2Matrix row_block = hstack(a, b);
  const F2Matrix col_block = vstack(c, d);
  // Im(C;D) is inside Ker(A B) iff (A B)(C;D) = 0; equality then follows from
  // matching dimensions.
  const F2Matrix product = f2_matmul(row_block, col_block);
  for (std::size_t i = 0; i < product.rows(); ++i) {
    for (std::size_t j = 0; j < product.cols(); ++j) {
      if (product.at(i, j)) return false;
    }
  }
  return f2_rank(col_block) + f2_rank(row_block) == row_block.cols();
}

std::vector<TransvectionStep> cnot_synthesize(const F2Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("cnot_synthesize: matrix not square");
  const std::size_t n = a.rows();
  F2Matrix m = a;
  // Row operations (source, target) reducing A to I, 0-based.
  std::vector<std::pair<std::size_t, std::size_t>> ops;
  auto add_row = [&](std::size_t src, std::size_t tgt) {
    for (std::size_t j = 0; j < n; ++j) m.set(tgt, j, m.at(tgt, j) != m.at(src, j));
    ops.emplace_back(src, tgt);
  };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && !m.at(p, col)) ++p;
    if (p == n) throw NotInvertibleError();
    if (p != col) add_row(p, col);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != col && m.at(i, col)) add_row(col, i);
    }
  }
  // E_k ... E_1 A = I and each E is an involution, so A = E_1 ... E_k: the
  // circuit applies E_k first.
  std::vector<TransvectionStep> steps;
  steps.reserve(ops.size());
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    steps.push_back({it->first + 1, it->second + 1});
  }
  return steps;
}

F2Matrix replay_transvections(std::size_t n,
                              const std::vector<TransvectionStep>& steps) {
  F2Matrix m = F2Matrix::identity(n);
  for (const auto& s : steps) {
    if (s.source == s.target || s.source < 1 || s.target < 1 || s.source > n ||
        s.target > n) {
      throw DomainError("invalid transvection step");
    }
    for (std::size_t j = 0; j < n; ++j) {
      m.set(s.target - 1, j, m.at(s.target - 1, j) != m.at(s.source - 1, j));
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Boolean semiring

BitVec yellow_apply(const BoolMatrix& a, const BitVec& x) {
  if (a.cols() != x.size()) throw DimensionError("yellow_apply: size mismatch");
  BitVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool v = true;
    for (std::size_t j = 0; j < a.cols() && v; ++j) {
      if (a.at(i, j)) v = x[j];
    }
    y.set(i, v);
  }
  return y;
}

BitVec set_function(std::size_t n, const BitVec& x) {
  if (x.size() != n) throw DimensionError("set_function: |x| != n");
  if (n > kMaxFunctionInputBits) throw DimensionError("set_function: n too large");
  BitVec out(std::size_t{1} << n);
  out.set(x.to_index(), true);
  return out;
}

BoolMatrix stack_matrix(std::size_t n) {
  if (n > kMaxFunctionInputBits) throw DimensionError("stack_matrix: n too large");
  const std::size_t rows = std::size_t{1} << n;
  BoolMatrix h(rows, n);
  for (std::size_t s = 0; s < rows; ++s) {
    for (std::size_t q = 1; q <= n; ++q) h.set(s, q - 1, index_bit(s, n, q));
  }
  return h;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// ---------------------------------------------------------------------------
// BooleanFunction

BooleanFunction::BooleanFunction(std::size_t in_bits, std::size_t out_bits,
                                 std::vector<std::uint64_t> table)
    : in_bits_(in_bits), out_bits_(out_bits), table_(std::move(table)) {
  if (in_bits_ > kMaxFunctionInputBits) {
    throw DimensionError("function arrow domain too large");
  }
  if (out_bits_ > 64) throw DimensionError("function arrow codomain above 64 bits");
  if (table_.size() != (std::size_t{1} << in_bits_)) {
    throw DimensionError("function table must have 2^n entries");
  }
  for (auto y : table_) {
    if (out_bits_ < 64 && (y >> out_bits_) != 0) {
      throw DimensionError("function output does not fit in m bits");
    }
  }
}

BooleanFunction BooleanFunction::identity(std::size_t n) {
  std::vector<std::uint64_t> t(std::size_t{1} << n);
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = x;
  return BooleanFunction(n, n, std::move(t));
}

BooleanFunction BooleanFunction::from_f2(const F2Matrix& a) {
  const std::size_t n = a.cols();
  const std::size_t m = a.rows();
  if (n > kMaxFunctionInputBits || m > 64) throw DimensionError("red arrow too large");
  // Output mask contributed by each input qubit.
  std::vector<std::uint64_t> column_mask(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (a.at(i, j)) column_mask[j] |= std::uint64_t{1} << (m - 1 - i);
    }
  }
  std::vector<std::uint64_t> t(std::size_t{1} << n);
  for (std::size_t x = 0; x < t.size(); ++x) {
    std::uint64_t y = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (index_bit(x, n, j + 1)) y ^= column_mask[j];
    }
    t[x] = y;
  }
  return BooleanFunction(n, m, std::move(t));
}

BooleanFunction BooleanFunction::from_boolean(const BoolMatrix& a) {
  const std::size_t n = a.cols();
  const std::size_t m = a.rows();
  if (n > kMaxFunctionInputBits || m > 64) throw DimensionError("yellow arrow too large");
  std::vector<std::uint64_t> row_mask(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a.at(i, j)) row_mask[i] |= std::uint64_t{1} << (n - 1 - j);
    }
  }
  std::vector<std::uint64_t> t(std::size_t{1} << n);
  for (std::size_t x = 0; x < t.size(); ++x) {
    std::uint64_t y = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if ((x & row_mask[i]) == row_mask[i]) y |= std::uint64_t{1} << (m - 1 - i);
    }
    t[x] = y;
  }
  return BooleanFunction(n, m, std::move(t));
}

BooleanFunction BooleanFunction::set_function(std::size_t n) {
  if (n > 6) throw DimensionError("h_n tabulation needs 2^n <= 64 output bits");
  const std::size_t m = std::size_t{1} << n;
  std::vector<std::uint64_t> t(m);
  // Position x of the 2^n-bit output, most significant first.
  for (std::size_t x = 0; x < m; ++x) t[x] = std::uint64_t{1} << (m - 1 - x);
  return BooleanFunction(n, m, std::move(t));
}

}  // namespace szx
