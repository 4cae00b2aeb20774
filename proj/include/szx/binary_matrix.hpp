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

#ifndef SZX_BINARY_MATRIX_HPP
#define SZX_BINARY_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "szx/bitvec.hpp"
#include "szx/errors.hpp"

namespace szx {

/// Semiring tags. The storage of a {0,1}-matrix is the same for both; the tag
/// selects how the matrix acts on bit vectors.
struct GF2 {};
struct Boolean {};

template <class Semiring>
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Row-major literal. Throws DimensionError on ragged rows or entries other
  /// than 0/1.
  BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<int>> tmp;
    for (const auto& r : rows) tmp.emplace_back(r);
    *this = from_rows(tmp);
  }

  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    BinaryMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) {
        if (rows[i][j] != 0 && rows[i][j] != 1) {
          throw DimensionError("matrix entries must be 0 or 1");
        }
        m.set(i, j, rows[i][j] != 0);
      }
    }
    return m;
  }

  static BinaryMatrix identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  /// 0-based.
  [[nodiscard]] bool at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j] != 0;
  }
  void set(std::size_t i, std::size_t j, bool v) {
    data_[i * cols_ + j] = v ? 1 : 0;
  }

  [[nodiscard]] BitVec row(std::size_t i) const {
    BitVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r.set(j, at(i, j));
    return r;
  }
  [[nodiscard]] BitVec column(std::size_t j) const {
    BitVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.set(i, at(i, j));
    return c;
  }

  [[nodiscard]] std::vector<std::vector<int>> to_rows() const {
    std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j) ? 1 : 0;
    }
    return out;
  }

  [[nodiscard]] BinaryMatrix transpose() const {
    BinaryMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    }
    return t;
  }

  /// Reinterprets the same {0,1} entries under another semiring.
  template <class Other>
  [[nodiscard]] BinaryMatrix<Other> as() const {
    BinaryMatrix<Other> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
    }
    return m;
  }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

using F2Matrix = BinaryMatrix<GF2>;
using BoolMatrix = BinaryMatrix<Boolean>;

/// Horizontal block (A B). Throws DimensionError when row counts differ.
template <class S>
BinaryMatrix<S> hstack(const BinaryMatrix<S>& a, const BinaryMatrix<S>& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack: row counts differ");
  BinaryMatrix<S> m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) m.set(i, a.cols() + j, b.at(i, j));
  }
  return m;
}

/// Vertical block (A; B). Throws DimensionError when column counts differ.
template <class S>
BinaryMatrix<S> vstack(const BinaryMatrix<S>& a, const BinaryMatrix<S>& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack: column counts differ");
  BinaryMatrix<S> m(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) m.set(i, j, a.at(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i) m.set(a.rows() + i, j, b.at(i, j));
  }
  return m;
}

}  // namespace szx

#endif  // SZX_BINARY_MATRIX_HPP
