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

#ifndef SZX_BITVEC_HPP
#define SZX_BITVEC_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace szx {

/// Bit `qubit` (1-based, qubit 1 most significant) of a `length`-bit index.
constexpr bool index_bit(std::uint64_t index, std::size_t length,
                         std::size_t qubit) {
  return ((index >> (length - qubit)) & 1U) != 0;
}

/// Element of 2^n. Qubits are numbered from 1; the integer encoding is
/// big-endian, so qubit 1 is the most significant bit.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t length) : bits_(length, 0) {}
  BitVec(std::initializer_list<int> bits);

  static BitVec from_index(std::size_t length, std::uint64_t index);
  /// Parses a string of '0'/'1' characters, most significant first.
  static BitVec parse(std::string_view text);
  static BitVec ones(std::size_t length) {
    BitVec v(length);
    for (auto& b : v.bits_) b = 1;
    return v;
  }

  [[nodiscard]] std::size_t size() const { return bits_.size(); }
  [[nodiscard]] bool empty() const { return bits_.empty(); }

  /// 0-based access.
  [[nodiscard]] bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1U; }

  /// 1-based access, matching qubit numbering.
  [[nodiscard]] bool qubit(std::size_t i) const { return bits_[i - 1] != 0; }

  /// Throws DimensionError when longer than 64 bits.
  [[nodiscard]] std::uint64_t to_index() const;
  [[nodiscard]] std::size_t popcount() const;
  [[nodiscard]] bool is_zero() const { return popcount() == 0; }
  [[nodiscard]] std::string str() const;

  [[nodiscard]] const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend bool operator<(const BitVec& a, const BitVec& b) {
    return a.bits_ < b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

/// Bitwise s <= x.
bool is_subset(const BitVec& s, const BitVec& x);

/// Parity of the bitwise AND.
bool parity_dot(const BitVec& s, const BitVec& x);

}  // namespace szx

#endif  // SZX_BITVEC_HPP
