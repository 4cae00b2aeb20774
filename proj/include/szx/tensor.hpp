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
/// Diagram intermediate representation for scalable ZX/ZH generators and
/// their well-tempered matrix semantics.
///
/// A diagram is a composition tree: leaves are generators, inner nodes are
/// sequential (`seq`) or parallel (`par`) composition. Wires are typed by a
/// list of register sizes; `[n] (x) [m]` and `[n + m]` are different types
/// even though they carry the same number of qubits, and only dividers and
/// gatherers convert between them.
///
/// Matrix conventions:
///   - basis states of a wire type are ordered register by register, each
///     register big-endian (qubit 1 most significant);
///   - `par(left, right)` puts `left` on the most significant qubits;
///   - `seq(first, then)` evaluates to `then * first`.

#ifndef SZX_TENSOR_HPP
#define SZX_TENSOR_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "szx/binary_matrix.hpp"
#include "szx/boolean_core.hpp"
#include "szx/rational.hpp"

namespace szx {

using Complex = std::complex<double>;

/// Tensor product of registers. Zero-size registers are dropped, so the empty
/// list is the unit type [0].
class WireType {
 public:
  WireType() = default;
  WireType(std::initializer_list<std::size_t> registers)
      : WireType(std::vector<std::size_t>(registers)) {}
  explicit WireType(const std::vector<std::size_t>& registers);

  /// [k]^copies.
  static WireType power(std::size_t k, std::size_t copies);

  [[nodiscard]] const std::vector<std::size_t>& registers() const { return registers_; }
  [[nodiscard]] std::size_t qubits() const;
  [[nodiscard]] std::string str() const;

  friend WireType tensor(const WireType& a, const WireType& b);
  friend bool operator==(const WireType&, const WireType&) = default;

 private:
  std::vector<std::size_t> registers_;
};

// ---------------------------------------------------------------------------
// Dense matrices

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(const std::vector<Complex>& entries);
  /// Column vector.
  static ComplexMatrix column(const std::vector<Complex>& entries);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  [[nodiscard]] ComplexMatrix adjoint() const;
  [[nodiscard]] bool is_diagonal(double tol) const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex c, ComplexMatrix m);
  friend ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Largest entrywise |a - b|. Throws DimensionError on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |a - b| <= tol. Throws DimensionError on shape mismatch.
bool matrices_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

struct PhaseComparison {
  bool equal = false;
  /// Unit scalar p with a ~ p * b; 1 when undefined.
  Complex phase{1.0, 0.0};
};

/// Compares `a` against `p * b`, where p is the unit-modulus ratio at the
/// largest-magnitude entry of `a`.
PhaseComparison equal_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b,
                                  double tol);

/// 2^{exponent / 4}.
double pow2_quarter(long exponent);

/// e^{i pi r}, exact at multiples of 1/2.
Complex unit_phase(const Rational& r);

// ---------------------------------------------------------------------------
// Generators

struct WireGen {
  std::size_t n = 0;
};
/// [n] (x) [m] -> [m] (x) [n].
struct SwapGen {
  std::size_t n = 0;
  std::size_t m = 0;
};
/// [0] -> [n] (x) [n].
struct CupGen {
  std::size_t n = 0;
};
/// [n] (x) [n] -> [0].
struct CapGen {
  std::size_t n = 0;
};
/// [n + m] -> [n] (x) [m].
struct DividerGen {
  std::size_t n = 0;
  std::size_t m = 0;
};
/// [n] (x) [m] -> [n + m].
struct GathererGen {
  std::size_t n = 0;
  std::size_t m = 0;
};

enum class SpiderColor { kGreen, kRed };

/// Scalable spider [k]^in -> [k]^out with phase vector of length k, phases
/// kept in [0, 2).
struct SpiderGen {
  SpiderColor color = SpiderColor::kGreen;
  std::size_t k = 0;
  std::size_t in = 0;
  std::size_t out = 0;
  std::vector<Rational> phases;
};

/// Scalable H-box [k]^in -> [k]^out; entry law (1 - 2 e^{i pi a_j})^{AND}.
struct HarvestmanGen {
  std::size_t k = 0;
  std::size_t in = 0;
  std::size_t out = 0;
  std::vector<Rational> phases;
};

/// |x> |-> 2^{(m - n)/4} |f(x)> : [n] -> [m]; the adjoint flag flips it to
/// |f(x)> |-> 2^{(m - n)/4} |x> : [m] -> [n].
struct FunctionArrowGen {
  BooleanFunction f;
  bool adjoint = false;
};

using Generator = std::variant<WireGen, SwapGen, CupGen, CapGen, DividerGen,
                               GathererGen, SpiderGen, HarvestmanGen,
                               FunctionArrowGen>;

WireType generator_domain(const Generator& g);
WireType generator_codomain(const Generator& g);
Generator generator_dagger(const Generator& g);
/// Short description such as "green(k=2, in=1, out=2)".
std::string describe(const Generator& g);

// ---------------------------------------------------------------------------
// Diagrams

class Diagram {
 public:
  /// A single generator.
  Diagram(Generator g);  // NOLINT

  /// `first` followed by `then`. Throws TypeMismatchError unless
  /// first.codomain() == then.domain().
  static Diagram seq(const Diagram& first, const Diagram& then);
  static Diagram par(const Diagram& left, const Diagram& right);

  [[nodiscard]] const WireType& domain() const { return node_->domain; }
  [[nodiscard]] const WireType& codomain() const { return node_->codomain; }

  [[nodiscard]] bool is_generator() const { return node_->kind == Kind::kGenerator; }
  [[nodiscard]] bool is_seq() const { return node_->kind == Kind::kSeq; }
  [[nodiscard]] bool is_par() const { return node_->kind == Kind::kPar; }

  /// Only valid when is_generator().
  [[nodiscard]] const Generator& generator() const { return node_->generator; }
  /// First/left resp. then/right child; only valid for seq and par nodes.
  [[nodiscard]] const Diagram& lhs() const { return *node_->lhs; }
  [[nodiscard]] const Diagram& rhs() const { return *node_->rhs; }

 private:
  enum class Kind { kGenerator, kSeq, kPar };
  struct Node {
    Kind kind = Kind::kGenerator;
    Generator generator;
    std::shared_ptr<const Diagram> lhs;
    std::shared_ptr<const Diagram> rhs;
    WireType domain;
    WireType codomain;
  };

  explicit Diagram(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Structural adjoint: generators replaced by their adjoints, sequential
/// order reversed.
Diagram dagger(const Diagram& d);

/// Generator count.
std::size_t diagram_size(const Diagram& d);

struct EvalOptions {
  /// Largest total qubit count allowed on the domain or codomain of any node.
  std::size_t max_wire_qubits = 20;
  /// Largest number of stored nonzeros in any intermediate matrix.
  std::size_t max_nonzeros = std::size_t{1} << 24;
};

ComplexMatrix eval_generator(const Generator& g, const EvalOptions& options = {});

/// Throws SizeLimitError naming the offending node when a limit is hit, or
/// when the dense result would exceed max_nonzeros entries.
ComplexMatrix eval_diagram(const Diagram& d, const EvalOptions& options = {});

// ---------------------------------------------------------------------------
// Builders

namespace zx {

Diagram wire(std::size_t n);
Diagram wire(const WireType& t);
Diagram swap(std::size_t n, std::size_t m);
Diagram cup(std::size_t n);
Diagram cap(std::size_t n);
Diagram divider(std::size_t n, std::size_t m);
Diagram gatherer(std::size_t n, std::size_t m);

/// Phases default to zero; a non-empty phase vector must have length k.
/// Throws DimensionError otherwise.
Diagram green(std::size_t k, std::size_t in, std::size_t out,
              std::vector<Rational> phases = {});
Diagram red(std::size_t k, std::size_t in, std::size_t out,
            std::vector<Rational> phases = {});
Diagram harvestman(std::size_t k, std::size_t in, std::size_t out,
                   std::vector<Rational> phases = {});

Diagram function_arrow(const BooleanFunction& f);
Diagram red_arrow(const F2Matrix& a);
Diagram yellow_arrow(const BoolMatrix& a);

/// Left to right; empty lists are not allowed.
Diagram seq(std::initializer_list<Diagram> parts);
Diagram seq(const std::vector<Diagram>& parts);
Diagram par(std::initializer_list<Diagram> parts);
Diagram par(const std::vector<Diagram>& parts);

/// 2^{n/4} |x>, the red spider with phase vector x.
Diagram basis_state(const BitVec& x);
/// H^{(x) n} as a single harvestman.
Diagram hadamard(std::size_t n);

}  // namespace zx

}  // namespace szx

#endif  // SZX_TENSOR_HPP
