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

#include "szx/tensor.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "szx/errors.hpp"

namespace szx {

// ---------------------------------------------------------------------------
// WireType

WireType::WireType(const std::vector<std::size_t>& registers) {
  for (auto r : registers) {
    if (r != 0) registers_.push_back(r);
  }
}

WireType WireType::power(std::size_t k, std::size_t copies) {
  return WireType(std::vector<std::size_t>(copies, k));
}

std::size_t WireType::qubits() const {
  std::size_t q = 0;
  for (auto r : registers_) q += r;
  return q;
}

std::string WireType::str() const {
  if (registers_.empty()) return "[0]";
  std::string s;
  for (std::size_t i = 0; i < registers_.size(); ++i) {
    if (i != 0) s += "(x)";
    s += "[" + std::to_string(registers_[i]) + "]";
  }
  return s;
}

WireType tensor(const WireType& a, const WireType& b) {
  WireType t = a;
  t.registers_.insert(t.registers_.end(), b.registers_.begin(), b.registers_.end());
  return t;
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& entries) {
  ComplexMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::column(const std::vector<Complex>& entries) {
  ComplexMatrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

bool ComplexMatrix::is_diagonal(double tol) const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && std::abs((*this)(i, j)) > tol) return false;
    }
  }
  return true;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  ComplexMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix operator*(Complex c, ComplexMatrix m) {
  for (auto& v : m.data_) v *= c;
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows_; ++k) {
        for (std::size_t l = 0; l < b.cols_; ++l) {
          c(i * b.rows_ + k, j * b.cols_ + l) = aij * b(k, l);
        }
      }
    }
  }
  return c;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix comparison: shapes differ");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    }
  }
  return worst;
}

bool matrices_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

PhaseComparison equal_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b,
                                  double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix comparison: shapes differ");
  }
  std::size_t bi = 0;
  std::size_t bj = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (std::abs(a(i, j)) > best) {
        best = std::abs(a(i, j));
        bi = i;
        bj = j;
      }
    }
  }
  PhaseComparison out;
  if (best > tol && std::abs(b(bi, bj)) > tol) {
    const Complex ratio = a(bi, bj) / b(bi, bj);
    out.phase = ratio / std::abs(ratio);
  }
  out.equal = matrices_equal(a, out.phase * b, tol);
  return out;
}

double pow2_quarter(long exponent) {
  static constexpr double kRoots[4] = {1.0, 1.189207115002721066717,
                                       1.414213562373095048802,
                                       1.681792830507429086062};
  long q = exponent / 4;
  long r = exponent % 4;
  if (r < 0) {
    r += 4;
    q -= 1;
  }
  return std::ldexp(kRoots[r], static_cast<int>(q));
}

Complex unit_phase(const Rational& r) {
  const Rational x = r.mod2();
  const Rational twice = x * Rational(2);
  if (twice.is_integer()) {
    switch (twice.numerator().get_si()) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
      default: break;
    }
  }
  return std::polar(1.0, std::numbers::pi * x.to_double());
}

// ---------------------------------------------------------------------------
// Generators

namespace {

std::vector<Rational> reduce_phases(std::size_t k, std::vector<Rational> phases) {
  if (phases.empty()) return std::vector<Rational>(k);
  if (phases.size() != k) {
    throw DimensionError("phase vector length " + std::to_string(phases.size()) +
                         " does not match k = " + std::to_string(k));
  }
  for (auto& p : phases) p = p.mod2();
  return phases;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

WireType generator_domain(const Generator& g) {
  return std::visit(
      Overloaded{
          [](const WireGen& w) { return WireType{w.n}; },
          [](const SwapGen& s) { return WireType{s.n, s.m}; },
          [](const CupGen&) { return WireType{}; },
          [](const CapGen& c) { return WireType{c.n, c.n}; },
          [](const DividerGen& d) { return WireType{d.n + d.m}; },
          [](const GathererGen& d) { return WireType{d.n, d.m}; },
          [](const SpiderGen& s) { return WireType::power(s.k, s.in); },
          [](const HarvestmanGen& h) { return WireType::power(h.k, h.in); },
          [](const FunctionArrowGen& f) {
            return WireType{f.adjoint ? f.f.out_bits() : f.f.in_bits()};
          },
      },
      g);
}

WireType generator_codomain(const Generator& g) {
  return std::visit(
      Overloaded{
          [](const WireGen& w) { return WireType{w.n}; },
          [](const SwapGen& s) { return WireType{s.m, s.n}; },
          [](const CupGen& c) { return WireType{c.n, c.n}; },
          [](const CapGen&) { return WireType{}; },
          [](const DividerGen& d) { return WireType{d.n, d.m}; },
          [](const GathererGen& d) { return WireType{d.n + d.m}; },
          [](const SpiderGen& s) { return WireType::power(s.k, s.out); },
          [](const HarvestmanGen& h) { return WireType::power(h.k, h.out); },
          [](const FunctionArrowGen& f) {
            return WireType{f.adjoint ? f.f.in_bits() : f.f.out_bits()};
          },
      },
      g);
}

Generator generator_dagger(const Generator& g) {
  auto negate = [](std::vector<Rational> phases) {
    for (auto& p : phases) p = (-p).mod2();
    return phases;
  };
  return std::visit(
      Overloaded{
          [](const WireGen& w) -> Generator { return w; },
          [](const SwapGen& s) -> Generator { return SwapGen{s.m, s.n}; },
          [](const CupGen& c) -> Generator { return CapGen{c.n}; },
          [](const CapGen& c) -> Generator { return CupGen{c.n}; },
          [](const DividerGen& d) -> Generator { return GathererGen{d.n, d.m}; },
          [](const GathererGen& d) -> Generator { return DividerGen{d.n, d.m}; },
          [&](const SpiderGen& s) -> Generator {
            return SpiderGen{s.color, s.k, s.out, s.in, negate(s.phases)};
          },
          [&](const HarvestmanGen& h) -> Generator {
            return HarvestmanGen{h.k, h.out, h.in, negate(h.phases)};
          },
          [](const FunctionArrowGen& f) -> Generator {
            return FunctionArrowGen{f.f, !f.adjoint};
          },
      },
      g);
}

std::string describe(const Generator& g) {
  auto arity = [](std::size_t k, std::size_t in, std::size_t out) {
    return "(k=" + std::to_string(k) + ", in=" + std::to_string(in) +
           ", out=" + std::to_string(out) + ")";
  };
  return std::visit(
      Overloaded{
          [](const WireGen& w) { return "wire(" + std::to_string(w.n) + ")"; },
          [](const SwapGen& s) {
            return "swap(" + std::to_string(s.n) + ", " + std::to_string(s.m) + ")";
          },
          [](const CupGen& c) { return "cup(" + std::to_string(c.n) + ")"; },
          [](const CapGen& c) { return "cap(" + std::to_string(c.n) + ")"; },
          [](const DividerGen& d) {
            return "divider(" + std::to_string(d.n) + ", " + std::to_string(d.m) + ")";
          },
          [](const GathererGen& d) {
            return "gatherer(" + std::to_string(d.n) + ", " + std::to_string(d.m) + ")";
          },
          [&](const SpiderGen& s) {
            return std::string(s.color == SpiderColor::kGreen ? "green" : "red") +
                   arity(s.k, s.in, s.out);
          },
          [&](const HarvestmanGen& h) { return "h" + arity(h.k, h.in, h.out); },
          [](const FunctionArrowGen& f) {
            return std::string(f.adjoint ? "farrow-dagger(" : "farrow(") +
                   std::to_string(f.f.in_bits()) + " -> " +
                   std::to_string(f.f.out_bits()) + ")";
          },
      },
      g);
}

// ---------------------------------------------------------------------------
// Diagram

Diagram::Diagram(Generator g) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kGenerator;
  node->domain = generator_domain(g);
  node->codomain = generator_codomain(g);
  node->generator = std::move(g);
  node_ = std::move(node);
}

Diagram Diagram::seq(const Diagram& first, const Diagram& then) {
  if (!(first.codomain() == then.domain())) {
    throw TypeMismatchError("seq: codomain " + first.codomain().str() +
                            " does not match domain " + then.domain().str());
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::kSeq;
  node->lhs = std::make_shared<const Diagram>(first);
  node->rhs = std::make_shared<const Diagram>(then);
  node->domain = first.domain();
  node->codomain = then.codomain();
  return Diagram(std::move(node));
}

Diagram Diagram::par(const Diagram& left, const Diagram& right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kPar;
  node->lhs = std::make_shared<const Diagram>(left);
  node->rhs = std::make_shared<const Diagram>(right);
  node->domain = tensor(left.domain(), right.domain());
  node->codomain = tensor(left.codomain(), right.codomain());
  return Diagram(std::move(node));
}

Diagram dagger(const Diagram& d) {
  if (d.is_generator()) return Diagram(generator_dagger(d.generator()));
  if (d.is_seq()) return Diagram::seq(dagger(d.rhs()), dagger(d.lhs()));
  return Diagram::par(dagger(d.lhs()), dagger(d.rhs()));
}

std::size_t diagram_size(const Diagram& d) {
  if (d.is_generator()) return 1;
  return diagram_size(d.lhs()) + diagram_size(d.rhs());
}

// ---------------------------------------------------------------------------
// Sparse evaluation

namespace {

struct Entry {
  std::uint64_t row;
  Complex value;
};

// Compressed sparse columns; rows sorted within each column.
struct SparseMatrix {
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::vector<std::size_t> col_start{0};
  std::vector<Entry> entries;

  void push_column(std::vector<Entry>& column) {
    entries.insert(entries.end(), column.begin(), column.end());
    col_start.push_back(entries.size());
    column.clear();
  }
  [[nodiscard]] std::size_t nnz() const { return entries.size(); }
};

void check_nonzeros(std::size_t count, const EvalOptions& options,
                    const std::string& where) {
  if (count > options.max_nonzeros) {
    throw SizeLimitError(where + ": " + std::to_string(count) +
                         " nonzeros exceed the limit of " +
                         std::to_string(options.max_nonzeros));
  }
}

// x repeated `copies` times as k-bit chunks.
std::uint64_t repeat_chunk(std::uint64_t x, std::size_t k, std::size_t copies) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < copies; ++i) r = (r << k) | x;
  return r;
}

std::uint64_t xor_chunks(std::uint64_t v, std::size_t k, std::size_t copies) {
  const std::uint64_t mask = (k >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < copies; ++i) {
    acc ^= v & mask;
    v >>= k;
  }
  return acc;
}

std::uint64_t and_chunks(std::uint64_t v, std::size_t k, std::size_t copies,
                         std::uint64_t acc) {
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  for (std::size_t i = 0; i < copies; ++i) {
    acc &= v & mask;
    v >>= k;
  }
  return acc;
}

// Complex value of prod over set bits j (qubit order) of factor[j][bit].
std::vector<Complex> chunk_products(std::size_t k,
                                    const std::vector<std::array<Complex, 2>>& factor) {
  std::vector<Complex> val(std::size_t{1} << k);
  for (std::uint64_t p = 0; p < val.size(); ++p) {
    Complex v = 1.0;
    for (std::size_t j = 0; j < k; ++j) v *= factor[j][index_bit(p, k, j + 1) ? 1 : 0];
    val[p] = v;
  }
  return val;
}

SparseMatrix identity_sparse(std::size_t qubits) {
  SparseMatrix m;
  m.rows = m.cols = std::uint64_t{1} << qubits;
  m.entries.reserve(m.rows);
  for (std::uint64_t i = 0; i < m.rows; ++i) {
    m.entries.push_back({i, 1.0});
    m.col_start.push_back(m.entries.size());
  }
  return m;
}

SparseMatrix green_sparse(const SpiderGen& s) {
  const double scale = pow2_quarter(static_cast<long>(s.k) *
                                    (static_cast<long>(s.in + s.out) - 2));
  // Exact phase x . a for every x, by extending x with its lowest set bit.
  const std::uint64_t span = std::uint64_t{1} << s.k;
  std::vector<Complex> phase(span, 1.0);
  const bool trivial = std::all_of(s.phases.begin(), s.phases.end(),
                                   [](const Rational& a) { return a.is_zero(); });
  if (!trivial) {
    std::vector<Rational> exact(span);
    for (std::uint64_t x = 1; x < span; ++x) {
      const auto low = static_cast<std::size_t>(std::countr_zero(x));
      exact[x] = exact[x & (x - 1)] + s.phases[s.k - 1 - low];
      phase[x] = unit_phase(exact[x]);
    }
  }
  SparseMatrix m;
  m.rows = std::uint64_t{1} << (s.k * s.out);
  m.cols = std::uint64_t{1} << (s.k * s.in);
  std::vector<Entry> column;
  if (s.in == 0 && s.out == 0) {
    Complex total = 0.0;
    for (std::uint64_t x = 0; x < span; ++x) total += phase[x];
    if (total != Complex{}) column.push_back({0, scale * total});
    m.push_column(column);
    return m;
  }
  if (s.in == 0) {
    for (std::uint64_t x = 0; x < span; ++x) {
      column.push_back({repeat_chunk(x, s.k, s.out), scale * phase[x]});
    }
    m.push_column(column);
    return m;
  }
  std::uint64_t next_x = 0;
  for (std::uint64_t c = 0; c < m.cols; ++c) {
    if (next_x < span && c == repeat_chunk(next_x, s.k, s.in)) {
      column.push_back({repeat_chunk(next_x, s.k, s.out), scale * phase[next_x]});
      ++next_x;
    }
    m.push_column(column);
  }
  return m;
}

SparseMatrix red_sparse(const SpiderGen& s, const EvalOptions& options) {
  const double scale = pow2_quarter(static_cast<long>(s.k) *
                                    (2 - static_cast<long>(s.in + s.out)));
  std::vector<std::array<Complex, 2>> factor(s.k);
  for (std::size_t j = 0; j < s.k; ++j) {
    const Complex e = unit_phase(s.phases[j]);
    factor[j] = {(1.0 + e) / 2.0, (1.0 - e) / 2.0};
  }
  const auto val = chunk_products(s.k, factor);
  std::vector<std::uint64_t> nonzero;
  for (std::uint64_t p = 0; p < val.size(); ++p) {
    if (val[p] != Complex{}) nonzero.push_back(p);
  }
  SparseMatrix m;
  m.rows = std::uint64_t{1} << (s.k * s.out);
  m.cols = std::uint64_t{1} << (s.k * s.in);
  const std::uint64_t free_rows = (s.out == 0) ? 1 : (std::uint64_t{1} << (s.k * (s.out - 1)));
  check_nonzeros(static_cast<std::size_t>(m.cols * nonzero.size() * free_rows), options,
                 describe(s));
  std::vector<Entry> column;
  for (std::uint64_t c = 0; c < m.cols; ++c) {
    const std::uint64_t pc = xor_chunks(c, s.k, s.in);
    for (auto p : nonzero) {
      const std::uint64_t target = pc ^ p;
      if (s.out == 0) {
        if (target == 0) column.push_back({0, scale * val[p]});
        continue;
      }
      for (std::uint64_t prefix = 0; prefix < free_rows; ++prefix) {
        const std::uint64_t last = target ^ xor_chunks(prefix, s.k, s.out - 1);
        column.push_back({(prefix << s.k) | last, scale * val[p]});
      }
    }
    std::sort(column.begin(), column.end(),
              [](const Entry& a, const Entry& b) { return a.row < b.row; });
    m.push_column(column);
  }
  return m;
}

SparseMatrix harvestman_sparse(const HarvestmanGen& h, const EvalOptions& options) {
  const double scale = pow2_quarter(-static_cast<long>(h.k * (h.in + h.out)));
  std::vector<std::array<Complex, 2>> factor(h.k);
  for (std::size_t j = 0; j < h.k; ++j) {
    factor[j] = {1.0, 1.0 - 2.0 * unit_phase(h.phases[j])};
  }
  const auto val = chunk_products(h.k, factor);
  SparseMatrix m;
  m.rows = std::uint64_t{1} << (h.k * h.out);
  m.cols = std::uint64_t{1} << (h.k * h.in);
  check_nonzeros(static_cast<std::size_t>(m.rows * m.cols), options, describe(h));
  const std::uint64_t full = (std::uint64_t{1} << h.k) - 1;
  std::vector<Entry> column;
  for (std::uint64_t c = 0; c < m.cols; ++c) {
    const std::uint64_t ac = and_chunks(c, h.k, h.in, full);
    for (std::uint64_t r = 0; r < m.rows; ++r) {
      column.push_back({r, scale * val[and_chunks(r, h.k, h.out, ac)]});
    }
    m.push_column(column);
  }
  return m;
}

SparseMatrix function_arrow_sparse(const FunctionArrowGen& g) {
  const auto& f = g.f;
  const double scale = pow2_quarter(static_cast<long>(f.out_bits()) -
                                    static_cast<long>(f.in_bits()));
  SparseMatrix m;
  const std::uint64_t domain = std::uint64_t{1} << f.in_bits();
  const std::uint64_t codomain = std::uint64_t{1} << f.out_bits();
  std::vector<Entry> column;
  if (!g.adjoint) {
    m.rows = codomain;
    m.cols = domain;
    for (std::uint64_t x = 0; x < domain; ++x) {
      column.push_back({f(x), scale});
      m.push_column(column);
    }
    return m;
  }
  m.rows = domain;
  m.cols = codomain;
  // Group preimages by image, keeping x ascending within each group.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> by_image;
  by_image.reserve(domain);
  for (std::uint64_t x = 0; x < domain; ++x) by_image.emplace_back(f(x), x);
  std::sort(by_image.begin(), by_image.end());
  std::size_t pos = 0;
  for (std::uint64_t y = 0; y < codomain; ++y) {
    while (pos < by_image.size() && by_image[pos].first == y) {
      column.push_back({by_image[pos].second, scale});
      ++pos;
    }
    m.push_column(column);
  }
  return m;
}

SparseMatrix generator_sparse(const Generator& g, const EvalOptions& options) {
  const std::size_t dom = generator_domain(g).qubits();
  const std::size_t cod = generator_codomain(g).qubits();
  if (dom > options.max_wire_qubits || cod > options.max_wire_qubits) {
    throw SizeLimitError(describe(g) + ": wire of " + std::to_string(std::max(dom, cod)) +
                         " qubits exceeds the limit of " +
                         std::to_string(options.max_wire_qubits));
  }
  return std::visit(
      Overloaded{
          [](const WireGen& w) { return identity_sparse(w.n); },
          [](const SwapGen& s) {
            SparseMatrix m;
            m.rows = m.cols = std::uint64_t{1} << (s.n + s.m);
            std::vector<Entry> column;
            const std::uint64_t low_mask = (std::uint64_t{1} << s.m) - 1;
            for (std::uint64_t c = 0; c < m.cols; ++c) {
              const std::uint64_t x = c >> s.m;
              const std::uint64_t y = c & low_mask;
              column.push_back({(y << s.n) | x, 1.0});
              m.push_column(column);
            }
            return m;
          },
          [](const CupGen& c) {
            SparseMatrix m;
            m.rows = std::uint64_t{1} << (2 * c.n);
            m.cols = 1;
            std::vector<Entry> column;
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << c.n); ++x) {
              column.push_back({(x << c.n) | x, 1.0});
            }
            m.push_column(column);
            return m;
          },
          [](const CapGen& c) {
            SparseMatrix m;
            m.rows = 1;
            m.cols = std::uint64_t{1} << (2 * c.n);
            std::vector<Entry> column;
            const std::uint64_t low_mask = (std::uint64_t{1} << c.n) - 1;
            for (std::uint64_t col = 0; col < m.cols; ++col) {
              if ((col >> c.n) == (col & low_mask)) column.push_back({0, 1.0});
              m.push_column(column);
            }
            return m;
          },
          [](const DividerGen& d) { return identity_sparse(d.n + d.m); },
          [](const GathererGen& d) { return identity_sparse(d.n + d.m); },
          [&](const SpiderGen& s) {
            return s.color == SpiderColor::kGreen ? green_sparse(s) : red_sparse(s, options);
          },
          [&](const HarvestmanGen& h) { return harvestman_sparse(h, options); },
          [](const FunctionArrowGen& f) { return function_arrow_sparse(f); },
      },
      g);
}

// then * first, column by column with a fixed accumulation order.
SparseMatrix multiply(const SparseMatrix& then, const SparseMatrix& first,
                      const EvalOptions& options, const std::string& where) {
  SparseMatrix m;
  m.rows = then.rows;
  m.cols = first.cols;
  const bool dense_accumulator = then.rows <= (std::uint64_t{1} << 22);
  std::vector<Complex> acc;
  std::vector<bool> touched_flag;
  if (dense_accumulator) {
    acc.assign(then.rows, Complex{});
    touched_flag.assign(then.rows, false);
  }
  std::vector<std::uint64_t> touched;
  std::vector<Entry> column;
  for (std::uint64_t c = 0; c < first.cols; ++c) {
    for (std::size_t e = first.col_start[c]; e < first.col_start[c + 1]; ++e) {
      const auto& fe = first.entries[e];
      for (std::size_t t = then.col_start[fe.row]; t < then.col_start[fe.row + 1]; ++t) {
        const auto& te = then.entries[t];
        if (dense_accumulator) {
          if (!touched_flag[te.row]) {
            touched_flag[te.row] = true;
            touched.push_back(te.row);
          }
          acc[te.row] += te.value * fe.value;
        } else {
          column.push_back({te.row, te.value * fe.value});
        }
      }
    }
    if (dense_accumulator) {
      std::sort(touched.begin(), touched.end());
      for (auto r : touched) {
        if (acc[r] != Complex{}) column.push_back({r, acc[r]});
        acc[r] = Complex{};
        touched_flag[r] = false;
      }
      touched.clear();
    } else {
      std::stable_sort(column.begin(), column.end(),
                       [](const Entry& a, const Entry& b) { return a.row < b.row; });
      std::vector<Entry> merged;
      for (const auto& e : column) {
        if (!merged.empty() && merged.back().row == e.row) {
          merged.back().value += e.value;
        } else {
          merged.push_back(e);
        }
      }
      column.swap(merged);
    }
    m.push_column(column);
    check_nonzeros(m.nnz(), options, where);
  }
  return m;
}

SparseMatrix kron(const SparseMatrix& left, const SparseMatrix& right,
                  const EvalOptions& options, const std::string& where) {
  check_nonzeros(left.nnz() * right.nnz(), options, where);
  SparseMatrix m;
  m.rows = left.rows * right.rows;
  m.cols = left.cols * right.cols;
  m.entries.reserve(left.nnz() * right.nnz());
  m.col_start.reserve(m.cols + 1);
  std::vector<Entry> column;
  for (std::uint64_t cl = 0; cl < left.cols; ++cl) {
    for (std::uint64_t cr = 0; cr < right.cols; ++cr) {
      for (std::size_t i = left.col_start[cl]; i < left.col_start[cl + 1]; ++i) {
        for (std::size_t j = right.col_start[cr]; j < right.col_start[cr + 1]; ++j) {
          column.push_back({left.entries[i].row * right.rows + right.entries[j].row,
                            left.entries[i].value * right.entries[j].value});
        }
      }
      m.push_column(column);
    }
  }
  return m;
}

std::string describe_node(const Diagram& d) {
  if (d.is_generator()) return describe(d.generator());
  return std::string(d.is_seq() ? "seq" : "par") + " " + d.domain().str() + " -> " +
         d.codomain().str();
}

SparseMatrix eval_sparse(const Diagram& d, const EvalOptions& options) {
  if (d.domain().qubits() > options.max_wire_qubits ||
      d.codomain().qubits() > options.max_wire_qubits) {
    throw SizeLimitError(describe_node(d) + ": wire exceeds the limit of " +
                         std::to_string(options.max_wire_qubits) + " qubits");
  }
  if (d.is_generator()) {
    SparseMatrix m = generator_sparse(d.generator(), options);
    check_nonzeros(m.nnz(), options, describe_node(d));
    return m;
  }
  const SparseMatrix a = eval_sparse(d.lhs(), options);
  const SparseMatrix b = eval_sparse(d.rhs(), options);
  if (d.is_seq()) return multiply(b, a, options, describe_node(d));
  return kron(a, b, options, describe_node(d));
}

ComplexMatrix densify(const SparseMatrix& m, const EvalOptions& options,
                      const std::string& where) {
  if (m.rows > options.max_nonzeros || m.cols > options.max_nonzeros ||
      m.rows * m.cols > options.max_nonzeros) {
    throw SizeLimitError(where + ": dense result of " + std::to_string(m.rows) + "x" +
                         std::to_string(m.cols) + " exceeds the limit");
  }
  ComplexMatrix out(m.rows, m.cols);
  for (std::uint64_t c = 0; c < m.cols; ++c) {
    for (std::size_t e = m.col_start[c]; e < m.col_start[c + 1]; ++e) {
      out(m.entries[e].row, c) = m.entries[e].value;
    }
  }
  return out;
}

}  // namespace

ComplexMatrix eval_generator(const Generator& g, const EvalOptions& options) {
  return densify(generator_sparse(g, options), options, describe(g));
}

ComplexMatrix eval_diagram(const Diagram& d, const EvalOptions& options) {
  return densify(eval_sparse(d, options), options, describe_node(d));
}

// ---------------------------------------------------------------------------
// Builders

namespace zx {

Diagram wire(std::size_t n) { return Diagram(WireGen{n}); }

Diagram wire(const WireType& t) {
  if (t.registers().empty()) return wire(0);
  std::vector<Diagram> parts;
  for (auto r : t.registers()) parts.push_back(wire(r));
  return par(parts);
}

Diagram swap(std::size_t n, std::size_t m) { return Diagram(SwapGen{n, m}); }
Diagram cup(std::size_t n) { return Diagram(CupGen{n}); }
Diagram cap(std::size_t n) { return Diagram(CapGen{n}); }
Diagram divider(std::size_t n, std::size_t m) { return Diagram(DividerGen{n, m}); }
Diagram gatherer(std::size_t n, std::size_t m) { return Diagram(GathererGen{n, m}); }

Diagram green(std::size_t k, std::size_t in, std::size_t out,
              std::vector<Rational> phases) {
  return Diagram(SpiderGen{SpiderColor::kGreen, k, in, out,
                           reduce_phases(k, std::move(phases))});
}

Diagram red(std::size_t k, std::size_t in, std::size_t out,
            std::vector<Rational> phases) {
  return Diagram(SpiderGen{SpiderColor::kRed, k, in, out,
                           reduce_phases(k, std::move(phases))});
}

Diagram harvestman(std::size_t k, std::size_t in, std::size_t out,
                   std::vector<Rational> phases) {
  return Diagram(HarvestmanGen{k, in, out, reduce_phases(k, std::move(phases))});
}

Diagram function_arrow(const BooleanFunction& f) {
  return Diagram(FunctionArrowGen{f, false});
}

Diagram red_arrow(const F2Matrix& a) {
  return function_arrow(BooleanFunction::from_f2(a));
}

Diagram yellow_arrow(const BoolMatrix& a) {
  return function_arrow(BooleanFunction::from_boolean(a));
}

Diagram seq(const std::vector<Diagram>& parts) {
  if (parts.empty()) throw DimensionError("seq of no diagrams");
  Diagram d = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) d = Diagram::seq(d, parts[i]);
  return d;
}

Diagram seq(std::initializer_list<Diagram> parts) {
  return seq(std::vector<Diagram>(parts));
}

Diagram par(const std::vector<Diagram>& parts) {
  if (parts.empty()) throw DimensionError("par of no diagrams");
  Diagram d = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) d = Diagram::par(d, parts[i]);
  return d;
}

Diagram par(std::initializer_list<Diagram> parts) {
  return par(std::vector<Diagram>(parts));
}

Diagram basis_state(const BitVec& x) {
  std::vector<Rational> phases;
  for (std::size_t i = 0; i < x.size(); ++i) phases.emplace_back(x[i] ? 1 : 0);
  return red(x.size(), 0, 1, std::move(phases));
}

Diagram hadamard(std::size_t n) { return harvestman(n, 1, 1); }

}  // namespace zx

}  // namespace szx
