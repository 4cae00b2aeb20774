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

#include "szx/phase_functions.hpp"

#include <bit>
#include <string>
#include <utility>

#include "szx/boolean_core.hpp"
#include "szx/errors.hpp"

namespace szx {

PhaseFunction::PhaseFunction(std::size_t n) : n_(n) {
  if (n > kMaxPhaseQubits) {
    throw DimensionError("phase function on " + std::to_string(n) +
                         " qubits exceeds the tabulation limit");
  }
  values_.resize(std::size_t{1} << n);
}

PhaseFunction::PhaseFunction(std::size_t n, std::vector<Rational> values)
    : n_(n), values_(std::move(values)) {
  if (n > kMaxPhaseQubits) {
    throw DimensionError("phase function on " + std::to_string(n) +
                         " qubits exceeds the tabulation limit");
  }
  if (values_.size() != (std::size_t{1} << n)) {
    throw DimensionError("phase function needs 2^n values");
  }
}

const Rational& PhaseFunction::at(const BitVec& x) const {
  if (x.size() != n_) throw DimensionError("phase function argument length");
  return values_[x.to_index()];
}

PhaseFunction& PhaseFunction::operator+=(const PhaseFunction& other) {
  if (other.n_ != n_) throw DimensionError("phase functions on different sizes");
  for (std::size_t x = 0; x < values_.size(); ++x) values_[x] += other.values_[x];
  return *this;
}

PhaseFunction& PhaseFunction::operator-=(const PhaseFunction& other) {
  if (other.n_ != n_) throw DimensionError("phase functions on different sizes");
  for (std::size_t x = 0; x < values_.size(); ++x) values_[x] -= other.values_[x];
  return *this;
}

PhaseFunction& PhaseFunction::operator*=(const Rational& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

SymmetricPhaseFunction::SymmetricPhaseFunction(std::size_t n,
                                               std::vector<Rational> by_weight)
    : n_(n), by_weight_(std::move(by_weight)) {
  if (by_weight_.size() != n + 1) {
    throw DimensionError("symmetric phase function needs n + 1 values");
  }
}

namespace {

// Applies the 2x2 kernel `op(a, b) -> (a', b')` along every qubit, starting
// with the most significant one.
template <class Butterfly>
PhaseFunction butterfly(const PhaseFunction& f, Butterfly op) {
  std::vector<Rational> v = f.values();
  for (std::size_t half = v.size() >> 1U; half >= 1; half >>= 1U) {
    for (std::size_t block = 0; block < v.size(); block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        op(v[i], v[i + half]);
      }
    }
  }
  return PhaseFunction(f.qubits(), std::move(v));
}

const Rational kHalf(BigInt(1), BigInt(2));

}  // namespace

PhaseFunction walsh(const PhaseFunction& f) {
  return butterfly(f, [](Rational& a, Rational& b) {
    Rational sum = a + b;
    Rational diff = a - b;
    a = sum * kHalf;
    b = diff * kHalf;
  });
}

PhaseFunction walsh_inverse(const PhaseFunction& f) {
  return butterfly(f, [](Rational& a, Rational& b) {
    Rational sum = a + b;
    b = a - b;
    a = std::move(sum);
  });
}

PhaseFunction moebius(const PhaseFunction& f) {
  return butterfly(f, [](Rational& a, Rational& b) { b -= a; });
}

PhaseFunction moebius_inverse(const PhaseFunction& f) {
  return butterfly(f, [](Rational& a, Rational& b) { b += a; });
}

Rational basis_eval(Basis kind, const BitVec& s, const BitVec& x) {
  switch (kind) {
    case Basis::kOmega:
      return parity_dot(s, x) ? 1 : 0;
    case Basis::kXi:
      return is_subset(s, x) ? 1 : 0;
    case Basis::kChi:
      return parity_dot(s, x) ? -1 : 1;
  }
  throw DomainError("unknown basis");
}

PhaseFunction expand_symmetric(const SymmetricPhaseFunction& f) {
  PhaseFunction out(f.qubits());
  for (std::uint64_t x = 0; x < out.size(); ++x) {
    out[x] = f[static_cast<std::size_t>(std::popcount(x))];
  }
  return out;
}

SymmetricPhaseFunction restrict_symmetric(const PhaseFunction& f) {
  const std::size_t n = f.qubits();
  SymmetricPhaseFunction out(n);
  std::vector<bool> seen(n + 1, false);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const auto w = static_cast<std::size_t>(std::popcount(x));
    if (!seen[w]) {
      out[w] = f[x];
      seen[w] = true;
    } else if (!(out[w] == f[x])) {
      throw DomainError("phase function is not symmetric");
    }
  }
  return out;
}

SymmetricPhaseFunction binomial_transform(const SymmetricPhaseFunction& f) {
  const std::size_t n = f.qubits();
  SymmetricPhaseFunction out(n);
  for (std::size_t m = 0; m <= n; ++m) {
    Rational acc;
    for (std::size_t k = 0; k <= m; ++k) {
      Rational term = f[k] * Rational(binomial(static_cast<long>(m), static_cast<long>(k)));
      if ((m - k) % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    out[m] = std::move(acc);
  }
  return out;
}

SymmetricPhaseFunction binomial_inverse(const SymmetricPhaseFunction& f) {
  const std::size_t n = f.qubits();
  SymmetricPhaseFunction out(n);
  for (std::size_t m = 0; m <= n; ++m) {
    Rational acc;
    for (std::size_t k = 0; k <= m; ++k) {
      acc += f[k] * Rational(binomial(static_cast<long>(m), static_cast<long>(k)));
    }
    out[m] = std::move(acc);
  }
  return out;
}

BigInt kravchuk(long n, long k, long m) {
  if (n < 0 || k < 0 || m < 0 || k > n || m > n) {
    throw DomainError("kravchuk: need 0 <= k, m <= n");
  }
  BigInt acc = 0;
  for (long j = 0; j <= k; ++j) {
    BigInt term = binomial(m, j) * binomial(n - m, k - j);
    if (j % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

std::vector<std::vector<BigInt>> kravchuk_table(std::size_t n) {
  const auto nl = static_cast<long>(n);
  std::vector<std::vector<BigInt>> table(n + 1, std::vector<BigInt>(n + 1));
  for (long k = 0; k <= nl; ++k) {
    for (long m = 0; m <= nl; ++m) table[k][m] = kravchuk(nl, k, m);
  }
  return table;
}

SymmetricPhaseFunction kravchuk_transform(const SymmetricPhaseFunction& f) {
  const std::size_t n = f.qubits();
  const auto table = kravchuk_table(n);
  const Rational scale = pow2(-static_cast<long>(n));
  SymmetricPhaseFunction out(n);
  for (std::size_t m = 0; m <= n; ++m) {
    Rational acc;
    for (std::size_t k = 0; k <= n; ++k) acc += f[k] * Rational(table[k][m]);
    out[m] = acc * scale;
  }
  return out;
}

SymmetricPhaseFunction kravchuk_inverse(const SymmetricPhaseFunction& f) {
  const std::size_t n = f.qubits();
  const auto table = kravchuk_table(n);
  SymmetricPhaseFunction out(n);
  for (std::size_t m = 0; m <= n; ++m) {
    Rational acc;
    for (std::size_t k = 0; k <= n; ++k) acc += f[k] * Rational(table[k][m]);
    out[m] = std::move(acc);
  }
  return out;
}

}  // namespace szx
