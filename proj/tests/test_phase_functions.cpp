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

#include <gtest/gtest.h>

#include <bit>

#include "szx/errors.hpp"
#include "szx/phase_functions.hpp"
#include "szx/random.hpp"

namespace szx {
namespace {

Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }

PhaseFunction pf(std::size_t n, std::initializer_list<Rational> values) {
  return PhaseFunction(n, std::vector<Rational>(values));
}

SymmetricPhaseFunction spf(std::size_t n, std::initializer_list<Rational> values) {
  return SymmetricPhaseFunction(n, std::vector<Rational>(values));
}

// Dense W^{(x)n}: entry (x, s) = 2^-n (-1)^{x.s}.
PhaseFunction dense_walsh(const PhaseFunction& f) {
  PhaseFunction out(f.qubits());
  const Rational scale = pow2(-static_cast<long>(f.qubits()));
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    Rational acc;
    for (std::uint64_t s = 0; s < f.size(); ++s) {
      acc += (std::popcount(x & s) % 2 == 0) ? f[s] : -f[s];
    }
    out[x] = acc * scale;
  }
  return out;
}

// Dense M^{(x)n}: entry (x, s) = (-1)^{|x|-|s|} when s <= x.
PhaseFunction dense_moebius(const PhaseFunction& f) {
  PhaseFunction out(f.qubits());
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    Rational acc;
    for (std::uint64_t s = 0; s < f.size(); ++s) {
      if ((s & x) != s) continue;
      acc += ((std::popcount(x) - std::popcount(s)) % 2 == 0) ? f[s] : -f[s];
    }
    out[x] = acc;
  }
  return out;
}

BigInt kravchuk_oracle(long n, long k, long m) {
  BigInt acc = 0;
  for (long j = 0; j <= k; ++j) {
    const BigInt term = binomial(m, j) * binomial(n - m, k - j);
    acc += (j % 2 == 0) ? term : BigInt(-term);
  }
  return acc;
}

TEST(Walsh, SpecExamples) {
  EXPECT_EQ(walsh(pf(1, {0, 1})), pf(1, {q(1, 2), q(-1, 2)}));
  EXPECT_EQ(walsh(pf(2, {0, 1, 1, 0})), pf(2, {q(1, 2), 0, 0, q(-1, 2)}));
  EXPECT_EQ(walsh(PhaseFunction(3)), PhaseFunction(3));
}

TEST(Walsh, ButterflyMatchesDenseMatrix) {
  Rng rng(21);
  for (std::size_t n = 0; n <= 6; ++n) {
    const PhaseFunction f = random_phase_function(rng, n, 5);
    EXPECT_EQ(walsh(f), dense_walsh(f));
  }
}

TEST(Walsh, RoundtripUpTo12) {
  Rng rng(22);
  for (std::size_t n = 0; n <= 12; ++n) {
    const PhaseFunction f = random_phase_function(rng, n, 4);
    EXPECT_EQ(walsh_inverse(walsh(f)), f);
    EXPECT_EQ(walsh(walsh_inverse(f)), f);
  }
}

TEST(Moebius, SpecExamples) {
  EXPECT_EQ(moebius(pf(1, {0, 1})), pf(1, {0, 1}));
  EXPECT_EQ(moebius(pf(1, {1, 1})), pf(1, {1, 0}));
  EXPECT_EQ(moebius(pf(2, {0, 0, 0, 1})), pf(2, {0, 0, 0, 1}));
  EXPECT_EQ(moebius(pf(2, {1, 1, 1, 1})), pf(2, {1, 0, 0, 0}));
}

TEST(Moebius, ButterflyMatchesDenseMatrix) {
  Rng rng(23);
  for (std::size_t n = 0; n <= 6; ++n) {
    const PhaseFunction f = random_phase_function(rng, n, 5);
    EXPECT_EQ(moebius(f), dense_moebius(f));
  }
}

TEST(Moebius, RoundtripUpTo12) {
  Rng rng(24);
  for (std::size_t n = 0; n <= 12; ++n) {
    const PhaseFunction f = random_phase_function(rng, n, 4);
    EXPECT_EQ(moebius_inverse(moebius(f)), f);
    EXPECT_EQ(moebius(moebius_inverse(f)), f);
  }
}

TEST(BasisEval, SpecExamples) {
  const BitVec s11 = BitVec::parse("11");
  const BitVec x10 = BitVec::parse("10");
  EXPECT_EQ(basis_eval(Basis::kOmega, s11, x10), q(1));
  EXPECT_EQ(basis_eval(Basis::kXi, s11, x10), q(0));
  EXPECT_EQ(basis_eval(Basis::kXi, BitVec::parse("00"), x10), q(1));
  EXPECT_EQ(basis_eval(Basis::kChi, x10, x10), q(-1));
  EXPECT_THROW(basis_eval(Basis::kChi, s11, BitVec::parse("1")), DimensionError);
}

TEST(BasisEval, CharactersAreOrthonormal) {
  for (std::size_t n = 0; n <= 6; ++n) {
    const std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < size; ++s) {
      for (std::uint64_t t = 0; t < size; ++t) {
        Rational acc;
        for (std::uint64_t x = 0; x < size; ++x) {
          const BitVec xv = BitVec::from_index(n, x);
          acc += basis_eval(Basis::kChi, BitVec::from_index(n, s), xv) *
                 basis_eval(Basis::kChi, BitVec::from_index(n, t), xv);
        }
        EXPECT_EQ(acc * pow2(-static_cast<long>(n)), q(s == t ? 1 : 0));
      }
    }
  }
}

TEST(Expansions, FourierAndMoebiusIdentities) {
  Rng rng(25);
  for (std::size_t n = 1; n <= 6; ++n) {
    const PhaseFunction f = random_phase_function(rng, n);
    const PhaseFunction hat = walsh(f);
    const PhaseFunction tilde = moebius(f);
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      const BitVec xv = BitVec::from_index(n, x);
      Rational chi_sum;
      Rational omega_sum = f[0];
      Rational xi_sum;
      for (std::uint64_t s = 0; s < f.size(); ++s) {
        const BitVec sv = BitVec::from_index(n, s);
        chi_sum += hat[s] * basis_eval(Basis::kChi, sv, xv);
        omega_sum -= q(2) * hat[s] * basis_eval(Basis::kOmega, sv, xv);
        xi_sum += tilde[s] * basis_eval(Basis::kXi, sv, xv);
      }
      EXPECT_EQ(chi_sum, f[x]);
      EXPECT_EQ(omega_sum, f[x]);
      EXPECT_EQ(xi_sum, f[x]);
    }
  }
}

TEST(Symmetric, ExpandExamples) {
  EXPECT_EQ(expand_symmetric(spf(1, {0, 1})), pf(1, {0, 1}));
  EXPECT_EQ(expand_symmetric(spf(2, {0, 1, 0})), pf(2, {0, 1, 1, 0}));
  EXPECT_EQ(restrict_symmetric(pf(2, {0, 1, 1, 0})), spf(2, {0, 1, 0}));
  EXPECT_THROW(restrict_symmetric(pf(2, {0, 1, 0, 0})), DomainError);
}

TEST(Symmetric, WalshPreservesSymmetry) {
  Rng rng(26);
  for (std::size_t n = 0; n <= 8; ++n) {
    const PhaseFunction hat = walsh(expand_symmetric(random_symmetric(rng, n)));
    EXPECT_NO_THROW(restrict_symmetric(hat));
  }
}

TEST(Binomial, SpecExamples) {
  SymmetricPhaseFunction ones(5);
  for (std::size_t m = 0; m <= 5; ++m) ones[m] = 1;
  EXPECT_EQ(binomial_transform(ones), spf(5, {1, 0, 0, 0, 0, 0}));

  SymmetricPhaseFunction g(5);
  for (std::size_t m = 0; m <= 5; ++m) g[m] = (m % 2 == 1) ? q(1, 4) : q(0);
  EXPECT_EQ(binomial_transform(g), spf(5, {0, q(1, 4), q(-1, 2), 1, -2, 4}));
}

TEST(Binomial, RoundtripAndMoebiusConsistency) {
  Rng rng(27);
  for (std::size_t n = 0; n <= 10; ++n) {
    const SymmetricPhaseFunction f = random_symmetric(rng, n);
    EXPECT_EQ(binomial_inverse(binomial_transform(f)), f);
    EXPECT_EQ(moebius(expand_symmetric(f)), expand_symmetric(binomial_transform(f)));
  }
}

TEST(Kravchuk, TableRows) {
  for (long n = 0; n <= 10; ++n) {
    for (long m = 0; m <= n; ++m) {
      EXPECT_EQ(kravchuk(n, 0, m), 1);
      EXPECT_EQ(kravchuk(n, n, m), (m % 2 == 0) ? 1 : -1);
      if (n >= 1) {
        EXPECT_EQ(kravchuk(n, 1, m), n - 2 * m);
      }
      for (long k = 0; k <= n; ++k) EXPECT_EQ(kravchuk(n, k, m), kravchuk_oracle(n, k, m));
    }
  }
  EXPECT_THROW(kravchuk(3, 4, 0), DomainError);
  EXPECT_THROW(kravchuk(3, 0, -1), DomainError);
}

TEST(Kravchuk, ReflectionAndOrthogonalityUpTo12) {
  for (long n = 0; n <= 12; ++n) {
    for (long k = 0; k <= n; ++k) {
      for (long m = 0; m <= n; ++m) {
        EXPECT_EQ(binomial(n, m) * kravchuk(n, k, m), binomial(n, k) * kravchuk(n, m, k));
      }
      for (long l = 0; l <= n; ++l) {
        BigInt acc = 0;
        for (long i = 0; i <= n; ++i) acc += binomial(n, i) * kravchuk(n, k, i) * kravchuk(n, l, i);
        const BigInt want = (k == l) ? BigInt(binomial(n, k) << static_cast<unsigned>(n)) : BigInt(0);
        EXPECT_EQ(acc, want);
      }
    }
  }
}

TEST(Kravchuk, TransformExamples) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const Rational beta = q(3, 7);
    SymmetricPhaseFunction h(n);
    h[n] = beta;
    const SymmetricPhaseFunction hat = kravchuk_transform(h);
    for (std::size_t m = 0; m <= n; ++m) {
      EXPECT_EQ(hat[m], beta * q(minus_one_pow(static_cast<long>(m))) *
                            pow2(-static_cast<long>(n)));
    }
    SymmetricPhaseFunction c(n);
    for (std::size_t m = 0; m <= n; ++m) c[m] = q(5, 3);
    SymmetricPhaseFunction want(n);
    want[0] = q(5, 3);
    EXPECT_EQ(kravchuk_transform(c), want);
  }
}

TEST(Kravchuk, CommutesWithWalshAndRoundtrips) {
  Rng rng(28);
  for (std::size_t n = 0; n <= 10; ++n) {
    const SymmetricPhaseFunction f = random_symmetric(rng, n);
    EXPECT_EQ(walsh(expand_symmetric(f)), expand_symmetric(kravchuk_transform(f)));
  }
  for (std::size_t n = 0; n <= 12; ++n) {
    const SymmetricPhaseFunction f = random_symmetric(rng, n);
    EXPECT_EQ(kravchuk_inverse(kravchuk_transform(f)), f);
  }
}

TEST(PhaseFunction, Validation) {
  EXPECT_THROW(PhaseFunction(2, std::vector<Rational>(3)), DimensionError);
  EXPECT_THROW(SymmetricPhaseFunction(2, std::vector<Rational>(2)), DimensionError);
  EXPECT_THROW(pf(1, {0, 1}) + PhaseFunction(2), DimensionError);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational::parse("-6/4"), q(-3, 2));
  EXPECT_EQ(Rational::parse("-6/4").str(), "-3/2");
  EXPECT_EQ(q(-1, 2).mod2(), q(3, 2));
  EXPECT_TRUE(q(-4).is_even_integer());
  EXPECT_FALSE(q(3).is_even_integer());
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("x"), ParseError);
  EXPECT_THROW(q(1) / q(0), DomainError);
  EXPECT_EQ(pow2(-3), q(1, 8));
}

}  // namespace
}  // namespace szx
