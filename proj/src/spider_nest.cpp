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

#include "szx/spider_nest.hpp"

#include <bit>
#include <string>

#include "szx/boolean_core.hpp"
#include "szx/diagonal_gates.hpp"
#include "szx/diagrams.hpp"
#include "szx/errors.hpp"

namespace szx {

namespace {

Rational frac(long p, long q) { return Rational(BigInt(p), BigInt(q)); }

}  // namespace

NestReport nest_check(const SymmetricPhaseFunction& s_hat) {
  if (s_hat.qubits() > kMaxNestQubits) {
    throw DomainError("nest_check: n above " + std::to_string(kMaxNestQubits));
  }
  const SymmetricPhaseFunction s = kravchuk_inverse(s_hat);
  NestReport report;
  report.n = s_hat.qubits();
  report.s_values = s.by_weight();
  report.global_phase_exponent = s[0].mod2();
  report.is_identity = true;
  for (std::size_t m = 0; m <= report.n; ++m) {
    report.residues.push_back(s[m].mod2());
    if (!(report.residues.back() == report.global_phase_exponent)) {
      report.is_identity = false;
    }
  }
  return report;
}

SymmetricPhaseFunction gadget_phases_to_spectrum(const SymmetricPhaseFunction& phases) {
  SymmetricPhaseFunction out(phases.qubits());
  for (std::size_t k = 0; k <= phases.qubits(); ++k) out[k] = phases[k] * frac(-1, 2);
  return out;
}

SymmetricPhaseFunction spectrum_to_gadget_phases(const SymmetricPhaseFunction& s_hat) {
  SymmetricPhaseFunction out(s_hat.qubits());
  for (std::size_t k = 0; k <= s_hat.qubits(); ++k) out[k] = s_hat[k] * Rational(-2);
  return out;
}

SymmetricPhaseFunction family_de2020fast(std::size_t n) {
  if (n < 4) throw DomainError("family_de2020fast: needs n >= 4");
  const auto nl = static_cast<long>(n);
  SymmetricPhaseFunction s(n);
  s[1] = frac((nl - 2) * (nl - 3), 16);
  s[2] = frac(-(nl - 3), 8);
  s[3] = frac(1, 8);
  s[n] = frac(-1, 8);
  return s;
}

Rational closed_form_S_prime(long m) {
  if (m < 0) throw DomainError("closed_form_S_prime: m < 0");
  const Rational mr(m);
  return Rational(-1) * mr * mr * mr * frac(1, 6) + frac(3, 4) * mr * mr -
         frac(5, 6) * mr - frac(minus_one_pow(m), 8);
}

Rational closed_form_S(long n, long m) {
  if (n < 4 || m < 0 || m > n) throw DomainError("closed_form_S: need n >= 4, 0 <= m <= n");
  const Rational nr(n);
  return closed_form_S_prime(m) + nr * nr * nr * frac(1, 48) - nr * nr * frac(1, 8) +
         nr * frac(11, 48);
}

MunsonReport munson_check(const Rational& alpha, std::size_t n) {
  if (n < 1 || n > kMaxPhaseQubits) throw DomainError("munson_check: n out of range");
  SymmetricPhaseFunction g(n);
  for (std::size_t m = 0; m <= n; ++m) g[m] = (m % 2 == 1) ? alpha : Rational(0);
  const SymmetricPhaseFunction g_tilde = binomial_transform(g);

  MunsonReport report;
  report.n = n;
  report.alpha = alpha;
  report.g_tilde = g_tilde.by_weight();
  for (std::size_t m = 0; m <= n; ++m) {
    report.residues.push_back(g_tilde[m].mod2());
    if (m >= 1 && !report.residues.back().is_zero()) report.residual_weights.push_back(m);
  }

  // Hyperedge composition with the reduced phases, against the single gadget.
  PhaseFunction coefficients(n);
  for (std::uint64_t s = 1; s < coefficients.size(); ++s) {
    coefficients[s] = report.residues[static_cast<std::size_t>(std::popcount(s))];
  }
  coefficients[0] = report.residues[0];
  const PhaseFunction hyperedges = moebius_inverse(coefficients);
  const PhaseFunction gadget =
      terms_phasefn(TermList{TermKind::kGadget, n, {{BitVec::ones(n), alpha}}});
  report.is_identity = gate_equal(gadget, hyperedges);
  return report;
}

namespace {

// #{s : |s| = k, |s & x| odd} for |x| = w.
BigInt odd_overlap_count(long n, long k, long w) {
  BigInt count = 0;
  for (long j = 1; j <= k; j += 2) count += binomial(w, j) * binomial(n - w, k - j);
  return count;
}

}  // namespace

bool nest_numeric(const SymmetricPhaseFunction& s_hat) {
  const std::size_t n = s_hat.qubits();
  if (n > kMaxNumericNestQubits) {
    throw SizeLimitError("nest_numeric: n above " + std::to_string(kMaxNumericNestQubits));
  }
  const auto nl = static_cast<long>(n);
  for (long w = 0; w <= nl; ++w) {
    Rational t;
    for (long k = 1; k <= nl; ++k) {
      t += Rational(-2) * s_hat[static_cast<std::size_t>(k)] *
           Rational(odd_overlap_count(nl, k, w));
    }
    if (!t.is_even_integer()) return false;
  }
  return true;
}

bool nest_brute_force(const SymmetricPhaseFunction& s_hat) {
  const std::size_t n = s_hat.qubits();
  if (n > 12) throw SizeLimitError("nest_brute_force: n above 12");
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<Rational> phase(n + 1);
  for (std::size_t k = 0; k <= n; ++k) phase[k] = Rational(-2) * s_hat[k];
  for (std::uint64_t x = 0; x < size; ++x) {
    Rational t;
    for (std::uint64_t s = 1; s < size; ++s) {
      if (std::popcount(s & x) % 2 == 1) t += phase[static_cast<std::size_t>(std::popcount(s))];
    }
    if (!t.is_even_integer()) return false;
  }
  return true;
}

Diagram nest_gadget_diagram(const SymmetricPhaseFunction& s_hat) {
  const std::size_t n = s_hat.qubits();
  TermList terms{TermKind::kGadget, n, {}};
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const Rational a = Rational(-2) * s_hat[static_cast<std::size_t>(std::popcount(s))];
    if (!a.is_zero()) terms.terms.push_back({BitVec::from_index(n, s), a});
  }
  return terms_diagram(terms);
}

}  // namespace szx
