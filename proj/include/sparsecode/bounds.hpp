// Copyright 2026 The sparsecode Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Finite-n checks of the weight-distribution bounds behind the tester.
//
// Claims that only hold "for sufficiently large n" are emitted as
// informational rows with exact left/right sides; finite claims about the
// concrete code are hard rows. Thresholds such as (1-1/q)n - n^{1-gamma}
// are irrational in general: window endpoints are rounded inward (ceil on
// lower limits, floor on upper limits) and every comparison against a power
// of n is decided exactly.

#pragma once

#include <cstddef>
#include <cstdint>

#include "sparsecode/code.hpp"
#include "sparsecode/exact.hpp"
#include "sparsecode/report.hpp"

namespace sparsecode {

struct BoundsParams {
  Rational t = 1;              // sparsity exponent: |C| <= n^t
  Rational gamma = 1;          // bias exponent: eps <= n^{-gamma}
  Rational gamma_prime{1, 2};  // <= gamma / 2
  Rational c = 1;              // target error exponent
  Rational delta{1, 4};        // distance parameter, [0, 1/2]
  Rational tau{1, 4};          // closeness parameter, [0, 1/2)

  // gamma_prime defaults to gamma / 2. Throws DomainError on invalid values.
  static BoundsParams make(Rational t, Rational gamma, Rational c, Rational delta,
                           Rational tau);
  void validate() const;
};

// Smallest weight window [lo, hi] around the mean weight (1-1/q)n with
// half-width n^{exponent}, rounded inward and clipped to [0, n].
struct WeightWindow {
  Integer lo;
  Integer hi;
};
WeightWindow weight_window(std::uint64_t q, std::size_t n, const Rational& exponent);

VerificationReport verify_prop4(const LinearCode& code, const BoundsParams& params);

// Throws PreconditionError if k < (t + c + 1) / gamma, DomainError if k > n.
VerificationReport claim5_sum(const WeightDistribution& weights, std::size_t k,
                              const BoundsParams& params, std::uint64_t q, std::size_t n);

// B_k(C^perp) |C| / P_k(0) - 1. Throws DomainError unless 1 <= k <= n.
Rational lemma6_deviation(const LinearCode& code, std::size_t k);
VerificationReport lemma6_report(const LinearCode& code, std::size_t k, const Rational& slack);

// P_k(tau n) <= (1 - tau)^k P_k(0), at floor/ceil of tau n when fractional.
VerificationReport lemma8_check(std::size_t k, const Rational& tau, std::uint64_t q,
                                std::size_t n);

// m_i = q n^2 / (n - q i / (q-1))^2. Throws DomainError if the base is <= 0.
Rational johnson_count_bound(std::size_t i, std::uint64_t q, std::size_t n);

// Throws DomainError unless 2 <= k <= n.
VerificationReport lemma9_sum_check(const LinearCode& code, std::size_t k,
                                    const BoundsParams& params);

// Throws PreconditionError if v is a codeword.
VerificationReport lemma10_check(const LinearCode& code, const Word& v, std::size_t k);

// Smallest odd k >= max{ceil((t+c+1)/gamma), 16(q^2+q), ceil(2 + 2q/(q-1))}.
std::uint64_t select_test_weight(const BoundsParams& params, std::uint64_t q);

}  // namespace sparsecode
