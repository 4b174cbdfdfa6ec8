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

// q-ary Krawtchouk polynomials
//
//   P_k(i; q, n) = sum_{l=0}^{k} C(i,l) C(n-i,k-l) (-1)^l (q-1)^(k-l)
//
// evaluated exactly, their root-location bounds, and the MacWilliams
// transform B_k(C^perp) = (1/|C|) sum_i B_i(C) P_k(i).

#pragma once

#include <cstddef>
#include <vector>

#include "sparsecode/code.hpp"
#include "sparsecode/exact.hpp"
#include "sparsecode/report.hpp"

namespace sparsecode {

// Defining sum. Throws DomainError unless 0 <= k,i <= n and q >= 2.
Integer krawtchouk(std::size_t k, std::size_t i, std::uint64_t q, std::size_t n);

// Defining sum with the alphabet size replaced by a rational s > 1.
Rational krawtchouk(std::size_t k, std::size_t i, const Rational& s, std::size_t n);

class KrawtchoukTable {
 public:
  // Rows k = 0..k_max, filled with the three-term recurrence
  //   (k+1) P_{k+1}(i) = ((q-1)(n-k) + k - q i) P_k(i) - (q-1)(n-k+1) P_{k-1}(i).
  KrawtchoukTable(std::uint64_t q, std::size_t n, std::size_t k_max);

  std::uint64_t q() const { return q_; }
  std::size_t n() const { return n_; }
  std::size_t k_max() const { return k_max_; }
  const Integer& operator()(std::size_t k, std::size_t i) const {
    return values_[k * (n_ + 1) + i];
  }

 private:
  std::uint64_t q_;
  std::size_t n_;
  std::size_t k_max_;
  std::vector<Integer> values_;
};

// mu1, mu2 = (1 - 1/q) n - k (1 - 2/q) -/+ (2/q) sqrt((q-1) k (n-k)).
struct RootInterval {
  QuadraticSurd mu1;
  QuadraticSurd mu2;
  Interval mu1_enclosure;
  Interval mu2_enclosure;
};

// Throws DomainError unless 1 <= k <= n.
RootInterval root_interval(std::size_t k, std::uint64_t q, std::size_t n);

// Dual weight distribution. Throws MacWilliamsViolation when a coefficient
// is fractional or negative, i.e. `weights` cannot belong to a linear code.
WeightDistribution macwilliams_transform(const WeightDistribution& weights,
                                         const Integer& code_size, std::uint64_t q,
                                         std::size_t n);

// Exact checks of the Krawtchouk identities and bounds for k <= k_max:
// Property 1, recurrence vs defining sum, Property 2, orthogonality, the
// root-location consequences (positivity below mu1, sign changes, 4c) and
// the magnitude bounds 4a/4b. Failures are rows, not exceptions.
VerificationReport verify_krawtchouk_properties(std::uint64_t q, std::size_t n,
                                                std::size_t k_max);

}  // namespace sparsecode
