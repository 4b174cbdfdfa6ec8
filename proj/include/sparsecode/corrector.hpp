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

// The canonical self-corrector: to recover coordinate i, draw y uniformly
// from the weight-k dual words with y_i != 0 and return
//
//   (-y_i)^{-1} * sum_{j != i} y_j v_j,
//
// which equals c_i whenever v agrees with the codeword c on supp(y) - {i}.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>

#include "sparsecode/code.hpp"
#include "sparsecode/exact.hpp"
#include "sparsecode/random.hpp"
#include "sparsecode/report.hpp"
#include "sparsecode/tester.hpp"

namespace sparsecode {

class CorrectorInstance {
 public:
  // Throws DomainError unless 0 < k <= n.
  CorrectorInstance(const LinearCode& code, std::size_t k);
  CorrectorInstance(const CorrectorInstance&) = delete;
  CorrectorInstance& operator=(const CorrectorInstance&) = delete;

  const LinearCode& code() const { return *code_; }
  std::size_t length() const { return code_->length(); }
  std::size_t k() const { return k_; }

  // Weight-k dual words non-zero at i, built on first use. Safe to call
  // concurrently. Throws IndexError for i >= n.
  const DualSlice& slice(std::size_t i) const;

 private:
  std::shared_ptr<const LinearCode> code_;
  std::size_t k_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, std::unique_ptr<const DualSlice>> slices_;
};

struct CorrectionOutcome {
  Symbol value = 0;
  std::size_t queries = 0;
  std::size_t vector_index = 0;
};

// Uses slice member `index` of [C^perp]_{k,i}.
CorrectionOutcome correct_with(const CorrectorInstance& corrector, std::size_t i,
                               std::size_t index, QueryOracle& oracle);
// Throws NoCorrectionVectors if [C^perp]_{k,i} is empty.
CorrectionOutcome run_corrector(const CorrectorInstance& corrector, std::size_t i,
                                QueryOracle& oracle, RandomSource& rng);

// Pr_y[sum_{j != i} y_j (v_j - truth_j) != 0]. Throws PreconditionError if
// truth is not a codeword, NoCorrectionVectors on an empty slice.
Rational correction_error_exact(const CorrectorInstance& corrector, const Word& v,
                                const Word& truth, std::size_t i);

// Fraction of slice members whose support minus {i} meets {j : v_j != truth_j}.
// Always >= correction_error_exact.
Rational support_hit_fraction(const CorrectorInstance& corrector, const Word& v,
                              const Word& truth, std::size_t i);

MonteCarloEstimate correction_error_mc(const CorrectorInstance& corrector, const Word& v,
                                       const Word& truth, std::size_t i, std::uint64_t trials,
                                       std::uint64_t seed);

// |[C^perp]_{k,i}| = |[C^perp]_k| - |[(C^{-i})^perp]_k|, both sides enumerated.
VerificationReport prop11_check(const LinearCode& code, std::size_t k, std::size_t i);

// Inclusion-exclusion for |[C^perp]_{k,{i,j}}|. Throws IndexError if i == j.
VerificationReport prop12_check(const LinearCode& code, std::size_t k, std::size_t i,
                                std::size_t j);

// Pr[y_j != 0] for y uniform in [C^perp]_{k,i}. Throws IndexError if i == j,
// NoCorrectionVectors on an empty slice.
Rational lemma13_probability(const LinearCode& code, std::size_t k, std::size_t i,
                             std::size_t j);
// Informational row: the probability against (k-1)/(n-1).
VerificationReport lemma13_report(const LinearCode& code, std::size_t k, std::size_t i,
                                  std::size_t j);

// Rows: exact error <= k * tau + slack with tau = delta(v, truth), plus the
// hard support-intersection bound. The tau < 1/(2k) hypothesis is a
// separate row, gated when unmet.
VerificationReport lemma14_bound_check(const CorrectorInstance& corrector, const Word& v,
                                       const Word& truth, std::size_t i,
                                       const Rational& slack);

}  // namespace sparsecode
