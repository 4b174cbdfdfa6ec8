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

// The canonical k-query tester: draw y uniformly from the weight-k dual
// words and accept iff <y, v> = 0.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "sparsecode/code.hpp"
#include "sparsecode/exact.hpp"
#include "sparsecode/random.hpp"

namespace sparsecode {

// Word access that counts every coordinate read.
class QueryOracle {
 public:
  explicit QueryOracle(const Word& word) : word_(&word) {}

  // Throws IndexError for j >= length().
  Symbol read(std::size_t j);
  std::size_t length() const { return word_->length(); }
  std::size_t queries() const { return touched_.size(); }
  // Positions in read order, repeats included.
  const std::vector<std::size_t>& touched() const { return touched_; }

 private:
  const Word* word_;
  std::vector<std::size_t> touched_;
};

class TesterInstance {
 public:
  // Throws DomainError unless 0 < k <= n, NoTestVectors if the slice is empty.
  static TesterInstance create(const LinearCode& code, std::size_t k);

  FieldSpec field() const { return slice_->field(); }
  std::size_t length() const { return slice_->length(); }
  std::size_t k() const { return slice_->k(); }
  const DualSlice& slice() const { return *slice_; }

 private:
  explicit TesterInstance(std::shared_ptr<const DualSlice> slice) : slice_(std::move(slice)) {}

  std::shared_ptr<const DualSlice> slice_;
};

struct TestOutcome {
  bool accepted = false;
  std::size_t queries = 0;
  std::size_t vector_index = 0;
};

// Runs the test with slice member `index`.
TestOutcome test_with(const TesterInstance& tester, std::size_t index, QueryOracle& oracle);
TestOutcome run_tester(const TesterInstance& tester, QueryOracle& oracle, RandomSource& rng);
TestOutcome run_tester(const TesterInstance& tester, const Word& v, RandomSource& rng);

// 1 - B_k((C||v)^perp) / B_k(C^perp), both counts enumerated and each
// cross-checked against the transform of the primal distribution (mismatch
// throws MacWilliamsViolation). Returns 0 for v in C. Throws NoTestVectors
// when C^perp has no weight-k word.
Rational rejection_probability_exact(const LinearCode& code, std::size_t k, const Word& v);

// Fraction of slice members with <y, v> != 0.
Rational rejection_probability(const TesterInstance& tester, const Word& v);

struct MonteCarloEstimate {
  std::uint64_t trials = 0;
  std::uint64_t events = 0;
  Rational estimate;
  double standard_error = 0;  // sqrt(p(1-p)/trials)
  std::uint64_t seed = 0;
};

MonteCarloEstimate make_estimate(std::uint64_t trials, std::uint64_t events,
                                 std::uint64_t seed);

// Throws DomainError for trials == 0.
MonteCarloEstimate rejection_probability_mc(const TesterInstance& tester, const Word& v,
                                            std::uint64_t trials, std::uint64_t seed);

struct SoundnessResult {
  bool empty_domain = true;  // no v outside C was examined
  Rational min_ratio;        // min Rej_k(v) / delta(v, C)
  std::optional<Word> witness;
  std::uint64_t scanned = 0;
};

inline constexpr std::uint64_t kMaxSoundnessScan = 10'000'000;

// Exhaustive over F_q^n when q^n <= kMaxSoundnessScan; otherwise `sample`
// must be non-empty (ScanTooLarge if not) and only it is scanned.
SoundnessResult soundness_profile(const LinearCode& code, std::size_t k,
                                  std::span<const Word> sample = {});

}  // namespace sparsecode
