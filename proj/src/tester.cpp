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

#include "sparsecode/tester.hpp"

#include <cmath>
#include <string>

#include "sparsecode/errors.hpp"
#include "sparsecode/krawtchouk.hpp"

namespace sparsecode {

namespace {

Symbol pairing(FieldSpec field, const SparseWordView& y, const Word& v) {
  Symbol acc = 0;
  for (std::size_t t = 0; t < y.support.size(); ++t) {
    acc = field.add(acc, field.mul(y.values[t], v[y.support[t]]));
  }
  return acc;
}

Integer checked_dual_count(const LinearCode& code, std::size_t k) {
  Integer enumerated = dual_slice_count(code, k);
  const WeightDistribution dual = macwilliams_transform(
      weight_distribution(code), code.size(), code.q(), code.length());
  if (dual.counts[k] != enumerated) {
    throw MacWilliamsViolation("B_" + std::to_string(k) + " of the dual: enumeration gives " +
                               to_string(enumerated) + ", transform gives " +
                               to_string(dual.counts[k]));
  }
  return enumerated;
}

}  // namespace

Symbol QueryOracle::read(std::size_t j) {
  if (j >= word_->length()) throw IndexError("oracle read at " + std::to_string(j));
  touched_.push_back(j);
  return (*word_)[j];
}

TesterInstance TesterInstance::create(const LinearCode& code, std::size_t k) {
  if (k == 0 || k > code.length()) {
    throw DomainError("tester needs 0 < k <= n; got k=" + std::to_string(k));
  }
  auto slice = std::make_shared<const DualSlice>(dual_slice(code, k));
  if (slice->empty()) {
    throw NoTestVectors("the dual code has no word of weight " + std::to_string(k));
  }
  return TesterInstance(std::move(slice));
}

TestOutcome test_with(const TesterInstance& tester, std::size_t index, QueryOracle& oracle) {
  if (oracle.length() != tester.length()) throw DomainError("word length mismatch");
  const FieldSpec field = tester.field();
  const SparseWordView y = tester.slice().member(index);
  const std::size_t before = oracle.queries();
  Symbol acc = 0;
  for (std::size_t t = 0; t < y.support.size(); ++t) {
    acc = field.add(acc, field.mul(y.values[t], oracle.read(y.support[t])));
  }
  return {acc == 0, oracle.queries() - before, index};
}

TestOutcome run_tester(const TesterInstance& tester, QueryOracle& oracle, RandomSource& rng) {
  const auto index = static_cast<std::size_t>(rng.uniform(tester.slice().size()));
  return test_with(tester, index, oracle);
}

TestOutcome run_tester(const TesterInstance& tester, const Word& v, RandomSource& rng) {
  QueryOracle oracle(v);
  return run_tester(tester, oracle, rng);
}

Rational rejection_probability_exact(const LinearCode& code, std::size_t k, const Word& v) {
  if (v.length() != code.length()) throw DomainError("word length mismatch");
  if (k == 0 || k > code.length()) {
    throw DomainError("rejection probability needs 0 < k <= n; got k=" + std::to_string(k));
  }
  if (code.contains(v)) return 0;
  const Integer base = checked_dual_count(code, k);
  if (base == 0) {
    throw NoTestVectors("the dual code has no word of weight " + std::to_string(k));
  }
  const Integer extended = checked_dual_count(span_with(code, v), k);
  return 1 - Rational(extended, base);
}

Rational rejection_probability(const TesterInstance& tester, const Word& v) {
  if (v.length() != tester.length()) throw DomainError("word length mismatch");
  const DualSlice& slice = tester.slice();
  std::size_t rejected = 0;
  for (std::size_t m = 0; m < slice.size(); ++m) {
    rejected += pairing(tester.field(), slice.member(m), v) != 0;
  }
  return Rational(rejected, slice.size());
}

MonteCarloEstimate make_estimate(std::uint64_t trials, std::uint64_t events,
                                 std::uint64_t seed) {
  MonteCarloEstimate est;
  est.trials = trials;
  est.events = events;
  est.seed = seed;
  est.estimate = Rational(events, trials);
  const double p = static_cast<double>(events) / static_cast<double>(trials);
  est.standard_error = std::sqrt(p * (1 - p) / static_cast<double>(trials));
  return est;
}

MonteCarloEstimate rejection_probability_mc(const TesterInstance& tester, const Word& v,
                                            std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw DomainError("Monte Carlo needs at least one trial");
  RandomSource rng(seed);
  std::uint64_t rejected = 0;
  for (std::uint64_t r = 0; r < trials; ++r) {
    rejected += !run_tester(tester, v, rng).accepted;
  }
  return make_estimate(trials, rejected, seed);
}

SoundnessResult soundness_profile(const LinearCode& code, std::size_t k,
                                  std::span<const Word> sample) {
  const TesterInstance tester = TesterInstance::create(code, k);
  const std::size_t n = code.length();
  const Integer space = ipow(Integer(code.q()), n);
  const bool exhaustive = space <= kMaxSoundnessScan;
  if (!exhaustive && sample.empty()) {
    throw ScanTooLarge("q^n = " + to_string(space) + " exceeds the exhaustive scan limit " +
                       std::to_string(kMaxSoundnessScan) + " and no sample was given");
  }

  SoundnessResult result;
  auto visit = [&](const Word& v) {
    const std::size_t dist = distance_to_code(code, v);
    if (dist == 0) return;
    ++result.scanned;
    const Rational ratio = rejection_probability(tester, v) / Rational(dist, n);
    if (result.empty_domain || ratio < result.min_ratio) {
      result.empty_domain = false;
      result.min_ratio = ratio;
      result.witness = v;
    }
  };

  if (!exhaustive) {
    for (const Word& v : sample) visit(v);
    return result;
  }
  std::vector<Symbol> digits(n, 0);
  for (;;) {
    visit(Word(code.field(), digits));
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (++digits[j] < code.q()) break;
      digits[j] = 0;
      if (j == 0) return result;
    }
  }
}

}  // namespace sparsecode
