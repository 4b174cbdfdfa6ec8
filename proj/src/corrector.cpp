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

#include "sparsecode/corrector.hpp"

#include <string>
#include <vector>

#include "sparsecode/errors.hpp"

namespace sparsecode {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

const DualSlice& nonempty_slice(const CorrectorInstance& corrector, std::size_t i) {
  const DualSlice& slice = corrector.slice(i);
  if (slice.empty()) {
    throw NoCorrectionVectors("no dual word of weight " + idx(corrector.k()) +
                              " is non-zero at index " + idx(i));
  }
  return slice;
}

// Weight-k words in the dual of `code` with coordinates `drop` deleted.
Integer punctured_count(const LinearCode& code, std::span<const std::size_t> drop,
                        std::size_t k) {
  const std::size_t m = code.length() - drop.size();
  if (k > m) return 0;
  if (m == 0) return k == 0 ? 1 : 0;
  return dual_slice_count(puncture(code, drop), k);
}

// delta(C) * n >= 2, read as: no codeword of weight 1. Vacuous for {0}.
bool distance_two(const LinearCode& code) {
  const Profile prof = profile(code);
  const CodeProfile* p = as_code_profile(prof);
  return p == nullptr || p->min_weight >= 2;
}

void check_index(const LinearCode& code, std::size_t i) {
  if (i >= code.length()) throw IndexError("index " + idx(i) + " out of range");
}

}  // namespace

CorrectorInstance::CorrectorInstance(const LinearCode& code, std::size_t k)
    : code_(std::make_shared<const LinearCode>(code)), k_(k) {
  if (k == 0 || k > code.length()) {
    throw DomainError("corrector needs 0 < k <= n; got k=" + idx(k));
  }
}

const DualSlice& CorrectorInstance::slice(std::size_t i) const {
  check_index(*code_, i);
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = slices_.find(i);
  if (it == slices_.end()) {
    const std::size_t required[] = {i};
    it = slices_.emplace(i, std::make_unique<const DualSlice>(dual_slice(*code_, k_, required)))
             .first;
  }
  return *it->second;
}

CorrectionOutcome correct_with(const CorrectorInstance& corrector, std::size_t i,
                               std::size_t index, QueryOracle& oracle) {
  if (oracle.length() != corrector.length()) throw DomainError("word length mismatch");
  const FieldSpec field = corrector.code().field();
  const SparseWordView y = nonempty_slice(corrector, i).member(index);
  const std::size_t before = oracle.queries();
  Symbol y_i = 0;
  Symbol acc = 0;
  for (std::size_t t = 0; t < y.support.size(); ++t) {
    if (y.support[t] == i) {
      y_i = y.values[t];
      continue;
    }
    acc = field.add(acc, field.mul(y.values[t], oracle.read(y.support[t])));
  }
  const Symbol value = field.mul(field.inv(field.neg(y_i)), acc);
  return {value, oracle.queries() - before, index};
}

CorrectionOutcome run_corrector(const CorrectorInstance& corrector, std::size_t i,
                                QueryOracle& oracle, RandomSource& rng) {
  const DualSlice& slice = nonempty_slice(corrector, i);
  const auto index = static_cast<std::size_t>(rng.uniform(slice.size()));
  return correct_with(corrector, i, index, oracle);
}

namespace {

struct ErrorCounts {
  std::size_t errors = 0;
  std::size_t hits = 0;
  std::size_t total = 0;
};

ErrorCounts count_errors(const CorrectorInstance& corrector, const Word& v, const Word& truth,
                         std::size_t i) {
  const LinearCode& code = corrector.code();
  if (v.length() != code.length() || truth.length() != code.length()) {
    throw DomainError("word length mismatch");
  }
  if (!code.contains(truth)) throw PreconditionError("truth is not a codeword");
  const DualSlice& slice = nonempty_slice(corrector, i);
  const FieldSpec field = code.field();
  const Word e = v - truth;
  ErrorCounts counts;
  counts.total = slice.size();
  for (std::size_t m = 0; m < slice.size(); ++m) {
    const SparseWordView y = slice.member(m);
    Symbol acc = 0;
    bool hit = false;
    for (std::size_t t = 0; t < y.support.size(); ++t) {
      if (y.support[t] == i) continue;
      const Symbol ej = e[y.support[t]];
      hit = hit || ej != 0;
      acc = field.add(acc, field.mul(y.values[t], ej));
    }
    counts.errors += acc != 0;
    counts.hits += hit;
  }
  return counts;
}

}  // namespace

Rational correction_error_exact(const CorrectorInstance& corrector, const Word& v,
                                const Word& truth, std::size_t i) {
  const ErrorCounts c = count_errors(corrector, v, truth, i);
  return Rational(c.errors, c.total);
}

Rational support_hit_fraction(const CorrectorInstance& corrector, const Word& v,
                              const Word& truth, std::size_t i) {
  const ErrorCounts c = count_errors(corrector, v, truth, i);
  return Rational(c.hits, c.total);
}

MonteCarloEstimate correction_error_mc(const CorrectorInstance& corrector, const Word& v,
                                       const Word& truth, std::size_t i, std::uint64_t trials,
                                       std::uint64_t seed) {
  if (trials == 0) throw DomainError("Monte Carlo needs at least one trial");
  if (i >= truth.length()) throw IndexError("index " + idx(i) + " out of range");
  RandomSource rng(seed);
  std::uint64_t wrong = 0;
  for (std::uint64_t r = 0; r < trials; ++r) {
    QueryOracle oracle(v);
    wrong += run_corrector(corrector, i, oracle, rng).value != truth[i];
  }
  return make_estimate(trials, wrong, seed);
}

VerificationReport prop11_check(const LinearCode& code, std::size_t k, std::size_t i) {
  check_index(code, i);
  VerificationReport report;
  const bool met = report.hypothesis(
      "prop11.hyp_distance", distance_two(code),
      distance_two(code) ? "delta(C) n >= 2" : "hypothesis not met: C has a weight-1 word");
  const std::size_t at_i[] = {i};
  const Integer lhs = k > code.length() ? Integer(0) : dual_slice_count(code, k, at_i);
  const Integer all = k > code.length() ? Integer(0) : dual_slice_count(code, k);
  const Integer rhs = all - punctured_count(code, at_i, k);
  report.compare("prop11[k=" + idx(k) + ",i=" + idx(i) + "]", Rational(lhs), Relation::kEq,
                 Rational(rhs), met ? RowKind::kHard : RowKind::kGated,
                 "|[C^perp]_{k,i}| vs |[C^perp]_k| - |[(C^-i)^perp]_k|");
  return report;
}

VerificationReport prop12_check(const LinearCode& code, std::size_t k, std::size_t i,
                                std::size_t j) {
  check_index(code, i);
  check_index(code, j);
  if (i == j) throw IndexError("prop12 needs distinct indices; got " + idx(i) + " twice");
  VerificationReport report;
  const bool met = report.hypothesis(
      "prop12.hyp_distance", distance_two(code),
      distance_two(code) ? "delta(C) n >= 2" : "hypothesis not met: C has a weight-1 word");
  const std::size_t both[] = {i, j};
  const std::size_t only_i[] = {i};
  const std::size_t only_j[] = {j};
  const bool fits = k <= code.length();
  const Integer lhs = fits ? dual_slice_count(code, k, both) : Integer(0);
  const Integer rhs = (fits ? dual_slice_count(code, k) : Integer(0)) -
                      punctured_count(code, only_i, k) - punctured_count(code, only_j, k) +
                      punctured_count(code, both, k);
  report.compare("prop12[k=" + idx(k) + ",i=" + idx(i) + ",j=" + idx(j) + "]", Rational(lhs),
                 Relation::kEq, Rational(rhs), met ? RowKind::kHard : RowKind::kGated,
                 "|[C^perp]_{k,{i,j}}| vs inclusion-exclusion over punctured duals");
  return report;
}

Rational lemma13_probability(const LinearCode& code, std::size_t k, std::size_t i,
                             std::size_t j) {
  check_index(code, i);
  check_index(code, j);
  if (i == j) throw IndexError("lemma13 needs distinct indices; got " + idx(i) + " twice");
  if (k == 0 || k > code.length()) throw DomainError("lemma13 needs 0 < k <= n");
  const std::size_t at_i[] = {i};
  const std::size_t both[] = {i, j};
  const Integer den = dual_slice_count(code, k, at_i);
  if (den == 0) {
    throw NoCorrectionVectors("no dual word of weight " + idx(k) + " is non-zero at index " +
                              idx(i));
  }
  return Rational(dual_slice_count(code, k, both), den);
}

VerificationReport lemma13_report(const LinearCode& code, std::size_t k, std::size_t i,
                                  std::size_t j) {
  const Rational p = lemma13_probability(code, k, i, j);
  const Rational target(k - 1, code.length() - 1);
  VerificationReport report;
  report.compare("lemma13[k=" + idx(k) + ",i=" + idx(i) + ",j=" + idx(j) + "]", p,
                 Relation::kEq, target, RowKind::kInformational,
                 "Pr[y_j != 0 | y_i != 0] vs (k-1)/(n-1); deviation " + to_string(p - target));
  return report;
}

VerificationReport lemma14_bound_check(const CorrectorInstance& corrector, const Word& v,
                                       const Word& truth, std::size_t i,
                                       const Rational& slack) {
  const std::size_t n = corrector.length();
  const std::size_t k = corrector.k();
  const ErrorCounts c = count_errors(corrector, v, truth, i);
  const Rational error(c.errors, c.total);
  const Rational tau(hamming_distance(v, truth), n);
  const bool regime = tau < Rational(1, 2 * k);

  VerificationReport report;
  report.hypothesis("lemma14.hyp_tau[i=" + idx(i) + "]", regime,
                    regime ? "tau < 1/(2k)" : "hypothesis not met: tau >= 1/(2k)");
  report.compare("lemma14.support[i=" + idx(i) + "]", error, Relation::kLe,
                 Rational(c.hits, c.total), RowKind::kHard,
                 "error event implies supp(y) meets the corrupted set");
  report.compare("lemma14[i=" + idx(i) + "]", error, Relation::kLe,
                 Rational(k) * tau + slack, RowKind::kInformational,
                 "exact error vs k tau + slack, tau=" + to_string(tau) +
                     ", slack=" + to_string(slack) +
                     (regime ? "" : "; tau outside the theorem regime"));
  return report;
}

}  // namespace sparsecode
