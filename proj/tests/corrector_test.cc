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

#include <algorithm>
#include <cmath>
#include <thread>

#include <gtest/gtest.h>

#include "sparsecode/cli.hpp"
#include "sparsecode/errors.hpp"
#include "test_codes.hpp"

namespace sparsecode {
namespace {

using testing::repetition3;

Word w(const LinearCode& c, std::vector<Symbol> s) { return Word(c.field(), std::move(s)); }

TEST(Corrector, Construction) {
  const CorrectorInstance c(repetition3(), 2);
  EXPECT_EQ(c.slice(0).size(), 4u);
  EXPECT_THROW(c.slice(3), IndexError);
  EXPECT_THROW(CorrectorInstance(repetition3(), 0), DomainError);
  EXPECT_THROW(CorrectorInstance(repetition3(), 4), DomainError);
  const LinearCode full = testing::make_code(3, 2, {{1, 0}, {0, 1}});
  const CorrectorInstance cf(full, 1);
  QueryOracle o(w(full, {1, 2}));
  RandomSource rng(1);
  EXPECT_THROW(run_corrector(cf, 0, o, rng), NoCorrectionVectors);
}

TEST(Corrector, RepetitionErrors) {
  const LinearCode rep = repetition3();
  const CorrectorInstance c(rep, 2);
  const Word truth = w(rep, {1, 1, 1});
  const Word v = w(rep, {1, 1, 2});
  EXPECT_EQ(correction_error_exact(c, v, truth, 0), Rational(1, 2));
  EXPECT_EQ(correction_error_exact(c, v, truth, 1), Rational(1, 2));
  EXPECT_EQ(correction_error_exact(c, v, truth, 2), 0);
  EXPECT_THROW(correction_error_exact(c, v, v, 0), PreconditionError);
}

TEST(Corrector, Q5N6Errors) {
  const LinearCode code = testing::q5n6();
  const CorrectorInstance c(code, 3);
  const Word truth = w(code, {1, 2, 3, 4, 0, 1});
  const Word v = w(code, {1, 2, 3, 4, 2, 1});
  ASSERT_TRUE(code.contains(truth));
  const Rational expected[] = {Rational(4, 9), Rational(1, 2), Rational(4, 9),
                               Rational(1, 2), Rational(0),    Rational(4, 9)};
  const std::size_t sizes[] = {36, 24, 36, 24, 36, 36};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(c.slice(i).size(), sizes[i]) << i;
    EXPECT_EQ(correction_error_exact(c, v, truth, i), expected[i]) << i;
  }
}

TEST(Corrector, ExactOnCodewords) {
  for (const LinearCode& code : {repetition3(), testing::q5n6(), testing::q3n7()}) {
    for (std::size_t k = 2; k <= 4 && k <= code.length(); ++k) {
      const CorrectorInstance c(code, k);
      for (const Word& truth : code.codewords()) {
        for (std::size_t i = 0; i < code.length(); ++i) {
          const DualSlice& s = c.slice(i);
          for (std::size_t m = 0; m < s.size(); ++m) {
            QueryOracle o(truth);
            ASSERT_EQ(correct_with(c, i, m, o).value, truth[i]);
          }
        }
      }
    }
  }
}

TEST(Corrector, FormulaNeedsDualCoefficients) {
  // Dropping y_j from the sum gives wrong answers on a non-binary code.
  const LinearCode code = testing::q5n6();
  const FieldSpec f = code.field();
  const CorrectorInstance c(code, 3);
  const Word truth = w(code, {1, 2, 3, 4, 0, 1});
  const DualSlice& s = c.slice(0);
  std::size_t wrong = 0;
  for (std::size_t m = 0; m < s.size(); ++m) {
    const SparseWordView y = s.member(m);
    Symbol y0 = 0;
    Symbol acc = 0;
    for (std::size_t t = 0; t < y.support.size(); ++t) {
      if (y.support[t] == 0) {
        y0 = y.values[t];
      } else {
        acc = f.add(acc, truth[y.support[t]]);
      }
    }
    wrong += f.mul(f.inv(f.neg(y0)), acc) != truth[0];
  }
  EXPECT_GT(wrong, 0u);
}

TEST(Corrector, QueriesAvoidTargetIndex) {
  const LinearCode code = testing::q3n7();
  const Word v = w(code, {0, 1, 2, 0, 1, 2, 0});
  for (std::size_t k = 2; k <= 5; ++k) {
    const CorrectorInstance c(code, k);
    RandomSource rng(k);
    for (std::size_t i = 0; i < code.length(); ++i) {
      if (c.slice(i).empty()) continue;
      for (int r = 0; r < 20; ++r) {
        QueryOracle o(v);
        const CorrectionOutcome out = run_corrector(c, i, o, rng);
        EXPECT_EQ(out.queries, k - 1);
        const auto& t = o.touched();
        EXPECT_EQ(std::find(t.begin(), t.end(), i), t.end());
      }
    }
  }
}

TEST(Corrector, MonteCarloWithinThreeSigma) {
  const LinearCode code = testing::q5n6();
  const CorrectorInstance c(code, 3);
  const Word truth = w(code, {1, 2, 3, 4, 0, 1});
  const Word v = w(code, {1, 2, 3, 4, 2, 1});
  const MonteCarloEstimate e = correction_error_mc(c, v, truth, 0, 100000, 7);
  EXPECT_LE(std::abs(to_double(e.estimate - Rational(4, 9))), 3 * e.standard_error);
  EXPECT_THROW(correction_error_mc(c, v, truth, 0, 0, 7), DomainError);
}

TEST(Corrector, ConcurrentSliceConstruction) {
  const LinearCode code = testing::q3n7();
  const CorrectorInstance c(code, 3);
  std::vector<const DualSlice*> seen(8);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < seen.size(); ++t) {
    threads.emplace_back([&, t] { seen[t] = &c.slice(t % 2); });
  }
  for (auto& th : threads) th.join();
  for (std::size_t t = 0; t < seen.size(); ++t) EXPECT_EQ(seen[t], &c.slice(t % 2));
}

TEST(Prop11, HoldsOnTestCodes) {
  for (const LinearCode& code : {repetition3(), testing::hamming7(), testing::q5n6(),
                                 testing::q3n7()}) {
    for (std::size_t k = 0; k <= code.length() + 1; ++k) {
      for (std::size_t i = 0; i < code.length(); ++i) {
        const VerificationReport r = prop11_check(code, k, i);
        EXPECT_TRUE(r.ok());
        EXPECT_TRUE(r.rows().back().pass) << r.rows().back().check;
      }
    }
  }
  EXPECT_THROW(prop11_check(repetition3(), 2, 3), IndexError);
}

TEST(Prop11, RepetitionValues) {
  const VerificationReport r = prop11_check(repetition3(), 2, 0);
  EXPECT_EQ(r.rows().back().lhs, 4);
  EXPECT_EQ(r.rows().back().rhs, 4);
}

TEST(Prop11, ZeroCodeAndWeightOne) {
  const LinearCode zero = LinearCode::zero_code(FieldSpec::make(3), 3);
  const VerificationReport r = prop11_check(zero, 1, 0);
  EXPECT_TRUE(r.rows().front().pass);
  EXPECT_EQ(r.rows().back().lhs, 2);
  const LinearCode weak = testing::make_code(3, 3, {{1, 0, 0}});
  const VerificationReport g = prop11_check(weak, 2, 1);
  EXPECT_EQ(g.rows().back().kind, RowKind::kGated);
}

TEST(Prop12, HoldsOnTestCodes) {
  for (const LinearCode& code : {repetition3(), testing::hamming7(), testing::q5n6(),
                                 testing::q3n7()}) {
    for (std::size_t k = 0; k <= code.length(); ++k) {
      for (std::size_t i = 0; i < code.length(); ++i) {
        for (std::size_t j = 0; j < code.length(); ++j) {
          if (i == j) continue;
          EXPECT_TRUE(prop12_check(code, k, i, j).rows().back().pass);
        }
      }
    }
  }
  EXPECT_THROW(prop12_check(repetition3(), 2, 1, 1), IndexError);
}

TEST(Lemma13, Values) {
  EXPECT_EQ(lemma13_probability(repetition3(), 2, 0, 1), Rational(1, 2));
  EXPECT_EQ(lemma13_probability(testing::q5n6(), 3, 0, 1), Rational(1, 3));
  EXPECT_THROW(lemma13_probability(repetition3(), 2, 0, 0), IndexError);
  const VerificationReport r = lemma13_report(repetition3(), 2, 0, 1);
  EXPECT_EQ(r.rows().front().kind, RowKind::kInformational);
  EXPECT_EQ(r.rows().front().rhs, Rational(1, 2));
}

TEST(Lemma14, SupportBoundIsHard) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const LinearCode code = generate_code(3, 10, 3, seed, std::nullopt);
    RandomSource rng(seed);
    const Word truth = random_codeword(code, rng);
    const Word v = corrupt(truth, 1, rng);
    const CorrectorInstance c(code, 3);
    for (std::size_t i = 0; i < code.length(); ++i) {
      if (c.slice(i).empty()) continue;
      const VerificationReport r = lemma14_bound_check(c, v, truth, i, Rational(1, 20));
      EXPECT_TRUE(r.ok());
      EXPECT_LE(correction_error_exact(c, v, truth, i), support_hit_fraction(c, v, truth, i));
    }
  }
}

TEST(Lemma14, RepetitionRows) {
  const LinearCode rep = repetition3();
  const CorrectorInstance c(rep, 2);
  const VerificationReport r =
      lemma14_bound_check(c, w(rep, {1, 1, 2}), w(rep, {1, 1, 1}), 0, Rational(1, 20));
  ASSERT_EQ(r.rows().size(), 3u);
  EXPECT_FALSE(r.rows()[0].pass);  // tau = 1/3 is not below 1/4
  EXPECT_EQ(r.rows()[0].kind, RowKind::kGated);
  EXPECT_TRUE(r.rows()[1].pass);
  EXPECT_EQ(r.rows()[2].lhs, Rational(1, 2));
  EXPECT_EQ(r.rows()[2].rhs, Rational(2, 3) + Rational(1, 20));
}

}  // namespace
}  // namespace sparsecode
