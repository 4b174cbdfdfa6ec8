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

#include "sparsecode/bounds.hpp"

#include <gtest/gtest.h>

#include "sparsecode/cli.hpp"
#include "sparsecode/errors.hpp"
#include "sparsecode/krawtchouk.hpp"
#include "test_codes.hpp"

namespace sparsecode {
namespace {

const ReportRow* find_row(const VerificationReport& r, const std::string& check) {
  for (const ReportRow& row : r.rows()) {
    if (row.check == check) return &row;
  }
  return nullptr;
}

TEST(BoundsParams, Validation) {
  const BoundsParams p = BoundsParams::make(2, Rational(1, 2), 2, Rational(1, 4), Rational(1, 8));
  EXPECT_EQ(p.gamma_prime, Rational(1, 4));
  EXPECT_THROW(BoundsParams::make(0, 1, 1, 0, 0), DomainError);
  EXPECT_THROW(BoundsParams::make(1, 1, 1, Rational(3, 4), 0), DomainError);
  EXPECT_THROW(BoundsParams::make(1, 1, 1, 0, Rational(1, 2)), DomainError);
  BoundsParams q = p;
  q.gamma_prime = 1;
  EXPECT_THROW(q.validate(), DomainError);
}

TEST(WeightWindow, RoundsInward) {
  // q=3, n=30: mean 20, half-width 30^{1/2} = 5.47...
  const WeightWindow w = weight_window(3, 30, Rational(1, 2));
  EXPECT_EQ(w.lo, 15);
  EXPECT_EQ(w.hi, 25);
  const WeightWindow clipped = weight_window(2, 4, 1);
  EXPECT_EQ(clipped.lo, 0);
  EXPECT_EQ(clipped.hi, 4);
}

TEST(Prop4, ZeroCodeVacuous) {
  const LinearCode z = LinearCode::zero_code(FieldSpec::make(3), 6);
  const VerificationReport r = verify_prop4(z, BoundsParams{});
  for (const ReportRow& row : r.rows()) EXPECT_TRUE(row.pass) << row.check;
}

TEST(Prop4, UnmetHypothesisIsGatedNotFailed) {
  // gamma = 3: n^-3 is far below the repetition code's bias 1/3.
  BoundsParams p = BoundsParams::make(1, 3, 1, Rational(1, 4), Rational(1, 4));
  const VerificationReport r = verify_prop4(testing::repetition3(), p);
  EXPECT_TRUE(r.ok());
  const ReportRow* hyp = find_row(r, "prop4.hyp_bias");
  ASSERT_NE(hyp, nullptr);
  EXPECT_EQ(hyp->kind, RowKind::kGated);
  EXPECT_FALSE(hyp->pass);
  EXPECT_EQ(find_row(r, "prop4.high_weights")->kind, RowKind::kGated);
}

TEST(Prop4, GeneratedCodeFollowsProfile) {
  const LinearCode c = generate_code(3, 15, 2, 7, std::nullopt);
  const VerificationReport r = verify_prop4(c, BoundsParams{});
  EXPECT_EQ(find_row(r, "prop4.b0")->pass, true);
  EXPECT_TRUE(r.ok());
}

TEST(Claim5, Examples) {
  const BoundsParams p;
  const WeightDistribution origin = WeightDistribution::from_counts({1, 0, 0, 0, 0, 0});
  const VerificationReport z = claim5_sum(origin, 3, p, 3, 5);
  EXPECT_EQ(find_row(z, "claim5.window[k=3]")->lhs, 0);
  EXPECT_EQ(find_row(z, "claim5.tail[k=3]")->lhs, 0);

  const LinearCode rep = testing::repetition3();
  const VerificationReport r = claim5_sum(weight_distribution(rep), 3, p, 3, 3);
  // tail = 2 P_3(3) = -2, P_3(0) = 8.
  EXPECT_EQ(find_row(r, "claim5.tail[k=3]")->lhs, Rational(-1, 4));
  EXPECT_TRUE(find_row(r, "claim5.tail_sign[k=3]")->pass);
  EXPECT_EQ(find_row(r, "claim5.tail_sign[k=3]")->lhs, -2);

  EXPECT_THROW(claim5_sum(weight_distribution(rep), 2, p, 3, 3), PreconditionError);
}

TEST(Lemma6, Deviation) {
  EXPECT_EQ(lemma6_deviation(testing::repetition3(), 2), Rational(1, 2));
  const LinearCode z = LinearCode::zero_code(FieldSpec::make(5), 7);
  for (std::size_t k = 1; k <= 7; ++k) EXPECT_EQ(lemma6_deviation(z, k), 0);
  EXPECT_THROW(lemma6_deviation(z, 0), DomainError);
  const VerificationReport odd = lemma6_report(testing::repetition3(), 3, Rational(1, 10));
  EXPECT_NE(find_row(odd, "lemma6.upper[k=3]"), nullptr);
  for (const ReportRow& row : odd.rows()) EXPECT_EQ(row.kind, RowKind::kInformational);
  const VerificationReport even = lemma6_report(testing::repetition3(), 2, Rational(1, 10));
  EXPECT_EQ(find_row(even, "lemma6.upper[k=2]"), nullptr);
}

TEST(Lemma8, Examples) {
  const VerificationReport a = lemma8_check(1, Rational(1, 3), 3, 6);
  ASSERT_EQ(a.rows().size(), 1u);
  EXPECT_EQ(a.rows()[0].lhs, 6);
  EXPECT_EQ(a.rows()[0].rhs, 8);
  EXPECT_TRUE(a.rows()[0].pass);

  const VerificationReport zero = lemma8_check(4, 0, 2, 9);
  ASSERT_EQ(zero.rows().size(), 1u);
  EXPECT_EQ(zero.rows()[0].lhs, zero.rows()[0].rhs);

  // q=2, n=10, k=3, tau=2/5: P_3(4) = 8 against (3/5)^3 * 120 = 648/25.
  const VerificationReport b = lemma8_check(3, Rational(2, 5), 2, 10);
  ASSERT_EQ(b.rows().size(), 1u);
  EXPECT_EQ(b.rows()[0].lhs, krawtchouk(3, 4, 2, 10));
  EXPECT_EQ(b.rows()[0].rhs, Rational(648, 25));

  const VerificationReport frac = lemma8_check(2, Rational(1, 4), 3, 6);
  EXPECT_EQ(frac.rows().size(), 2u);
  EXPECT_THROW(lemma8_check(1, Rational(1, 2), 3, 6), DomainError);
}

TEST(Johnson, Examples) {
  EXPECT_EQ(johnson_count_bound(3, 3, 9), 12);
  EXPECT_EQ(johnson_count_bound(0, 5, 11), 5);
  EXPECT_EQ(johnson_count_bound(2, 2, 8), 8);
  EXPECT_THROW(johnson_count_bound(4, 2, 8), DomainError);
  for (std::uint64_t q : {2, 3, 5}) {
    const std::size_t n = 20;
    Rational prev = 0;
    for (std::size_t i = 0; Rational(q * i, q - 1) < Rational(n); ++i) {
      const Rational m = johnson_count_bound(i, q, n);
      EXPECT_GE(m, prev);
      prev = m;
    }
  }
}

TEST(Lemma9, ZeroCodeAndEmptyRange) {
  const LinearCode z = LinearCode::zero_code(FieldSpec::make(3), 9);
  const VerificationReport r = lemma9_sum_check(z, 3, BoundsParams{});
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(find_row(r, "lemma9.sum[k=3]")->pass);
  // n=3: b = floor(2 - 3^{1/2}) = 0 while a >= ceil(3/4) = 1.
  const VerificationReport e = lemma9_sum_check(testing::repetition3(), 2, BoundsParams{});
  EXPECT_NE(find_row(e, "lemma9.sum[k=2]")->note.find("vacuous"), std::string::npos);
  EXPECT_THROW(lemma9_sum_check(z, 1, BoundsParams{}), DomainError);
}

TEST(Lemma9, BallPremiseOnGeneratedCodes) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const LinearCode c = generate_code(3, 30, 2, seed, std::nullopt);
    const VerificationReport r = lemma9_sum_check(c, 7, BoundsParams{});
    for (const ReportRow& row : r.rows()) {
      if (row.check.rfind("lemma9.ball_count", 0) == 0 && row.kind == RowKind::kHard) {
        EXPECT_TRUE(row.pass) << row.check;
      }
    }
    EXPECT_NE(find_row(r, "lemma9.sum[k=7]"), nullptr);
  }
}

TEST(Lemma10, RepetitionCode) {
  const LinearCode rep = testing::repetition3();
  const Word v(rep.field(), {1, 0, 0});
  const VerificationReport r = lemma10_check(rep, v, 3);
  EXPECT_TRUE(find_row(r, "lemma10.coset_sum")->pass);
  // C||v has 9 words; its dual has 3 words: 0 and the multiples of (0,1,2).
  const ReportRow* row = find_row(r, "lemma10[k=3]");
  ASSERT_NE(row, nullptr);
  EXPECT_EQ(row->lhs, 0);
  EXPECT_EQ(row->rhs, Rational(5, 6));
  EXPECT_THROW(lemma10_check(rep, Word(rep.field(), {2, 2, 2}), 3), PreconditionError);
}

TEST(SelectTestWeight, Examples) {
  EXPECT_EQ(select_test_weight(BoundsParams::make(1, 1, 1, 0, 0), 2), 97u);
  EXPECT_EQ(select_test_weight(BoundsParams::make(2, Rational(1, 2), 2, 0, 0), 3), 193u);
  for (std::uint64_t q : {2, 3, 5, 7}) {
    for (int g = 1; g <= 4; ++g) {
      const BoundsParams p = BoundsParams::make(3, Rational(1, g), 2, 0, 0);
      const std::uint64_t k = select_test_weight(p, q);
      EXPECT_EQ(k % 2, 1u);
      EXPECT_GE(Rational(k), (p.t + p.c + 1) / p.gamma);
      EXPECT_GE(k, 16 * (q * q + q));
    }
  }
}

}  // namespace
}  // namespace sparsecode
