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

#include "sparsecode/krawtchouk.hpp"

#include <gtest/gtest.h>

#include "sparsecode/errors.hpp"
#include "test_codes.hpp"

namespace sparsecode {
namespace {

using Table = std::vector<std::vector<long long>>;

void expect_table(std::uint64_t q, std::size_t n, const Table& expected) {
  const KrawtchoukTable table(q, n, n);
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t i = 0; i <= n; ++i) {
      EXPECT_EQ(table(k, i), expected[k][i]) << "q=" << q << " n=" << n << " k=" << k
                                             << " i=" << i;
      EXPECT_EQ(krawtchouk(k, i, q, n), expected[k][i]);
    }
  }
}

TEST(Krawtchouk, FrozenTables) {
  expect_table(3, 5,
               {{1, 1, 1, 1, 1, 1},
                {10, 7, 4, 1, -2, -5},
                {40, 16, 1, -5, -2, 10},
                {80, 8, -10, -1, 8, -10},
                {80, -16, -4, 8, -7, 5},
                {32, -16, 8, -4, 2, -1}});
  expect_table(2, 8,
               {{1, 1, 1, 1, 1, 1, 1, 1, 1},
                {8, 6, 4, 2, 0, -2, -4, -6, -8},
                {28, 14, 4, -2, -4, -2, 4, 14, 28},
                {56, 14, -4, -6, 0, 6, 4, -14, -56},
                {70, 0, -10, 0, 6, 0, -10, 0, 70},
                {56, -14, -4, 6, 0, -6, 4, 14, -56},
                {28, -14, 4, 2, -4, 2, 4, -14, 28},
                {8, -6, 4, -2, 0, 2, -4, 6, -8},
                {1, -1, 1, -1, 1, -1, 1, -1, 1}});
  expect_table(5, 6,
               {{1, 1, 1, 1, 1, 1, 1},
                {24, 19, 14, 9, 4, -1, -6},
                {240, 140, 65, 15, -10, -10, 15},
                {1280, 480, 80, -45, -20, 30, -20},
                {3840, 640, -160, -60, 65, -35, 15},
                {6144, -256, -256, 144, -56, 19, -6},
                {4096, -1024, 256, -64, 16, -4, 1}});
}

TEST(Krawtchouk, LargeValuesExact) {
  EXPECT_EQ(krawtchouk(6, 7, 5, 25), 29329615);
  EXPECT_EQ(krawtchouk(12, 3, 5, 30), Integer("152907723571200"));
  const KrawtchoukTable t(5, 30, 12);
  EXPECT_EQ(t(12, 3), Integer("152907723571200"));
}

TEST(Krawtchouk, DomainErrors) {
  EXPECT_THROW(krawtchouk(4, 0, 3, 3), DomainError);
  EXPECT_THROW(krawtchouk(1, 4, 3, 3), DomainError);
  EXPECT_THROW(krawtchouk(1, 1, 1, 3), DomainError);
  EXPECT_THROW(krawtchouk(1, 1, Rational(1), 3), DomainError);
  EXPECT_THROW(root_interval(0, 3, 5), DomainError);
  EXPECT_THROW(verify_krawtchouk_properties(3, 3, 4), DomainError);
}

TEST(Krawtchouk, RationalAlphabetSymmetry) {
  // P_k(i, q, n) = P_k(n - i, q/(q-1), n) (1 - q)^k on a grid.
  for (std::uint64_t q : {2, 3, 5, 7}) {
    for (std::size_t n = 1; n <= 12; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t i = 0; i <= n; ++i) {
          const Rational s(q, q - 1);
          const Rational rhs = krawtchouk(k, n - i, s, n) *
                               rpow(Rational(1) - Rational(q), static_cast<std::int64_t>(k));
          ASSERT_EQ(Rational(krawtchouk(k, i, q, n)), rhs);
        }
      }
    }
  }
}

TEST(RootInterval, KnownValues) {
  // q=2, n=8, k=2: 4 - 0 -/+ sqrt(12) = 4 -/+ 2 sqrt 3.
  const RootInterval r = root_interval(2, 2, 8);
  EXPECT_EQ(r.mu1.compare(Rational(1)), -1);
  EXPECT_EQ(r.mu1.compare(Rational(1, 2)), 1);
  EXPECT_EQ(r.mu2.floor(), 7);
  EXPECT_TRUE(r.mu1_enclosure.lo <= r.mu1_enclosure.hi);
  // q=5, n=10, k=5: mu2 = 8 - 3 + (2/5) sqrt(100) = 9 exactly.
  const RootInterval exact = root_interval(5, 5, 10);
  EXPECT_EQ(exact.mu2.compare(9), 0);
  EXPECT_EQ(exact.mu1.compare(1), 0);
}

TEST(MacWilliams, FixtureValues) {
  const LinearCode rep = testing::repetition3();
  const WeightDistribution dual =
      macwilliams_transform(weight_distribution(rep), rep.size(), 3, 3);
  EXPECT_EQ(dual.counts, (std::vector<Integer>{1, 0, 6, 2}));

  const LinearCode zero = LinearCode::zero_code(FieldSpec::make(3), 5);
  const WeightDistribution full = macwilliams_transform(weight_distribution(zero), 1, 3, 5);
  for (std::size_t k = 0; k <= 5; ++k) EXPECT_EQ(full.counts[k], binomial(5, k) << k);

  const WeightDistribution f22 = WeightDistribution::from_counts({1, 2, 1});
  EXPECT_EQ(macwilliams_transform(f22, 4, 2, 2).counts, (std::vector<Integer>{1, 0, 0}));
}

TEST(MacWilliams, FrozenDuals) {
  struct Case {
    LinearCode code;
    std::vector<Integer> dual;
  };
  const std::vector<Case> cases{
      {testing::hamming7(), {1, 0, 0, 0, 7, 0, 0, 0}},
      {testing::q5n6(), {1, 0, 4, 64, 144, 248, 164}},
      {testing::q3n7(), {1, 0, 6, 40, 60, 66, 58, 12}},
  };
  for (const Case& c : cases) {
    const WeightDistribution d = macwilliams_transform(weight_distribution(c.code),
                                                       c.code.size(), c.code.q(),
                                                       c.code.length());
    EXPECT_EQ(d.counts, c.dual);
    EXPECT_EQ(d.set_size * Integer(c.code.size()),
              ipow(Integer(c.code.q()), c.code.length()));
  }
}

TEST(MacWilliams, RejectsNonCodeDistributions) {
  // <1,1,0,0> over F_3: B_1 of the "dual" would be 9/2.
  EXPECT_THROW(macwilliams_transform(WeightDistribution::from_counts({1, 1, 0, 0}), 2, 3, 3),
               MacWilliamsViolation);
  EXPECT_THROW(macwilliams_transform(WeightDistribution::from_counts({1, 0, 2}), 3, 3, 3),
               DomainError);
  EXPECT_THROW(macwilliams_transform(WeightDistribution::from_counts({1, 0, 0, 2}), 4, 3, 3),
               DomainError);
}

TEST(PropertySuite, SmallCaseAllHardRowsPass) {
  const VerificationReport r = verify_krawtchouk_properties(3, 5, 3);
  EXPECT_TRUE(r.ok());
  for (const ReportRow& row : r.rows()) {
    if (row.check.rfind("krawtchouk.orthogonality", 0) == 0) EXPECT_TRUE(row.pass) << row.check;
    if (row.check.rfind("krawtchouk.4c", 0) == 0) EXPECT_TRUE(row.pass) << row.check;
  }
}

TEST(PropertySuite, OrthogonalityExample) {
  const VerificationReport r = verify_krawtchouk_properties(3, 3, 3);
  bool seen = false;
  for (const ReportRow& row : r.rows()) {
    if (row.check == "krawtchouk.orthogonality[k=0,l=1]") {
      seen = true;
      EXPECT_EQ(row.lhs, 0);
      EXPECT_TRUE(row.pass);
    }
    if (row.check == "krawtchouk.4c[k=3,i=3]") {
      EXPECT_EQ(row.lhs, -1);
      EXPECT_TRUE(row.pass);
    }
  }
  EXPECT_TRUE(seen);
}

bool has_failure(const VerificationReport& r, const std::string& prefix) {
  for (const ReportRow* row : r.failures()) {
    if (row->check.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

// The root-location consequences do not hold for k close to n: these grid
// points are pinned so that a silent change in the checks is noticed.
TEST(PropertySuite, ReportsRootBoundCounterexamples) {
  // q=5, n=10, k=5: mu2 = 9 but P_5(9) = 378 > 0 > P_5(10) = -252.
  EXPECT_EQ(krawtchouk(5, 9, 5, 10), 378);
  EXPECT_EQ(krawtchouk(5, 10, 5, 10), -252);
  const VerificationReport a = verify_krawtchouk_properties(5, 10, 5);
  EXPECT_TRUE(has_failure(a, "krawtchouk.p3_sign_change[k=5"));
  EXPECT_FALSE(has_failure(a, "krawtchouk.4c[k=5,i=10]"));
  // q=2, n=3, k=3: P_3(2) = 3 > 0 beyond mu2.
  const VerificationReport b = verify_krawtchouk_properties(2, 3, 3);
  EXPECT_TRUE(has_failure(b, "krawtchouk.4c[k=3"));
  // Binary k=4, n=8 at the mean weight: P_4(4) = 6 > 0 = rhs.
  const VerificationReport c = verify_krawtchouk_properties(2, 8, 4);
  EXPECT_TRUE(has_failure(c, "krawtchouk.4a[k=4,i=4]"));
}

TEST(PropertySuite, IdentitiesHoldOnFullGrid) {
  for (std::uint64_t q : {2, 3, 5}) {
    for (std::size_t n = 1; n <= 25; ++n) {
      const VerificationReport r = verify_krawtchouk_properties(q, n, std::min<std::size_t>(6, n));
      for (const ReportRow* row : r.failures()) {
        const std::string& c = row->check;
        const bool identity = c.rfind("krawtchouk.p1", 0) == 0 ||
                              c.rfind("krawtchouk.p2", 0) == 0 ||
                              c.rfind("krawtchouk.recurrence", 0) == 0 ||
                              c.rfind("krawtchouk.orthogonality", 0) == 0;
        EXPECT_FALSE(identity) << "q=" << q << " n=" << n << " " << c;
      }
    }
  }
}

}  // namespace
}  // namespace sparsecode
