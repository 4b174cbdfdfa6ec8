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

#include "sparsecode/field.hpp"

#include <gtest/gtest.h>

#include "sparsecode/errors.hpp"

namespace sparsecode {
namespace {

TEST(FieldSpec, AcceptsPrimes) {
  EXPECT_EQ(FieldSpec::make(2).order(), 2u);
  EXPECT_EQ(FieldSpec::make(3).order(), 3u);
  EXPECT_EQ(FieldSpec::make(101).order(), 101u);
}

TEST(FieldSpec, RejectsCompositeAndTinyOrders) {
  EXPECT_THROW(FieldSpec::make(9), CompositeOrder);
  EXPECT_THROW(FieldSpec::make(4), CompositeOrder);
  EXPECT_THROW(FieldSpec::make(1), CompositeOrder);
  EXPECT_THROW(FieldSpec::make(0), CompositeOrder);
}

TEST(FieldSpec, ElementRangeChecked) {
  const FieldSpec f = FieldSpec::make(5);
  EXPECT_EQ(f.element(4).value(), 4u);
  EXPECT_THROW(f.element(5), DomainError);
}

TEST(FieldArithmetic, SmallExamples) {
  const FieldSpec f3 = FieldSpec::make(3);
  const FieldSpec f5 = FieldSpec::make(5);
  EXPECT_EQ(f3.add(f3.element(2), f3.element(2)).value(), 1u);
  EXPECT_EQ(f5.add(f5.element(4), f5.element(1)).value(), 0u);
  EXPECT_EQ(f3.mul(f3.element(2), f3.element(2)).value(), 1u);
  EXPECT_EQ(f5.mul(f5.element(3), f5.element(4)).value(), 2u);
  EXPECT_EQ(f3.inv(f3.element(2)).value(), 2u);
  EXPECT_EQ(f5.inv(f5.element(3)).value(), 2u);
  EXPECT_THROW(f3.inv(f3.zero()), ZeroInverse);
  EXPECT_THROW(f3.inv(Symbol{0}), ZeroInverse);
}

TEST(FieldArithmetic, MixedFieldsRejected) {
  const FieldSpec f3 = FieldSpec::make(3);
  const FieldSpec f5 = FieldSpec::make(5);
  EXPECT_THROW(f3.add(f3.one(), f5.one()), FieldMismatch);
  EXPECT_THROW(f5.mul(f3.one(), f5.one()), FieldMismatch);
  EXPECT_THROW(f5.inv(f3.one()), FieldMismatch);
}

TEST(IsPrime, Basics) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
  EXPECT_TRUE(is_prime(4294967291ULL));
}

class FieldAxioms : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(FieldAxioms, HoldExhaustively) {
  const FieldSpec f = FieldSpec::make(GetParam());
  const Symbol q = f.order();
  for (Symbol a = 0; a < q; ++a) {
    const FieldElement ea = f.element(a);
    EXPECT_EQ(f.add(ea, f.zero()), ea);
    EXPECT_EQ(f.mul(ea, f.one()), ea);
    EXPECT_EQ(f.add(ea, f.neg(ea)), f.zero());
    EXPECT_EQ(f.sub(ea, ea), f.zero());
    if (a != 0) {
      EXPECT_EQ(f.mul(ea, f.inv(ea)), f.one());
      EXPECT_EQ(f.inv(f.inv(ea)), ea);
    }
    for (Symbol b = 0; b < q; ++b) {
      const FieldElement eb = f.element(b);
      EXPECT_EQ(f.add(ea, eb), f.add(eb, ea));
      EXPECT_EQ(f.mul(ea, eb), f.mul(eb, ea));
      EXPECT_LT(f.add(ea, eb).value(), q);
      EXPECT_LT(f.mul(ea, eb).value(), q);
      EXPECT_EQ(f.add(a, b), f.add(ea, eb).value());
      EXPECT_EQ(f.sub(a, b), f.sub(ea, eb).value());
      for (Symbol c = 0; c < q; ++c) {
        const FieldElement ec = f.element(c);
        EXPECT_EQ(f.add(f.add(ea, eb), ec), f.add(ea, f.add(eb, ec)));
        EXPECT_EQ(f.mul(f.mul(ea, eb), ec), f.mul(ea, f.mul(eb, ec)));
        EXPECT_EQ(f.mul(ea, f.add(eb, ec)), f.add(f.mul(ea, eb), f.mul(ea, ec)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, FieldAxioms, ::testing::Values(2, 3, 5, 7, 11, 13));

}  // namespace
}  // namespace sparsecode
