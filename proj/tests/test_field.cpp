/*
   Copyright 2026 The rsweight Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rsweight/field.hpp"

using rsw::FieldCtx;
using rsw::TupleCollection;

TEST(Field, Examples)
{
  FieldCtx f4(2);
  auto g = f4.gen();
  EXPECT_EQ(f4.add(g, g), f4.zero());
  EXPECT_EQ(f4.mul(f4.one(), g), g);
  EXPECT_EQ(f4.mul(g, g), f4.add(g, f4.one()));

  FieldCtx f2(1);
  EXPECT_TRUE(f2.trace(f2.one()));
  EXPECT_FALSE(f4.trace(f4.one()));
  EXPECT_TRUE(f4.trace(g));
}

TEST(Field, ContextMismatchThrows)
{
  FieldCtx a(3), b(3);
  EXPECT_THROW(a.mul(a.gen(), b.gen()), rsw::error);
  EXPECT_THROW(a.trace(b.one()), rsw::error);
  EXPECT_THROW(a.elem(8), std::invalid_argument);
}

TEST(Field, RejectsReducibleModulus)
{
  EXPECT_THROW(FieldCtx(2, rsw::Gf2Poly::from_bits(0b101)), rsw::error);
}

TEST(Field, MultiplicationMatchesSchoolbook)
{
  for (unsigned n : {1U, 2U, 3U, 5U, 8U, 13U, 20U, 31U, 32U, 33U, 40U}) {
    FieldCtx f(n);
    oracle::Field o(n);
    std::uint64_t mask = f.order() - 1, s = 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < 300; ++i) {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      std::uint64_t a = (s >> 7) & mask, b = (s >> 19) & mask;
      ASSERT_EQ(f.mul_raw(a, b), o.mul(a, b)) << "n=" << n;
      ASSERT_EQ(f.sqr_raw(a), o.mul(a, a)) << "n=" << n;
    }
  }
}

TEST(Field, ClmulPathsAgree)
{
  std::uint64_t s = 1;
  for (int i = 0; i < 1000; ++i) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    std::uint64_t a = s >> 32, b = (s >> 3) & 0xffffffffULL;
    auto slow = oracle::to_word(oracle::poly_mul(oracle::from_word(a), oracle::from_word(b)));
    ASSERT_EQ(rsw::detail::clmul32(a, b), slow);
  }
}

TEST(Field, TraceAdditiveAndFrobeniusInvariant)
{
  for (unsigned n = 1; n <= 10; ++n) {
    FieldCtx f(n);
    for (std::uint64_t x = 0; x < f.order(); ++x) {
      ASSERT_EQ(f.trace_raw(f.sqr_raw(x)), f.trace_raw(x));
      ASSERT_EQ(f.trace_raw(x), f.trace_by_definition(x));
      for (std::uint64_t y = 0; y < f.order(); y += 7)
        ASSERT_EQ(f.trace_raw(x ^ y), f.trace_raw(x) != f.trace_raw(y));
    }
  }
}

TEST(Field, TraceIsBalanced)
{
  for (unsigned n = 1; n <= 14; ++n) {
    FieldCtx f(n);
    std::uint64_t zeros = 0;
    for (std::uint64_t x = 0; x < f.order(); ++x)
      zeros += f.trace_raw(x) ? 0U : 1U;
    EXPECT_EQ(zeros, f.order() / 2) << n;
  }
}

TEST(Field, TraceZeroIffArtinSchreierImage)
{
  for (unsigned n = 1; n <= 10; ++n) {
    FieldCtx f(n);
    std::vector<bool> image(f.order(), false);
    for (std::uint64_t y = 0; y < f.order(); ++y)
      image[f.sqr_raw(y) ^ y] = true;
    for (std::uint64_t x = 0; x < f.order(); ++x)
      ASSERT_EQ(!f.trace_raw(x), image[x]) << "n=" << n << " x=" << x;
  }
}

TEST(Field, EvalPfExamples)
{
  FieldCtx f(7);
  auto c1 = TupleCollection::parse("0,1");
  auto c2 = TupleCollection::parse("0,1;0,2");
  for (std::uint64_t x = 0; x < f.order(); ++x) {
    ASSERT_EQ(f.eval_pf_raw(c1, x), f.pow_raw(x, 3));
    ASSERT_EQ(f.eval_pf_raw(c2, x), f.pow_raw(x, 3) ^ f.pow_raw(x, 5));
  }
  EXPECT_EQ(f.eval_pf_raw(TupleCollection::parse("0,2,5"), 0), 0U);
}

TEST(Field, EvalPfMatchesRepeatedMultiplication)
{
  for (unsigned n : {3U, 6U, 9U}) {
    FieldCtx f(n);
    oracle::Field o(n);
    for (const char* s : {"0,1,2", "0,2;0,1,3", "0,3"}) {
      auto c = TupleCollection::parse(s);
      for (std::uint64_t x = 0; x < f.order(); ++x)
        ASSERT_EQ(f.eval_pf_raw(c, x), o.pf(c, x)) << s;
    }
  }
}
