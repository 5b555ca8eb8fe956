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
#include "rsweight/gf2_poly.hpp"

using rsw::Gf2Poly;
using rsw::TupleCollection;

namespace {

Gf2Poly P(std::uint64_t bits) { return Gf2Poly::from_bits(bits); }

TupleCollection C(const char* s) { return TupleCollection::parse(s); }

} // namespace

TEST(Gf2Gcd, SmallCases)
{
  EXPECT_EQ(rsw::gf2_gcd(P(0b101), P(0b11)), P(0b11));
  EXPECT_EQ(rsw::gf2_gcd(P(0b1011), Gf2Poly{}), P(0b1011));
  EXPECT_EQ(rsw::gf2_gcd(P(0b1001), P(0b101)), P(0b11));
  EXPECT_TRUE(rsw::gf2_gcd(Gf2Poly{}, Gf2Poly{}).is_zero());
}

TEST(Gf2Gcd, DividesBothAndSymmetric)
{
  for (std::uint64_t a = 1; a < 200; a += 3)
    for (std::uint64_t b = 1; b < 200; b += 7) {
      auto g = rsw::gf2_gcd(P(a), P(b));
      EXPECT_TRUE((P(a) % g).is_zero());
      EXPECT_TRUE((P(b) % g).is_zero());
      EXPECT_EQ(g, rsw::gf2_gcd(P(b), P(a)));
    }
}

TEST(Gf2Poly, ArithmeticMatchesSchoolbook)
{
  for (std::uint64_t a = 0; a < 64; ++a)
    for (std::uint64_t b = 1; b < 64; ++b) {
      EXPECT_EQ((P(a) * P(b)).low_bits(), oracle::to_word(oracle::poly_mul(oracle::from_word(a), oracle::from_word(b))));
      EXPECT_EQ((P(a) % P(b)).low_bits(), oracle::to_word(oracle::poly_mod(oracle::from_word(a), oracle::from_word(b))));
    }
}

TEST(Gf2Poly, HexRoundTrip)
{
  auto p = Gf2Poly::monomial(70) + P(0b1011);
  EXPECT_EQ(Gf2Poly::from_hex(p.to_hex()), p);
  EXPECT_EQ(P(0x13).to_hex(), "13");
  EXPECT_THROW(Gf2Poly::from_hex("1g"), rsw::error);
}

TEST(ANPoly, Examples)
{
  EXPECT_EQ(rsw::a_n_poly(C("0,1"), 5), P(0b10010));
  EXPECT_TRUE(rsw::a_n_poly(C("0,1"), 2).is_zero());
  EXPECT_EQ(rsw::a_n_poly(C("0,1;0,2"), 5), P(0b11110));
  EXPECT_THROW(rsw::a_n_poly(C("0,1,2"), 5), rsw::error);
}

TEST(PlateauV, Examples)
{
  EXPECT_EQ(rsw::plateau_v(C("0,1"), 4), 2U);
  EXPECT_EQ(rsw::plateau_v(C("0,1"), 3), 1U);
  EXPECT_EQ(rsw::plateau_v(C("0,2"), 4), 4U);
}

TEST(PeriodN, Examples)
{
  EXPECT_EQ(rsw::period_N(C("0,1")), 2U);
  EXPECT_EQ(rsw::period_N(C("0,3")), 6U);
  // body x^4 + x^3 + x + 1 = (x+1)^2 (x^2+x+1) divides x^6 + 1 but not x^3 + 1
  EXPECT_EQ(rsw::period_N(C("0,1;0,2")), 6U);
  EXPECT_THROW(rsw::period_N(C("0,1,2")), rsw::error);
}

TEST(PeriodN, MatchesDirectDivisibilityScan)
{
  for (const char* s : {"0,1", "0,2", "0,3", "0,4", "0,5", "0,1;0,2", "0,1;0,3", "0,2;0,3", "0,1;0,4", "0,3;0,4"}) {
    auto c = C(s);
    auto a = rsw::laurent_a(c);
    unsigned n = 1;
    while (!(Gf2Poly::x_pow_plus_one(n) % a.body).is_zero())
      ++n;
    EXPECT_EQ(rsw::period_N(c), n) << s;
  }
}

TEST(PlateauV, PeriodicWithMaximumAtMultiplesOfN)
{
  for (const char* s : {"0,1", "0,2", "0,3", "0,1;0,2", "0,2;0,3", "0,1;0,3", "0,1;0,4"}) {
    auto c = C(s);
    unsigned N = rsw::period_N(c);
    unsigned vmax = 0;
    for (unsigned n = 1; n <= 3 * N; ++n) {
      EXPECT_EQ(rsw::plateau_v(c, n), rsw::plateau_v(c, n + N)) << s << " n=" << n;
      vmax = std::max(vmax, rsw::plateau_v(c, n));
    }
    for (unsigned n = 1; n <= 3 * N; ++n)
      EXPECT_EQ(rsw::plateau_v(c, n) == vmax, n % N == 0) << s << " n=" << n;
  }
}

TEST(MinIrreducible, Examples)
{
  EXPECT_EQ(rsw::min_irreducible(2), P(0b111));
  EXPECT_EQ(rsw::min_irreducible(3), P(0b1011));
  EXPECT_EQ(rsw::min_irreducible(4), P(0b10011));
}

TEST(MinIrreducible, AgreesWithTrialDivision)
{
  for (unsigned n = 1; n <= 12; ++n) {
    auto p = rsw::min_irreducible(n);
    EXPECT_TRUE(oracle::irreducible_by_trial(p.low_bits())) << n;
    EXPECT_EQ(p.low_bits(), oracle::least_irreducible(n)) << n;
  }
}

TEST(Rabin, AgreesWithTrialDivision)
{
  for (std::uint64_t p = 2; p < (1U << 11); ++p)
    EXPECT_EQ(rsw::is_irreducible_rabin(P(p)), oracle::irreducible_by_trial(p)) << p;
}
