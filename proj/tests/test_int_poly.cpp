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

#include <algorithm>

#include "oracles.hpp"
#include "rsweight/factor.hpp"
#include "rsweight/roots.hpp"

using rsw::BigInt;
using rsw::IntPoly;
using rsw::RatPoly;

namespace {

IntPoly X(std::initializer_list<long long> c)
{
  std::vector<BigInt> v;
  for (auto x : c)
    v.emplace_back(x);
  return IntPoly(std::move(v));
}

std::vector<std::pair<std::string, unsigned>> shape(const std::vector<rsw::PolyFactor>& fs)
{
  std::vector<std::pair<std::string, unsigned>> out;
  for (const auto& f : fs)
    out.emplace_back(f.poly.compact(), f.multiplicity);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST(IntPoly, ArithmeticAndPrinting)
{
  auto p = X({-2, 0, 1});
  auto q = X({2, 0, 1});
  EXPECT_EQ((p * q).compact(), "x^4-4");
  EXPECT_EQ(X({4, -2, -2, 1}).compact(), "x^3-2x^2-2x+4");
  EXPECT_EQ(p.negated_var(), p);
  EXPECT_EQ(X({1, 2, 3}).reversed(), X({3, 2, 1}));
  EXPECT_EQ(X({0, 0, 5}).x_valuation(), 2U);
  EXPECT_EQ(X({1, 1}).substitute_power(3), X({1, 0, 0, 1}));
  EXPECT_EQ(X({1, 2, 3}).derivative(), X({2, 6}));
}

TEST(IntPoly, DivisionAndGcd)
{
  auto a = X({-1, 0, 0, 1}), b = X({-1, 1});
  auto [quo, rem] = rsw::divmod_monic(a, b);
  EXPECT_EQ(quo, X({1, 1, 1}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_TRUE(rsw::divides(b, a));
  EXPECT_FALSE(rsw::divides(X({1, 1, 1, 1}), a));
  EXPECT_EQ(rsw::gcd(X({-1, 0, 1}), X({1, 2, 1})), X({1, 1}));
  EXPECT_EQ(rsw::content(X({6, -4, 2})), 2);
  EXPECT_EQ(rsw::primitive_part(X({-6, 4, -2})), X({3, -2, 1}));
}

TEST(Factor, KnownIrreducibleProducts)
{
  // x^2 - 2 and x^3 - 2x - 2 are Eisenstein at 2; cyclotomic factors are irreducible
  auto e2 = X({-2, 0, 1}), e3 = X({-2, -2, 0, 1}), phi3 = X({1, 1, 1}), phi5 = X({1, 1, 1, 1, 1});
  auto f = rsw::pow(e2, 3) * e3 * rsw::pow(phi3, 2) * phi5 * X({0, 1});
  auto fs = rsw::factor_over_Z(f);
  std::vector<std::pair<std::string, unsigned>> expect{
      {"x", 1}, {e2.compact(), 3}, {e3.compact(), 1}, {phi3.compact(), 2}, {phi5.compact(), 1}};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(shape(fs), expect);
}

TEST(Factor, BiquadraticCases)
{
  EXPECT_EQ(rsw::factor_over_Z(X({4, 0, 0, 0, 1})).size(), 2U); // x^4 + 4 = (x^2-2x+2)(x^2+2x+2)
  EXPECT_EQ(rsw::factor_over_Z(X({1, 0, -10, 0, 1})).size(), 1U); // minimal polynomial of sqrt2 + sqrt3
  EXPECT_EQ(rsw::factor_over_Z(X({16, 0, 0, 0, 0, 0, 0, 0, 1})).size(), 1U); // x^8 + 16
}

TEST(Factor, ProductReassembles)
{
  std::uint64_t s = 7;
  for (int trial = 0; trial < 40; ++trial) {
    IntPoly f = IntPoly::constant(BigInt(1));
    for (int k = 0; k < 3; ++k) {
      std::vector<BigInt> c;
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      unsigned deg = 1 + (s >> 60) % 4;
      for (unsigned i = 0; i < deg; ++i) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        c.emplace_back(static_cast<long long>((s >> 40) % 11) - 5);
      }
      c.emplace_back(1);
      f = f * IntPoly(std::move(c));
    }
    auto fs = rsw::factor_over_Z(f);
    IntPoly prod = IntPoly::constant(BigInt(1));
    for (const auto& g : fs) {
      EXPECT_TRUE(g.poly.lead() > 0);
      prod = prod * rsw::pow(g.poly, g.multiplicity);
    }
    EXPECT_EQ(prod, f) << f.compact();
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i + 1; j < fs.size(); ++j)
        EXPECT_NE(fs[i].poly, fs[j].poly);
  }
}

TEST(Factor, CyclotomicSplitOfXPowMinusOne)
{
  // every factor of x^24 - 1 is a cyclotomic polynomial
  auto fs = rsw::factor_over_Z(IntPoly::binomial(24, BigInt(1)));
  EXPECT_EQ(fs.size(), 8U);
  for (const auto& f : fs) {
    auto roots = rsw::poly_roots(f.poly);
    for (const auto& z : roots)
      EXPECT_NEAR(static_cast<double>(std::abs(z)), 1.0, 1e-12);
  }
}

TEST(Factor, SquarefreeDecomposition)
{
  auto f = rsw::pow(X({-1, 1}), 3) * rsw::pow(X({1, 0, 1}), 2) * X({5, 1});
  auto sq = rsw::squarefree_decomposition(f);
  IntPoly prod = IntPoly::constant(BigInt(1));
  for (const auto& g : sq)
    prod = prod * rsw::pow(g.poly, g.multiplicity);
  EXPECT_EQ(rsw::primitive_part(prod), f);
}

TEST(Roots, ModuliAndResiduals)
{
  auto p = X({16, 0, 8, 0, 0, 0, 2, 0, 1}); // x^8 + 2x^6 + 8x^2 + 16
  auto roots = rsw::poly_roots(p);
  ASSERT_EQ(roots.size(), 8U);
  for (const auto& z : roots) {
    EXPECT_LT(static_cast<double>(std::abs(oracle::eval(p, z))), 1e-12);
    EXPECT_NEAR(static_cast<double>(std::abs(z)), std::sqrt(2.0), 1e-12);
  }
  EXPECT_EQ(rsw::poly_roots(X({0, 0, -2, 0, 1})).size(), 4U);
}
