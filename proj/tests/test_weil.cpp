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
#include "rsweight/verify.hpp"
#include "rsweight/weil.hpp"

using rsw::BigInt;
using rsw::IntPoly;
using rsw::TupleCollection;

namespace {

TupleCollection C(const char* s) { return TupleCollection::parse(s); }

IntPoly X(std::initializer_list<long long> c)
{
  std::vector<BigInt> v;
  for (auto x : c)
    v.emplace_back(x);
  return IntPoly(std::move(v));
}

rsw::WeightSequence oracle_sequence(const TupleCollection& c, unsigned n_max)
{
  rsw::WeightSequence w;
  w.family = c;
  w.context = rsw::Context::trace;
  for (unsigned n = 1; n <= n_max; ++n)
    w.entries[n] = {BigInt(oracle::trace_weight(c, n)), rsw::Provenance::oracle};
  return w;
}

} // namespace

TEST(CurveDegree, Examples)
{
  EXPECT_EQ(rsw::curve_degree(C("0,1")), 3U);
  EXPECT_EQ(rsw::genus(C("0,1")), 1U);
  EXPECT_EQ(rsw::curve_degree(C("0,2")), 5U);
  EXPECT_EQ(rsw::genus(C("0,2")), 2U);
  EXPECT_EQ(rsw::curve_degree(C("0,1;0,1,2")), 7U);
  EXPECT_EQ(rsw::genus(C("0,1,2")), 3U);
  EXPECT_THROW(rsw::curve_degree(TupleCollection{}), rsw::error);
}

TEST(WeilModulus, Examples)
{
  EXPECT_TRUE(rsw::weil_modulus_check(X({2, 0, 1})).moduli_ok);
  EXPECT_TRUE(rsw::weil_modulus_check(X({-2, 0, 1})).moduli_ok);
  EXPECT_FALSE(rsw::weil_modulus_check(X({-3, 0, 1})).moduli_ok);
  auto m = rsw::weil_modulus_check(X({2, 0, 1}));
  EXPECT_TRUE(m.functional_eq);
  EXPECT_EQ(m.functional_sign, 1);
  auto h = rsw::weil_modulus_check(X({2, -2, 1}));
  EXPECT_TRUE(h.moduli_ok);
  EXPECT_LT(static_cast<double>(h.max_rel_dev), 1e-12);
}

TEST(WeilRecovery, Examples)
{
  auto r1 = rsw::recover_weil_poly(C("0,1"), oracle_sequence(C("0,1"), 8));
  EXPECT_EQ(r1.recovered, X({2, 0, 1}));
  EXPECT_EQ(r1.case_name, "elliptic");
  EXPECT_TRUE(r1.repredicts);
  EXPECT_TRUE(r1.moduli_ok);
  auto r2 = rsw::recover_weil_poly(C("0,2"), oracle_sequence(C("0,2"), 10));
  EXPECT_EQ(r2.recovered, X({4, 0, 0, 0, 1}));
  EXPECT_EQ(r2.recovered.degree(), 4);
  EXPECT_TRUE(r2.moduli_ok);
  EXPECT_TRUE(r2.repredicts);
  auto r3 = rsw::recover_weil_poly(C("0,1,2"), oracle_sequence(C("0,1,2"), 10));
  EXPECT_EQ(r3.recovered, X({8, 0, 0, -2, 0, 0, 1}));
}

TEST(WeilRecovery, Errors)
{
  EXPECT_THROW(rsw::recover_weil_poly(C("0,2"), oracle_sequence(C("0,2"), 3)), rsw::error);
  auto gap = oracle_sequence(C("0,1"), 6);
  gap.entries.erase(2);
  EXPECT_THROW(rsw::recover_weil_poly(C("0,1"), gap), rsw::error);
  auto rs = oracle_sequence(C("0,1"), 6);
  rs.context = rsw::Context::rs;
  EXPECT_THROW(rsw::recover_weil_poly(C("0,1"), rs), std::invalid_argument);
  // weights that are not a curve's: power sums of no integral multiset
  auto bad = oracle_sequence(C("0,2"), 4);
  bad.entries[1].weight = 1;
  for (unsigned n = 2; n <= 4; ++n)
    bad.entries[n].weight = 0;
  EXPECT_THROW(rsw::recover_weil_poly(C("0,2"), bad), rsw::error);
}

TEST(WeilRecovery, InventoryUpToDegreeNine)
{
  unsigned checked = 0;
  for (const auto& c : rsw::inventory()) {
    auto e = rsw::curve_degree(c);
    if (e > 9)
      continue;
    ++checked;
    unsigned n_max = static_cast<unsigned>(e) + 3;
    auto r = rsw::recover_weil_poly(c, oracle_sequence(c, n_max));
    EXPECT_EQ(r.recovered.degree(), static_cast<long>(e - 1)) << c.str();
    EXPECT_EQ(r.g, (e - 1) / 2);
    EXPECT_TRUE(r.repredicts) << c.str();
    EXPECT_TRUE(r.moduli_ok) << c.str() << " " << r.recovered.compact();
    EXPECT_TRUE(r.modulus.functional_eq) << c.str();
    // projective point count q + 1 - sum alpha^n against direct enumeration
    auto s = rsw::newton_power_sums(r.recovered, 6);
    for (unsigned n = 1; n <= 6; ++n)
      EXPECT_EQ(BigInt(oracle::curve_points(c, n) + 1), rsw::pow2(n) + 1 - s[n]) << c.str() << " n=" << n;
  }
  EXPECT_EQ(checked, 7U);
}

TEST(WeilRecovery, FastOracleAgreesWithSchoolbook)
{
  for (const char* s : {"0,1", "0,3", "0,1;0,3"}) {
    auto fast = rsw::trace_oracle_sequence(C(s), 10);
    auto slow = oracle_sequence(C(s), 10);
    for (unsigned n = 1; n <= 10; ++n)
      EXPECT_EQ(fast.entries.at(n).weight, slow.entries.at(n).weight) << s << " " << n;
  }
}
