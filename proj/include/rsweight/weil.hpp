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

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "factor.hpp"
#include "int_algebra.hpp"
#include "roots.hpp"
#include "rs_core.hpp"
#include "tuples.hpp"

namespace rsw {

/// e = max over tuples of 1 + 2^a_1 + ... + 2^a_{d-1}
inline std::uint64_t curve_degree(const TupleCollection& c)
{
  if (c.empty())
    throw error(errc::empty_collection, "curve_degree: empty tuple collection");
  std::uint64_t e = 0;
  for (const auto& t : c.tuples()) {
    std::uint64_t s = 0;
    for (unsigned a : t) {
      if (a >= 62)
        throw error(errc::cap_exceeded, "curve_degree: offset too large");
      s += std::uint64_t{1} << a;
    }
    e = std::max(e, s);
  }
  return e;
}

inline std::uint64_t genus(const TupleCollection& c) { return (curve_degree(c) - 1) / 2; }

struct ModulusCheck {
  bool moduli_ok = false;
  long double max_rel_dev = 0; // max over roots of | |z| / sqrt 2 - 1 |
  bool functional_eq = false;  // x^m p(2/x) = +-2^(m/2) p(x)
  int functional_sign = 0;
};

/// Roots of p (found per irreducible factor) all of modulus sqrt 2 within
/// rel_tol, plus the exact functional-equation test for even degree.
inline ModulusCheck weil_modulus_check(const IntPoly& p, long double rel_tol = 1e-9L)
{
  ModulusCheck r;
  if (p.degree() < 1)
    return r;
  const long double s2 = std::sqrt(2.0L);
  r.moduli_ok = true;
  for (const auto& f : factor_over_Z(p))
    for (const auto& z : poly_roots(f.poly)) {
      long double dev = std::fabs(std::abs(z) / s2 - 1.0L);
      r.max_rel_dev = std::max(r.max_rel_dev, dev);
      if (!(dev <= rel_tol))
        r.moduli_ok = false;
    }
  auto m = static_cast<std::size_t>(p.degree());
  if (m % 2 == 0) {
    BigInt scale = pow2(static_cast<unsigned>(m / 2));
    for (int sign : {1, -1}) {
      bool ok = true;
      for (std::size_t k = 0; k <= m && ok; ++k)
        ok = p.coeff(k) * pow2(static_cast<unsigned>(k)) == sign * scale * p.coeff(m - k);
      if (ok) {
        r.functional_eq = true;
        r.functional_sign = sign;
        break;
      }
    }
  }
  return r;
}

struct WeilReport {
  std::uint64_t e = 0;
  std::uint64_t g = 0;
  IntPoly recovered;
  bool integral = true;
  std::uint64_t delta_count = 0;
  bool moduli_ok = false;
  ModulusCheck modulus;
  bool repredicts = false;
  unsigned repredict_from = 0, repredict_to = 0;
  std::vector<unsigned> mismatches;
  std::string case_name; // "elliptic" (e = 3) or "singular"
};

/// Recovers the degree e-1 polynomial whose roots' power sums give
/// s_n = 2 wt(g_n) - 2^n, then re-predicts the remaining weights.
inline WeilReport recover_weil_poly(const TupleCollection& c, const WeightSequence& weights)
{
  if (weights.context != Context::trace)
    throw std::invalid_argument("recover_weil_poly: trace-context weights required");
  WeilReport r;
  r.e = curve_degree(c);
  r.g = (r.e - 1) / 2;
  r.case_name = r.e == 3 ? "elliptic" : "singular";
  auto m = static_cast<std::size_t>(r.e - 1);
  unsigned n_top = weights.entries.empty() ? 0 : weights.entries.rbegin()->first;
  for (unsigned n = 1; n <= std::max<unsigned>(n_top, static_cast<unsigned>(m)); ++n)
    if (!weights.entries.count(n))
      throw error(errc::insufficient_data, "recover_weil_poly: weights must cover n = 1.." + std::to_string(m) +
                                               " without gaps");
  std::vector<BigInt> s(n_top + 1, BigInt(0));
  s[0] = m;
  for (unsigned n = 1; n <= n_top; ++n)
    s[n] = 2 * weights.entries.at(n).weight - pow2(n);
  std::vector<BigRat> sq(s.begin(), s.begin() + static_cast<long>(m + 1));
  RatPoly rp = rat_poly_from_power_sums(sq, m);
  for (const auto& v : rp.coeffs())
    if (!is_integer(v))
      r.integral = false;
  if (!r.integral)
    throw error(errc::non_integral, "recover_weil_poly: power sums of " + c.str() +
                                        " do not come from an algebraic-integer multiset of degree " +
                                        std::to_string(m));
  r.recovered = to_int(rp);
  auto pred = newton_power_sums(r.recovered, n_top);
  r.repredict_from = static_cast<unsigned>(m + 1);
  r.repredict_to = n_top;
  for (unsigned n = r.repredict_from; n <= n_top; ++n)
    if (pred[n] != s[n])
      r.mismatches.push_back(n);
  r.repredicts = r.mismatches.empty();
  if (!r.repredicts) {
    std::vector<BigInt> tail(s.begin() + 1, s.end());
    auto deg = static_cast<std::uint64_t>(berlekamp_massey(tail).degree());
    r.delta_count = deg > m ? deg - m : 1;
  }
  r.modulus = weil_modulus_check(r.recovered);
  r.moduli_ok = r.modulus.moduli_ok;
  return r;
}

/// Trace-context oracle weights for n = 1..n_max.
inline WeightSequence trace_oracle_sequence(const TupleCollection& c, unsigned n_max, const OracleOptions& opt = {24, 1})
{
  WeightSequence w;
  w.family = c;
  w.context = Context::trace;
  for (unsigned n = 1; n <= n_max; ++n)
    w.entries[n] = {trace_weight_oracle(c, n, opt), Provenance::oracle};
  return w;
}

} // namespace rsw
