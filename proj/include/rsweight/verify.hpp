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

#include <algorithm>
#include <string>
#include <vector>

#include "io.hpp"
#include "quadratic.hpp"
#include "rs_core.hpp"
#include "sft.hpp"
#include "weil.hpp"

namespace rsw {

/// Single tuples (0, a, b) and (0, a) with max offset <= 6, then all pairs
/// of quadratic tuples with offsets <= 4.
inline std::vector<TupleCollection> inventory()
{
  std::vector<TupleCollection> out;
  for (unsigned a = 1; a <= 6; ++a)
    out.emplace_back(std::vector<OffsetTuple>{{0, a}});
  for (unsigned a = 1; a <= 6; ++a)
    for (unsigned b = a + 1; b <= 6; ++b)
      out.emplace_back(std::vector<OffsetTuple>{{0, a, b}});
  for (unsigned a = 1; a <= 4; ++a)
    for (unsigned b = a + 1; b <= 4; ++b)
      out.emplace_back(std::vector<OffsetTuple>{{0, a}, {0, b}});
  return out;
}

inline std::vector<TupleCollection> quadratic_inventory()
{
  std::vector<TupleCollection> out;
  for (auto& c : inventory())
    if (c.is_quadratic())
      out.push_back(c);
  return out;
}

struct Claim {
  std::string claim;
  io::json params;
  io::json expected;
  io::json actual;
  bool pass = false;
  bool asserted = true; // informational claims never fail a run
};

struct VerifyOptions {
  unsigned t_max = 6;
  unsigned e_max = 9;
  unsigned n_max = 18;       // rs sweeps and plateau
  unsigned curve_n_max = 14; // trace sweeps
  unsigned formula_t_max = 5;
};

struct VerifyResult {
  std::vector<Claim> claims;
  io::json artifacts = io::json::object();

  bool pass() const
  {
    for (const auto& c : claims)
      if (c.asserted && !c.pass)
        return false;
    return true;
  }

  io::json claims_json() const
  {
    io::json a = io::json::array();
    std::size_t passed = 0, failed = 0, info = 0;
    for (const auto& c : claims) {
      a.push_back({{"claim", c.claim},
                   {"params", c.params},
                   {"expected", c.expected},
                   {"actual", c.actual},
                   {"pass", c.pass},
                   {"asserted", c.asserted}});
      if (!c.asserted)
        ++info;
      else if (c.pass)
        ++passed;
      else
        ++failed;
    }
    return {{"claims", a}, {"summary", {{"passed", passed}, {"failed", failed}, {"informational", info}}}};
  }
};

namespace detail {

inline io::json range_json(unsigned lo, unsigned hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

inline io::json index_list(const std::vector<unsigned>& v)
{
  io::json a = io::json::array();
  for (auto n : v)
    a.push_back(n);
  return a;
}

inline void add_claim(VerifyResult& r, std::string name, io::json params, io::json expected, io::json actual,
                      bool pass, bool asserted = true)
{
  r.claims.push_back({std::move(name), std::move(params), std::move(expected), std::move(actual), pass, asserted});
}

/// Runs f and records an exception as a failed claim.
template <class F>
void guarded(VerifyResult& r, const std::string& name, const io::json& params, F&& f)
{
  try {
    f();
  } catch (const std::exception& e) {
    add_claim(r, name, params, "no error", std::string("error: ") + e.what(), false);
  }
}

} // namespace detail

inline void suite_sft(VerifyResult& r, const VerifyOptions& opt, io::Caches& caches)
{
  io::json zeta = io::json::array();
  for (const auto& c : inventory()) {
    io::json params = {{"family", c.str()}, {"n", detail::range_json(1, opt.n_max)}};
    detail::guarded(r, "rs-sft-agreement", params, [&] {
      auto sys = build_transfer_system(build_local_rule(c));
      auto counts = periodic_counts(sys, opt.n_max);
      auto values = factor_char_poly(caches.charpoly.get(c)).nonzero;
      auto sums = newton_power_sums(values, opt.n_max);
      std::vector<unsigned> bad;
      for (unsigned n = 1; n <= opt.n_max; ++n) {
        BigInt w = rs_weight_oracle(c, n);
        if (2 * w != pow2(n + 1) - counts[n] || counts[n] != sums[n])
          bad.push_back(n);
      }
      detail::add_claim(r, "rs-sft-agreement", params, "oracle = 2^n - N_n/2 and N_n = power sum",
                        {{"mismatches", detail::index_list(bad)}}, bad.empty());

      io::json zp = {{"family", c.str()}, {"order", 12}};
      bool zok = zeta_series_check(sys, 12);
      auto den = zeta_denominator(sys);
      detail::add_claim(r, "zeta-series", zp, true, zok, zok);
      zeta.push_back({{"family", c.str()},
                      {"vertices", sys.vertex_count()},
                      {"denominator", io::poly_json(den)},
                      {"zeta", io::zeta_text(den)},
                      {"char_values", values.str()}});

      if (sys.window_len <= 6) {
        auto raw = build_transfer_system(build_local_rule(c), false);
        auto a = periodic_counts(raw, 10), b = periodic_counts(sys, 10);
        bool same = std::equal(a.begin() + 1, a.end(), b.begin() + 1, b.end());
        detail::add_claim(r, "trim-invariance", {{"family", c.str()}, {"n", detail::range_json(1, 10)}},
                          {{"vertices", raw.vertex_count()}},
                          {{"vertices", sys.vertex_count()}, {"counts_equal", same}}, same);
      }
    });
  }
  r.artifacts["zeta"] = std::move(zeta);
}

inline void suite_quadratic(VerifyResult& r, const VerifyOptions& opt)
{
  io::json char_polys = io::json::array();
  io::json deltas = io::json::array();
  for (unsigned t = 1; t <= opt.t_max; ++t) {
    io::json tp = {{"t", t}};
    detail::guarded(r, "rt-min-poly", tp, [&] {
      IntPoly expect = IntPoly::binomial(2 * t, pow2(t));
      IntPoly got = min_poly_Rt(t);
      detail::add_claim(r, "rt-min-poly", tp, expect.compact(), got.compact(), got == expect);
    });
    detail::guarded(r, "rt-trace-closed-form", tp, [&] {
      auto rt = build_Rt(t);
      IntMatrix p = rt.a;
      std::vector<unsigned> bad;
      for (unsigned n = 1; n <= 4 * t; ++n) {
        if (p.trace() != trace_Rt_closed_form(t, n))
          bad.push_back(n);
        p = left_mul_Rt(rt, p);
      }
      detail::add_claim(r, "rt-trace-closed-form", {{"t", t}, {"n", detail::range_json(1, 4 * t)}}, "match",
                        {{"mismatches", detail::index_list(bad)}}, bad.empty());
    });
    if (t > 1) {
      std::vector<unsigned> bad;
      for (unsigned n = 1; n < t; ++n)
        if (trace_via_hadamard(t, n) != trace_Rt_closed_form(t, n))
          bad.push_back(n);
      detail::add_claim(r, "rt-trace-hadamard", {{"t", t}, {"n", detail::range_json(1, t - 1)}}, "match",
                        {{"mismatches", detail::index_list(bad)}}, bad.empty());
    }
    {
      std::vector<unsigned> bad;
      for (unsigned n = 1; n <= t; ++n)
        if (trace_via_hadamard_columns(t, n) != trace_Rt_closed_form(t, n))
          bad.push_back(n);
      detail::add_claim(r, "rt-trace-hadamard-columns", {{"t", t}, {"n", detail::range_json(1, t)}}, "match",
                        {{"mismatches", detail::index_list(bad)}}, bad.empty());
    }
    detail::guarded(r, "rt-char-poly", tp, [&] {
      auto got = char_poly_Rt(t);
      auto expect = expected_char_values_Rt(t);
      bool ok = got == expect && got.degree() == (std::size_t{1} << t);
      detail::add_claim(r, "rt-char-poly", tp, expect.str(), got.str(), ok);
      char_polys.push_back({{"t", t}, {"factored", got.str()}, {"degree", got.degree()}});
      IntPoly full = rt_char_poly(t);
      bool even = full == full.negated_var();
      detail::add_claim(r, "rt-char-poly-even", tp, "char poly of R(t) = char poly of -R(t)", even, even);
    });
    detail::guarded(r, "delta-multiset", tp, [&] {
      auto dm = delta_multiset(t);
      std::vector<unsigned> bad;
      for (unsigned n = 1; n <= 4 * t; ++n)
        if (dm.unscaled_power_sum(n) != delta_power_sum_closed_form(t, n))
          bad.push_back(n);
      bool ok = bad.empty() && dm.total() == pow2(t);
      detail::add_claim(r, "delta-multiset", tp, {{"total", to_string(pow2(t))}},
                        {{"total", to_string(dm.total())}, {"power_sum_mismatches", detail::index_list(bad)}}, ok);
      io::json groups = io::json::array();
      for (const auto& [order, c] : dm.groups)
        groups.push_back({{"order", order}, {"multiplicity", to_string(c)}});
      deltas.push_back({{"t", t}, {"nu", dm.nu}, {"m", dm.m}, {"groups", groups}});
    });
    detail::guarded(r, "rt-row-structure", tp, [&] {
      bool ok = true;
      for (const auto& d : verify_desc_rt(t))
        ok = ok && d.pass;
      detail::add_claim(r, "rt-row-structure", tp, true, ok, ok);
    });
    if (t <= opt.formula_t_max) {
      auto f = quad_weight_formula_seq(t, opt.n_max);
      TupleCollection c(std::vector<OffsetTuple>{{0, t}});
      std::vector<unsigned> bad, small_agree;
      for (unsigned n = 1; n <= opt.n_max; ++n) {
        bool eq = f[n] == rs_weight_oracle(c, n);
        if (n >= 2 * t + 1 && !eq)
          bad.push_back(n);
        if (n < 2 * t + 1 && eq)
          small_agree.push_back(n);
      }
      detail::add_claim(r, "weight-formula", {{"t", t}, {"n", detail::range_json(2 * t + 1, opt.n_max)}}, "match",
                        {{"mismatches", detail::index_list(bad)}}, bad.empty());
      detail::add_claim(r, "weight-formula-small-n", {{"t", t}, {"n", detail::range_json(1, 2 * t)}}, nullptr,
                        {{"agree_at", detail::index_list(small_agree)}}, true, false);
    }
  }
  {
    std::vector<unsigned> bad;
    for (unsigned q : {3U, 5U, 7U})
      for (unsigned d = 1; d <= 30; ++d) {
        if (std::gcd(q, d) != 1)
          continue;
        BigInt s = 0;
        for (auto dp : divisors(d))
          s += mobius(d / dp) * boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(dp));
        if (s % d != 0)
          bad.push_back(100 * q + d);
      }
    detail::add_claim(r, "mobius-divisibility", {{"q", {3, 5, 7}}, {"d", detail::range_json(1, 30)}},
                      "d | sum mu(d/d') q^d'", {{"failures_100q_plus_d", detail::index_list(bad)}}, bad.empty());
  }
  {
    std::vector<unsigned> bad;
    for (unsigned d = 1; d <= 48; ++d) {
      auto fs = theta_factors(d);
      IntPoly prod = IntPoly::constant(BigInt(1));
      for (const auto& f : fs)
        prod = prod * f;
      bool split = fs.size() > 1;
      if (split != (d % 8 == 4) || prod != theta(d))
        bad.push_back(d);
    }
    detail::add_claim(r, "theta-split", {{"d", detail::range_json(1, 48)}}, "split iff d = 4 mod 8",
                      {{"mismatches", detail::index_list(bad)}}, bad.empty());
  }
  {
    std::vector<unsigned> bad;
    for (unsigned n = 1; n <= 12; ++n)
      if (!centr_symmetry_check(n))
        bad.push_back(n);
    detail::add_claim(r, "hadamard-center-symmetry", {{"n", detail::range_json(1, 12)}}, "symmetric",
                      {{"mismatches", detail::index_list(bad)}}, bad.empty());
    bad.clear();
    for (unsigned n = 1; n <= 10; ++n)
      if (!hadamard_orthogonality_check(n))
        bad.push_back(n);
    detail::add_claim(r, "hadamard-orthogonality", {{"n", detail::range_json(1, 10)}}, "orthogonal",
                      {{"mismatches", detail::index_list(bad)}}, bad.empty());
  }
  for (const auto& c : quadratic_inventory())
    for (Context ctx : {Context::rs, Context::trace}) {
      io::json p = {{"family", c.str()}, {"context", context_name(ctx)}};
      detail::guarded(r, "recurrence-order", p, [&] {
        auto rep = recurrence_order_check(c, ctx);
        detail::add_claim(r, "recurrence-order", p,
                          {{"max_order", 2 * rep.period + 1}, {"divides", "(x-2)(x^2N -+ 2^N)"}},
                          {{"min_poly", rep.min_poly.compact()},
                           {"order", rep.min_poly.degree()},
                           {"sign", rep.divisor_sign},
                           {"overlap_ok", rep.overlap_ok}},
                          rep.pass());
        auto g = group_order_report(c, ctx);
        bool ok = g.certified && g.case_label != "other";
        detail::add_claim(r, "phase-group-order", p, "N, 2N or 4N",
                          {{"N", g.period}, {"order", g.order}, {"case", g.case_label}}, ok);
      });
      io::json pp = {{"family", c.str()}, {"context", context_name(ctx)}, {"n", detail::range_json(1, opt.n_max)}};
      detail::guarded(r, "plateau", pp, [&] {
        std::vector<unsigned> literal_bad, walsh_bad;
        for (unsigned n = 1; n <= opt.n_max; ++n) {
          BigInt w = ctx == Context::rs ? rs_weight_oracle(c, n) : trace_weight_oracle(c, n);
          unsigned v = plateau_v(c, n);
          bool literal = w == 0;
          if ((n + v) % 2 == 0) {
            BigInt h = pow2((n + v) / 2 - 1);
            literal = literal || w == pow2(n - 1) + h || w == pow2(n - 1) - h;
          }
          BigInt walsh = walsh_zero_from_weight(w, n);
          BigInt a = walsh < 0 ? BigInt(-walsh) : walsh;
          bool balanced_or_peak = a == 0 || ((n + v) % 2 == 0 && a == pow2((n + v) / 2));
          if (!literal)
            literal_bad.push_back(n);
          if (!balanced_or_peak)
            walsh_bad.push_back(n);
        }
        detail::add_claim(r, "plateau-walsh", pp, "|W(0)| in {0, 2^((n+v)/2)}",
                          {{"mismatches", detail::index_list(walsh_bad)}}, walsh_bad.empty());
        detail::add_claim(r, "plateau-weight-set", pp, "wt in {0, 2^(n-1) +- 2^((n+v)/2-1)}",
                          {{"outside", detail::index_list(literal_bad)}}, literal_bad.empty(), false);
      });
    }
  r.artifacts["char_polys"] = std::move(char_polys);
  r.artifacts["deltas"] = std::move(deltas);
}

inline void suite_weil(VerifyResult& r, const VerifyOptions& opt, io::Caches& caches)
{
  io::json reports = io::json::array();
  for (const auto& c : inventory()) {
    if (curve_degree(c) > opt.e_max)
      continue;
    io::json p = {{"family", c.str()}, {"n", detail::range_json(1, opt.curve_n_max)}};
    detail::guarded(r, "weil-recovery", p, [&] {
      WeightSequence ws;
      ws.family = c;
      ws.context = Context::trace;
      std::vector<unsigned> curve_bad, pair_bad;
      for (unsigned n = 1; n <= opt.curve_n_max; ++n) {
        OracleOptions o{24, 1, &caches.irreducible.get(n)};
        BigInt w = trace_weight_oracle(c, n, o);
        ws.entries[n] = {w, Provenance::oracle};
        if (curve_point_count(c, n) != pow2(n + 1) - 2 * w)
          curve_bad.push_back(n);
        if (rs_pair_count(c, n) != pow2(n + 1) - 2 * rs_weight_oracle(c, n))
          pair_bad.push_back(n);
      }
      detail::add_claim(r, "curve-point-identity", p, "#curve = 2^(n+1) - 2 wt",
                        {{"mismatches", detail::index_list(curve_bad)}}, curve_bad.empty());
      detail::add_claim(r, "rs-pair-identity", p, "#pairs = 2^(n+1) - 2 wt",
                        {{"mismatches", detail::index_list(pair_bad)}}, pair_bad.empty());

      auto rep = recover_weil_poly(c, ws);
      bool ok = rep.recovered.is_monic() && rep.recovered.degree() == static_cast<long>(rep.e - 1) &&
                rep.moduli_ok && rep.repredicts;
      if (c.str() == "0,1")
        ok = ok && rep.recovered == IntPoly{BigInt(2), BigInt(0), BigInt(1)};
      detail::add_claim(r, "weil-recovery", p, {{"degree", rep.e - 1}, {"modulus", "sqrt 2"}, {"repredicts", true}},
                        {{"polynomial", rep.recovered.compact()},
                         {"max_rel_dev", static_cast<double>(rep.modulus.max_rel_dev)},
                         {"repredicts", rep.repredicts},
                         {"mismatches", detail::index_list(rep.mismatches)}},
                        ok);
      detail::add_claim(r, "weil-functional-equation", {{"family", c.str()}}, "x^m p(2/x) = +-2^(m/2) p(x)",
                        {{"holds", rep.modulus.functional_eq}, {"sign", rep.modulus.functional_sign}},
                        rep.modulus.functional_eq);

      auto rs_values = factor_char_poly(caches.charpoly.get(c)).nonzero;
      CharValueSet weil_values(factor_over_Z(rep.recovered));
      detail::add_claim(r, "rs-trace-char-values", {{"family", c.str()}}, nullptr,
                        {{"rs", rs_values.str()}, {"trace", weil_values.str()}, {"equal", rs_values == weil_values}},
                        true, false);
      if (c.is_quadratic()) {
        unsigned vmax = 0;
        for (unsigned n = 1; n <= 2 * period_N(c); ++n)
          vmax = std::max(vmax, plateau_v(c, n));
        detail::add_claim(r, "alpha-count", {{"family", c.str()}}, nullptr,
                          {{"max_2^(v/2)", to_string(pow2(vmax / 2))},
                           {"e-1", rep.e - 1},
                           {"nonzero_values", CharValueSet(factor_over_Z(rep.recovered)).degree()}},
                          true, false);
      }
      reports.push_back({{"family", c.str()},
                         {"e", rep.e},
                         {"g", rep.g},
                         {"case", rep.case_name},
                         {"coefficients", io::poly_json(rep.recovered)},
                         {"text", rep.recovered.compact()},
                         {"delta_count", rep.delta_count},
                         {"moduli_ok", rep.moduli_ok}});
    });
  }
  r.artifacts["weil"] = std::move(reports);
}

inline VerifyResult run_suites(const std::string& suite, const VerifyOptions& opt, io::Caches& caches)
{
  VerifyResult r;
  bool all = suite == "all";
  if (!all && suite != "sft" && suite != "quadratic" && suite != "weil")
    throw error(errc::parse_error, "unknown suite \"" + suite + "\"");
  if (all || suite == "sft")
    suite_sft(r, opt, caches);
  if (all || suite == "quadratic")
    suite_quadratic(r, opt);
  if (all || suite == "weil")
    suite_weil(r, opt, caches);
  return r;
}

} // namespace rsw
