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

#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "gf2_poly.hpp"
#include "int_algebra.hpp"
#include "matrix.hpp"
#include "roots.hpp"
#include "rs_core.hpp"
#include "sft.hpp"
#include "tuples.hpp"

namespace rsw {

/// Rotates right k times: the last entry moves to the front.
inline std::vector<long long> mu_rotate(const std::vector<long long>& v, std::size_t k)
{
  std::size_t n = v.size();
  if (n == 0)
    return v;
  k %= n;
  std::vector<long long> r(n);
  for (std::size_t i = 0; i < n; ++i)
    r[(i + k) % n] = v[i];
  return r;
}

struct RtMatrix {
  unsigned t = 0;
  IntMatrix a;
};

inline RtMatrix build_Rt(unsigned t, unsigned cap = 8)
{
  if (t == 0)
    throw std::invalid_argument("build_Rt: t must be positive");
  if (t > cap)
    throw error(errc::cap_exceeded, "build_Rt: t=" + std::to_string(t) + " exceeds cap " + std::to_string(cap));
  std::size_t size = std::size_t{1} << t, half = size / 2;
  std::vector<long long> plus(size, 0), minus(size, 0);
  plus[0] = plus[half] = 1;
  minus[0] = 1;
  minus[half] = -1;
  RtMatrix r{t, IntMatrix(size)};
  for (std::size_t i = 0; i < half; ++i) {
    auto p = mu_rotate(plus, i), m = mu_rotate(minus, i);
    for (std::size_t j = 0; j < size; ++j) {
      r.a(2 * i, j) = p[j];
      r.a(2 * i + 1, j) = m[j];
    }
  }
  return r;
}

/// R(t) * m using the two nonzeros per row of R(t).
inline IntMatrix left_mul_Rt(const RtMatrix& r, const IntMatrix& m)
{
  std::size_t n = r.a.size();
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& c = r.a(i, k);
      if (c == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += c * m(k, j);
    }
  return out;
}

/// R(t)^1 .. R(t)^n_max (index 0 is the identity).
inline std::vector<IntMatrix> Rt_powers(const RtMatrix& r, unsigned n_max)
{
  std::vector<IntMatrix> p{IntMatrix::identity(r.a.size())};
  for (unsigned n = 1; n <= n_max; ++n)
    p.push_back(left_mul_Rt(r, p.back()));
  return p;
}

namespace detail {

/// Eliminates the flattened powers I, A, A^2, ... (next() yields A^(k+1)
/// from A^k) until the first linear dependency; returns that relation.
template <class Next>
IntPoly krylov_relation(std::size_t n, Next next)
{
  std::size_t len = n * n;
  struct Row {
    std::vector<BigRat> v;
    std::vector<BigRat> comb;
    std::size_t pivot;
  };
  std::vector<Row> basis;
  IntMatrix p = IntMatrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<BigRat> v(len);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        v[i * n + j] = BigRat(p(i, j));
    std::vector<BigRat> comb(k + 1, BigRat(0));
    comb[k] = 1;
    for (const auto& b : basis) {
      if (v[b.pivot] == 0)
        continue;
      BigRat f = v[b.pivot] / b.v[b.pivot];
      for (std::size_t j = 0; j < len; ++j)
        if (b.v[j] != 0)
          v[j] -= f * b.v[j];
      for (std::size_t j = 0; j < b.comb.size(); ++j)
        comb[j] -= f * b.comb[j];
    }
    std::size_t piv = 0;
    while (piv < len && v[piv] == 0)
      ++piv;
    if (piv == len)
      return to_int(RatPoly(std::move(comb)));
    basis.push_back({std::move(v), std::move(comb), piv});
    p = next(p);
  }
  throw std::logic_error("krylov_relation: no relation found");
}

} // namespace detail

/// Minimal polynomial of an integer matrix by exact Krylov elimination.
inline IntPoly min_poly_krylov(const IntMatrix& a)
{
  return detail::krylov_relation(a.size(), [&](const IntMatrix& p) { return p * a; });
}

inline IntPoly min_poly_Rt(unsigned t, unsigned cap = 8)
{
  auto r = build_Rt(t, cap);
  IntPoly mp = detail::krylov_relation(r.a.size(), [&](const IntMatrix& p) { return left_mul_Rt(r, p); });
  if (mp != IntPoly::binomial(2 * t, pow2(t)))
    throw error(errc::closed_form_mismatch, "min_poly_Rt: got " + mp.str() + " for t=" + std::to_string(t));
  return mp;
}

/// tr R(t)^n = 2^(n/2 + gcd(n,t)) when n/gcd(n,t) is even, else 0.
inline BigInt trace_Rt_closed_form(unsigned t, unsigned n)
{
  unsigned g = std::gcd(n, t);
  if ((n / g) % 2 != 0)
    return 0;
  return pow2(n / 2 + g);
}

/// sum over the unscaled deltas of delta^n.
inline BigInt delta_power_sum_closed_form(unsigned t, unsigned n)
{
  unsigned g = std::gcd(n, t);
  if ((n / g) % 2 != 0)
    return 0;
  return pow2(g);
}

/// tr R(t)^n by exact powering; must agree with the closed form.
inline BigInt trace_Rt_power(unsigned t, unsigned n, unsigned cap = 8)
{
  if (n == 0)
    throw std::invalid_argument("trace_Rt_power: n must be positive");
  auto r = build_Rt(t, cap);
  IntMatrix p = r.a;
  for (unsigned k = 1; k < n; ++k)
    p = left_mul_Rt(r, p);
  BigInt tr = p.trace();
  BigInt expect = trace_Rt_closed_form(t, n);
  if (tr != expect)
    throw error(errc::closed_form_mismatch, "trace_Rt_power: t=" + std::to_string(t) + " n=" + std::to_string(n) +
                                                " gives " + tr.str() + ", closed form " + expect.str());
  return tr;
}

/// Exact characteristic polynomial of R(t) from its power traces.
inline IntPoly rt_char_poly(unsigned t, unsigned cap = 8)
{
  auto r = build_Rt(t, cap);
  std::size_t size = r.a.size();
  std::vector<BigInt> traces(size + 1);
  traces[0] = size;
  IntMatrix p = r.a;
  for (std::size_t n = 1; n <= size; ++n) {
    traces[n] = p.trace();
    if (n < size)
      p = left_mul_Rt(r, p);
  }
  return poly_from_power_sums(traces, size);
}

inline CharValueSet char_poly_Rt(unsigned t, unsigned cap = 8)
{
  auto f = factor_char_poly(rt_char_poly(t, cap), 2 * static_cast<std::uint64_t>(t));
  if (f.zero_multiplicity != 0)
    throw error(errc::closed_form_mismatch, "char_poly_Rt: unexpected zero eigenvalue");
  return f.nonzero;
}


struct DeltaEntry {
  std::uint64_t order = 1;   // M
  std::uint64_t residue = 0; // k: root sqrt(2) exp(2 pi i k / M)
  BigInt multiplicity;
};

struct DeltaMultiset {
  unsigned t = 0;
  unsigned nu = 0;
  std::uint64_t m = 1;
  // per divisor d of m: (M_d = 2^(nu+1) d, c_d)
  std::vector<std::pair<std::uint64_t, BigInt>> groups;
  std::vector<DeltaEntry> entries;

  BigInt total() const
  {
    BigInt s = 0;
    for (const auto& [order, c] : groups)
      s += c * order;
    return s;
  }

  /// sum of zeta^n over the unscaled roots of unity, exact
  BigInt unscaled_power_sum(std::uint64_t n) const
  {
    BigInt s = 0;
    for (const auto& [order, c] : groups)
      if (n % order == 0)
        s += c * order;
    return s;
  }

  /// sum of delta^n for delta = sqrt(2) zeta
  BigInt power_sum(std::uint64_t n) const
  {
    BigInt u = unscaled_power_sum(n);
    if (u == 0)
      return 0;
    if (n % 2 != 0)
      throw std::logic_error("DeltaMultiset: odd power with nonzero unscaled sum");
    return u * pow2(static_cast<unsigned>(n / 2));
  }
};

inline DeltaMultiset delta_multiset(unsigned t)
{
  if (t == 0)
    throw std::invalid_argument("delta_multiset: t must be positive");
  DeltaMultiset dm;
  dm.t = t;
  dm.m = t;
  while (dm.m % 2 == 0) {
    dm.m /= 2;
    ++dm.nu;
  }
  for (auto d : divisors(dm.m)) {
    BigInt num = 0;
    for (auto dp : divisors(d)) {
      int mu = mobius(d / dp);
      if (mu != 0)
        num += mu * pow2(static_cast<unsigned>((std::uint64_t{1} << dm.nu) * dp));
    }
    std::uint64_t order = (std::uint64_t{2} << dm.nu) * d;
    if (num % order != 0)
      throw error(errc::non_integral_multiplicity, "delta_multiset: multiplicity for d=" + std::to_string(d) +
                                                       " is not an integer");
    BigInt c = num / order;
    dm.groups.emplace_back(order, c);
    for (std::uint64_t k = 0; k < order; ++k)
      dm.entries.push_back({order, k, c});
  }
  return dm;
}

/// prod over d | t of the Theta_d factors with multiplicities read off the
/// delta multiset.
inline CharValueSet expected_char_values_Rt(unsigned t)
{
  auto dm = delta_multiset(t);
  CharValueSet s;
  for (auto d2 : divisors(t)) {
    BigInt mult = 0;
    for (const auto& [order, c] : dm.groups)
      if (order % (2 * d2) == 0)
        mult += c;
    if (mult == 0)
      continue;
    for (const auto& q : theta_factors(d2))
      s.add(q, static_cast<unsigned>(mult));
  }
  return s;
}

/// w_n = 2^(n-1) - (sum of delta^n) / 2, n = 1..n_max, from the expanded
/// Theta product by Newton's identities.
inline std::vector<BigInt> quad_weight_formula_seq(unsigned t, unsigned n_max)
{
  auto p = newton_power_sums(expected_char_values_Rt(t), n_max);
  std::vector<BigInt> w(n_max + 1, BigInt(0));
  for (unsigned n = 1; n <= n_max; ++n) {
    if (p[n] % 2 != 0)
      throw error(errc::non_integral, "quad_weight_formula: odd power sum");
    w[n] = pow2(n - 1) - p[n] / 2;
  }
  return w;
}

inline BigInt quad_weight_formula(unsigned t, unsigned n)
{
  if (n == 0)
    throw std::invalid_argument("quad_weight_formula: n must be positive");
  return quad_weight_formula_seq(t, n)[n];
}

// Hadamard tensor powers

inline int hadamard_entry(std::uint64_t k, std::uint64_t l) { return (std::popcount(k & l) & 1) ? -1 : 1; }

/// M(n,t) = M(n) with 2^(t-n) - 1 zero columns after each column.
inline std::vector<std::vector<int>> hadamard_spread(unsigned n, unsigned t)
{
  std::size_t rows = std::size_t{1} << n, cols = std::size_t{1} << t, gap = std::size_t{1} << (t - n);
  std::vector<std::vector<int>> m(rows, std::vector<int>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < rows; ++j)
      m[i][j * gap] = hadamard_entry(i, j);
  return m;
}

struct DescRtCheck {
  unsigned n = 0;
  char part = 'a';
  bool pass = false;
};

inline std::vector<DescRtCheck> verify_desc_rt(unsigned t, unsigned cap = 8)
{
  auto r = build_Rt(t, cap);
  auto pw = Rt_powers(r, 2 * t - 1);
  std::size_t size = r.a.size();
  std::vector<DescRtCheck> out;
  for (unsigned n = 1; n <= t; ++n) {
    auto block = hadamard_spread(n, t);
    std::size_t rows = block.size(), copies = std::size_t{1} << (t - n);
    bool ok = true;
    for (std::size_t c = 0; c < copies && ok; ++c)
      for (std::size_t i = 0; i < rows && ok; ++i)
        for (std::size_t j = 0; j < size && ok; ++j)
          ok = pw[n](c * rows + i, (j + c) % size) == block[i][j];
    out.push_back({n, 'a', ok});
  }
  for (unsigned n = t; n <= 2 * t - 1; ++n) {
    IntMatrix rhs = pw[2 * t - n].transpose() * pow2(n - t);
    out.push_back({n, 'b', pw[n] == rhs});
  }
  return out;
}

/// Sum of M(n) entries at (q + r 2^a, q 2^b + r), a = t mod n, b = n - a.
inline BigInt trace_via_hadamard(unsigned t, unsigned n)
{
  if (n == 0 || n >= t)
    throw std::invalid_argument("trace_via_hadamard: need 1 <= n < t");
  unsigned a = t % n, b = n - a;
  long long s = 0;
  for (std::uint64_t q = 0; q < (std::uint64_t{1} << a); ++q)
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << b); ++r)
      s += hadamard_entry(q + (r << a), (q << b) + r);
  return BigInt(s);
}

/// Column form: the lower right corner plus, in each column k < 2^n - 1,
/// the entry in row 2^(t-n) k mod (2^n - 1).
inline BigInt trace_via_hadamard_columns(unsigned t, unsigned n)
{
  if (n == 0 || n > t)
    throw std::invalid_argument("trace_via_hadamard_columns: need 1 <= n <= t");
  std::uint64_t mod = (std::uint64_t{1} << n) - 1;
  std::uint64_t mult = 1 % std::max<std::uint64_t>(mod, 1);
  for (unsigned i = 0; i < t - n; ++i)
    mult = mod ? (mult * 2) % mod : 0;
  long long s = hadamard_entry(mod, mod);
  for (std::uint64_t k = 0; k < mod; ++k)
    s += hadamard_entry(mod ? (mult * k) % mod : 0, k);
  return BigInt(s);
}

/// Reflection across the center of M(n) at every coordinate of the form
/// (q + r 2^a, q 2^b + r) with a + b = n.
inline bool centr_symmetry_check(unsigned n)
{
  if (n == 0 || n > 12)
    throw std::invalid_argument("centr_symmetry_check: n must be in 1..12");
  std::uint64_t last = (std::uint64_t{1} << n) - 1;
  int sign = (n % 2 == 0) ? 1 : -1;
  for (unsigned a = 0; a <= n; ++a) {
    unsigned b = n - a;
    for (std::uint64_t q = 0; q < (std::uint64_t{1} << a); ++q)
      for (std::uint64_t r = 0; r < (std::uint64_t{1} << b); ++r) {
        std::uint64_t k = q + (r << a), l = (q << b) + r;
        if (hadamard_entry(last - k, last - l) != sign * hadamard_entry(k, l))
          return false;
      }
  }
  return true;
}

/// Number of index pairs (k, l) of M(n) whose central reflection obeys the
/// sign rule; all 4^n pairs are examined.
inline std::uint64_t centr_symmetry_full_count(unsigned n)
{
  std::uint64_t last = (std::uint64_t{1} << n) - 1, ok = 0;
  int sign = (n % 2 == 0) ? 1 : -1;
  for (std::uint64_t k = 0; k <= last; ++k)
    for (std::uint64_t l = 0; l <= last; ++l)
      ok += hadamard_entry(last - k, last - l) == sign * hadamard_entry(k, l);
  return ok;
}

/// M(n) M(n)^T = 2^n I. Entry (k, l) of the product is the sum over j of
/// (-1)^popcount((k ^ l) & j); direct multiplication for n <= direct_max.
inline bool hadamard_orthogonality_check(unsigned n, unsigned direct_max = 7)
{
  std::uint64_t size = std::uint64_t{1} << n;
  if (n <= direct_max) {
    for (std::uint64_t k = 0; k < size; ++k)
      for (std::uint64_t l = 0; l < size; ++l) {
        long long s = 0;
        for (std::uint64_t j = 0; j < size; ++j)
          s += hadamard_entry(k, j) * hadamard_entry(l, j);
        if (s != (k == l ? static_cast<long long>(size) : 0))
          return false;
      }
    return true;
  }
  for (std::uint64_t x = 0; x < size; ++x) {
    long long s = 0;
    for (std::uint64_t j = 0; j < size; ++j)
      s += hadamard_entry(x, j);
    if (s != (x == 0 ? static_cast<long long>(size) : 0))
      return false;
  }
  return true;
}

// Weights of quadratic families beyond the enumeration caps

struct QuadraticCaps {
  unsigned rs_cap = 24;
  unsigned trace_cap = 20;
};

/// Enumeration up to the cap, exact quadratic-form weight beyond it.
inline WeightEntry quadratic_family_weight(const TupleCollection& c, Context ctx, unsigned n,
                                           const QuadraticCaps& caps = {})
{
  if (ctx == Context::rs) {
    if (n <= caps.rs_cap)
      return {rs_weight_oracle(c, n, {caps.rs_cap, 1}), Provenance::oracle};
    return {rs_weight_quadratic(c, n).weight, Provenance::formula};
  }
  if (n <= caps.trace_cap)
    return {trace_weight_oracle(c, n, {caps.trace_cap, 1}), Provenance::oracle};
  return {trace_weight_quadratic(c, n).weight, Provenance::formula};
}

struct RecurrenceReport {
  TupleCollection family;
  Context context = Context::rs;
  std::uint64_t period = 0;  // N
  unsigned window = 0;       // number of weights fed to Berlekamp-Massey
  unsigned oracle_terms = 0; // how many of them came from enumeration
  bool overlap_ok = true;    // enumeration and quadratic-form weights agree where both run
  IntPoly min_poly;
  bool order_ok = false;     // degree <= 2N + 1
  int divisor_sign = 0;      // -1: divides (x-2)(x^2N - 2^N); +1: (x-2)(x^2N + 2^N); 0: neither
  bool annihilates_window = false;

  bool pass() const { return overlap_ok && order_ok && divisor_sign != 0 && annihilates_window; }
};

inline RecurrenceReport recurrence_order_check(const TupleCollection& c, Context ctx, const QuadraticCaps& caps = {},
                                               unsigned overlap_max = 12)
{
  if (!c.is_quadratic())
    throw error(errc::non_quadratic, "recurrence_order_check: collection is not quadratic");
  RecurrenceReport rep;
  rep.family = c;
  rep.context = ctx;
  rep.period = period_N(c);
  rep.window = static_cast<unsigned>(2 * (2 * rep.period + 1));
  std::vector<BigInt> w;
  for (unsigned n = 1; n <= rep.window; ++n) {
    auto e = quadratic_family_weight(c, ctx, n, caps);
    if (e.provenance == Provenance::oracle) {
      ++rep.oracle_terms;
      if (n <= overlap_max) {
        BigInt q = ctx == Context::rs ? rs_weight_quadratic(c, n).weight : trace_weight_quadratic(c, n).weight;
        rep.overlap_ok = rep.overlap_ok && q == e.weight;
      }
    }
    w.push_back(e.weight);
  }
  RatPoly mp = berlekamp_massey(w);
  rep.annihilates_window = annihilates(mp, w);
  rep.min_poly = to_int(mp);
  rep.order_ok = rep.min_poly.degree() <= static_cast<long>(2 * rep.period + 1);
  IntPoly xm2{BigInt(-2), BigInt(1)};
  auto n2 = static_cast<std::size_t>(2 * rep.period);
  auto pn = pow2(static_cast<unsigned>(rep.period));
  if (divides(rep.min_poly, xm2 * IntPoly::binomial(n2, pn)))
    rep.divisor_sign = -1;
  else if (divides(rep.min_poly, xm2 * IntPoly::binomial(n2, BigInt(-pn))))
    rep.divisor_sign = 1;
  return rep;
}

/// Order of the group generated by the phases of the characteristic values
/// attached to a quadratic family, read from the minimal recurrence of
/// sum alpha^n = 2^n - 2 wt (rs) or 2 wt - 2^n (trace).
struct GroupOrderReport {
  std::uint64_t period = 0;
  std::uint64_t order = 0;
  std::string case_label; // "N", "2N", "4N" or "other"
  bool certified = false; // minimal polynomial divides x^(2 order) - 2^order
};

inline GroupOrderReport group_order_report(const TupleCollection& c, Context ctx, const QuadraticCaps& caps = {})
{
  GroupOrderReport rep;
  rep.period = period_N(c);
  unsigned window = static_cast<unsigned>(2 * (2 * rep.period + 1));
  std::vector<BigInt> s;
  for (unsigned n = 1; n <= window; ++n) {
    BigInt w = quadratic_family_weight(c, ctx, n, caps).weight;
    s.push_back(ctx == Context::rs ? pow2(n) - 2 * w : 2 * w - pow2(n));
  }
  IntPoly mp = to_int(berlekamp_massey(s));
  std::uint64_t ord = 1;
  for (const auto& z : poly_roots(mp)) {
    Complex chi = z / std::sqrt(2.0L);
    std::uint64_t k = 1;
    Complex p = chi;
    while (k <= 16 * rep.period && std::abs(p - Complex(1)) > 1e-6L) {
      p *= chi;
      ++k;
    }
    ord = std::lcm(ord, k);
  }
  rep.order = ord;
  rep.certified = divides(mp, IntPoly::binomial(static_cast<std::size_t>(2 * ord), pow2(static_cast<unsigned>(ord))));
  if (ord == rep.period)
    rep.case_label = "N";
  else if (ord == 2 * rep.period)
    rep.case_label = "2N";
  else if (ord == 4 * rep.period)
    rep.case_label = "4N";
  else
    rep.case_label = "other";
  return rep;
}


struct EasyCoeffReport {
  TupleCollection family;
  unsigned n_lo = 1, n_hi = 1;
  bool sft_pass = false;                  // wt = 2^n - (power sum of char values) / 2 on the range
  std::vector<unsigned> sft_failures;
  bool monomial = false;
  unsigned t = 0;
  bool formula_pass_guaranteed = true;    // closed form against the oracle for n >= 2t + 1
  std::vector<unsigned> formula_small_n_agree; // n <= 2t where the formula also matches
};

inline EasyCoeffReport easy_coeff_check(const TupleCollection& c, unsigned n_lo, unsigned n_hi,
                                        const OracleOptions& opt = {})
{
  EasyCoeffReport rep;
  rep.family = c;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  auto sys = build_transfer_system(build_local_rule(c));
  auto p = newton_power_sums(char_values_from_sft(sys), n_hi);
  std::vector<BigInt> w(n_hi + 1);
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    w[n] = rs_weight_oracle(c, n, opt);
    if (2 * w[n] != 2 * pow2(n) - p[n])
      rep.sft_failures.push_back(n);
  }
  rep.sft_pass = rep.sft_failures.empty();
  if (c.size() == 1 && c.is_quadratic()) {
    rep.monomial = true;
    rep.t = c.quadratic_offsets().front();
    auto f = quad_weight_formula_seq(rep.t, n_hi);
    for (unsigned n = n_lo; n <= n_hi; ++n) {
      bool eq = f[n] == w[n];
      if (n >= 2 * rep.t + 1)
        rep.formula_pass_guaranteed = rep.formula_pass_guaranteed && eq;
      else if (eq)
        rep.formula_small_n_agree.push_back(n);
    }
  }
  return rep;
}

} // namespace rsw
