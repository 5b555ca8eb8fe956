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

// Exact factorization of integer polynomials: Yun square-free decomposition
// over Q, Berlekamp factorization modulo a small prime, multifactor Hensel
// lifting and Zassenhaus recombination by trial division.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "int_poly.hpp"

namespace rsw {

struct PolyFactor {
  IntPoly poly;
  unsigned multiplicity = 1;

  bool operator==(const PolyFactor&) const = default;
};

namespace detail {

using ModPoly = std::vector<std::uint64_t>;

class ModP {
public:
  explicit ModP(std::uint64_t p) : p_(p) {}

  std::uint64_t p() const { return p_; }

  static void trim(ModPoly& a)
  {
    while (!a.empty() && a.back() == 0)
      a.pop_back();
  }

  std::uint64_t reduce(const BigInt& v) const
  {
    BigInt r = v % p_;
    if (r < 0)
      r += p_;
    return static_cast<std::uint64_t>(r);
  }

  ModPoly from_int(const IntPoly& f) const
  {
    ModPoly r;
    for (const auto& c : f.coeffs())
      r.push_back(reduce(c));
    trim(r);
    return r;
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const
  {
    std::uint64_t r = 1;
    a %= p_;
    while (e) {
      if (e & 1U)
        r = r * a % p_;
      a = a * a % p_;
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }

  ModPoly sub(ModPoly a, const ModPoly& b) const
  {
    if (b.size() > a.size())
      a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i] = (a[i] + p_ - b[i]) % p_;
    trim(a);
    return a;
  }

  ModPoly add(ModPoly a, const ModPoly& b) const
  {
    if (b.size() > a.size())
      a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i] = (a[i] + b[i]) % p_;
    trim(a);
    return a;
  }

  ModPoly mul(const ModPoly& a, const ModPoly& b) const
  {
    if (a.empty() || b.empty())
      return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i])
        continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
    }
    trim(r);
    return r;
  }

  ModPoly scale(ModPoly a, std::uint64_t s) const
  {
    for (auto& v : a)
      v = v * s % p_;
    trim(a);
    return a;
  }

  std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) const
  {
    ModPoly r = a;
    if (r.size() < b.size())
      return {{}, r};
    ModPoly q(r.size() - b.size() + 1, 0);
    std::uint64_t li = inv(b.back());
    for (std::size_t k = q.size(); k-- > 0;) {
      std::uint64_t f = r[k + b.size() - 1] * li % p_;
      q[k] = f;
      if (!f)
        continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        r[k + j] = (r[k + j] + p_ - f * b[j] % p_) % p_;
    }
    trim(q);
    trim(r);
    return {q, r};
  }

  ModPoly mod(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }

  ModPoly monic(ModPoly a) const
  {
    if (a.empty())
      return a;
    return scale(std::move(a), inv(a.back()));
  }

  ModPoly gcd(ModPoly a, ModPoly b) const
  {
    while (!b.empty()) {
      auto r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(std::move(a));
  }

  ModPoly deriv(const ModPoly& a) const
  {
    if (a.size() <= 1)
      return {};
    ModPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
      r[i - 1] = a[i] * (i % p_) % p_;
    trim(r);
    return r;
  }

  /// x^e mod m
  ModPoly pow_x(std::uint64_t e, const ModPoly& m) const
  {
    ModPoly r{1}, b{0, 1};
    b = mod(b, m);
    r = mod(r, m);
    while (e) {
      if (e & 1U)
        r = mod(mul(r, b), m);
      b = mod(mul(b, b), m);
      e >>= 1;
    }
    return r;
  }

  /// s, t with s*a + t*b = 1, deg s < deg b, deg t < deg a (a, b coprime).
  std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b) const
  {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      auto s2 = sub(s0, mul(q, s1));
      auto t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    // r0 is a nonzero constant
    std::uint64_t c = inv(r0.at(0));
    return {scale(s0, c), scale(t0, c)};
  }

private:
  std::uint64_t p_;
};

/// Kernel basis of (Q - I) for the Berlekamp matrix of a monic square-free f.
inline std::vector<ModPoly> berlekamp_kernel(const ModP& F, const ModPoly& f)
{
  std::size_t n = f.size() - 1;
  std::uint64_t p = F.p();
  // rows[i] = x^(i p) mod f
  std::vector<ModPoly> rows(n);
  ModPoly xp = F.pow_x(p, f);
  rows[0] = ModPoly{1};
  for (std::size_t i = 1; i < n; ++i)
    rows[i] = F.mod(F.mul(rows[i - 1], xp), f);
  // M[j][i] = rows[i][j] - delta_ij, solve M h = 0
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m[j][i] = rows[i][j];
    m[i][i] = (m[i][i] + p - 1) % p;
  }
  std::vector<long> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && m[piv][c] == 0)
      ++piv;
    if (piv == n)
      continue;
    std::swap(m[piv], m[r]);
    std::uint64_t iv = F.inv(m[r][c]);
    for (auto& v : m[r])
      v = v * iv % p;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == r || m[k][c] == 0)
        continue;
      std::uint64_t f2 = m[k][c];
      for (std::size_t j = 0; j < n; ++j)
        m[k][j] = (m[k][j] + p - f2 * m[r][j] % p) % p;
    }
    pivot_col_of_row.push_back(static_cast<long>(c));
    is_pivot[c] = true;
    ++r;
  }
  std::vector<ModPoly> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    ModPoly v(n, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_col_of_row.size(); ++k)
      v[static_cast<std::size_t>(pivot_col_of_row[k])] = (p - m[k][free]) % p;
    ModP::trim(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Monic irreducible factors of a monic square-free f modulo p.
inline std::vector<ModPoly> berlekamp_factor(const ModP& F, const ModPoly& f)
{
  auto basis = berlekamp_kernel(F, f);
  std::size_t r = basis.size();
  std::vector<ModPoly> facs{f};
  for (const auto& v : basis) {
    if (facs.size() == r)
      break;
    if (v.size() <= 1)
      continue;
    for (std::uint64_t c = 0; c < F.p() && facs.size() < r; ++c) {
      auto vs = F.sub(v, ModPoly{c});
      std::vector<ModPoly> refined;
      for (const auto& w : facs) {
        auto g = w.size() > 2 ? F.gcd(w, vs) : ModPoly{1};
        if (g.size() > 1 && g.size() < w.size()) {
          refined.push_back(g);
          refined.push_back(F.monic(F.divmod(w, g).first));
        } else {
          refined.push_back(w);
        }
      }
      facs = std::move(refined);
    }
  }
  return facs;
}

// --- polynomials with BigInt coefficients reduced modulo m ---

using BigModPoly = std::vector<BigInt>;

inline void bm_trim(BigModPoly& a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

inline BigInt bm_reduce(const BigInt& v, const BigInt& m)
{
  BigInt r = v % m;
  if (r < 0)
    r += m;
  return r;
}

inline BigModPoly bm_mod(BigModPoly a, const BigInt& m)
{
  for (auto& v : a)
    v = bm_reduce(v, m);
  bm_trim(a);
  return a;
}

inline BigModPoly bm_from(const ModPoly& a)
{
  BigModPoly r;
  for (auto v : a)
    r.emplace_back(v);
  bm_trim(r);
  return r;
}

inline BigModPoly bm_add(BigModPoly a, const BigModPoly& b, const BigInt& m)
{
  if (b.size() > a.size())
    a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] += b[i];
  return bm_mod(std::move(a), m);
}

inline BigModPoly bm_sub(BigModPoly a, const BigModPoly& b, const BigInt& m)
{
  if (b.size() > a.size())
    a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] -= b[i];
  return bm_mod(std::move(a), m);
}

inline BigModPoly bm_mul(const BigModPoly& a, const BigModPoly& b, const BigInt& m)
{
  if (a.empty() || b.empty())
    return {};
  BigModPoly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  }
  return bm_mod(std::move(r), m);
}

/// Division by a monic b modulo m.
inline std::pair<BigModPoly, BigModPoly> bm_divmod(const BigModPoly& a, const BigModPoly& b, const BigInt& m)
{
  BigModPoly r = a;
  if (r.size() < b.size())
    return {{}, r};
  BigModPoly q(r.size() - b.size() + 1, BigInt(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt f = bm_reduce(r[k + b.size() - 1], m);
    q[k] = f;
    if (f == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[k + j] = bm_reduce(r[k + j] - f * b[j], m);
  }
  return {bm_mod(std::move(q), m), bm_mod(std::move(r), m)};
}

/// One quadratic Hensel step from modulus m to m*m (g, h monic).
inline void hensel_step(const BigModPoly& f, BigModPoly& g, BigModPoly& h, BigModPoly& s, BigModPoly& t,
                        const BigInt& m2)
{
  auto e = bm_sub(f, bm_mul(g, h, m2), m2);
  auto [q, r] = bm_divmod(bm_mul(s, e, m2), h, m2);
  auto g2 = bm_add(bm_add(g, bm_mul(t, e, m2), m2), bm_mul(q, g, m2), m2);
  auto h2 = bm_add(h, r, m2);
  auto b = bm_sub(bm_add(bm_mul(s, g2, m2), bm_mul(t, h2, m2), m2), BigModPoly{BigInt(1)}, m2);
  auto [c, d] = bm_divmod(bm_mul(s, b, m2), h2, m2);
  auto s2 = bm_sub(s, d, m2);
  auto t2 = bm_sub(bm_sub(t, bm_mul(t, b, m2), m2), bm_mul(c, g2, m2), m2);
  g = std::move(g2);
  h = std::move(h2);
  s = std::move(s2);
  t = std::move(t2);
}

/// Lifts the factorization f = prod(facs) mod p of a monic f to modulus big_m = p^(2^k).
inline std::vector<BigModPoly> hensel_lift(const ModP& F, const BigModPoly& f, const std::vector<ModPoly>& facs,
                                           const BigInt& big_m)
{
  if (facs.size() == 1)
    return {bm_mod(f, big_m)};
  std::size_t half = facs.size() / 2;
  std::vector<ModPoly> left(facs.begin(), facs.begin() + static_cast<long>(half));
  std::vector<ModPoly> right(facs.begin() + static_cast<long>(half), facs.end());
  ModPoly gl{1}, hr{1};
  for (const auto& u : left)
    gl = F.mul(gl, u);
  for (const auto& u : right)
    hr = F.mul(hr, u);
  auto [s0, t0] = F.bezout(gl, hr);
  BigModPoly g = bm_from(gl), h = bm_from(hr), s = bm_from(s0), t = bm_from(t0);
  BigInt m = F.p();
  while (m < big_m) {
    BigInt m2 = m * m;
    hensel_step(f, g, h, s, t, m2);
    m = m2;
  }
  auto a = hensel_lift(F, bm_mod(g, big_m), left, big_m);
  auto b = hensel_lift(F, bm_mod(h, big_m), right, big_m);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline IntPoly symmetric(const BigModPoly& a, const BigInt& m)
{
  BigInt half = m / 2;
  std::vector<BigInt> c;
  for (const auto& v : a) {
    BigInt r = bm_reduce(v, m);
    if (r > half)
      r -= m;
    c.push_back(r);
  }
  return IntPoly(std::move(c));
}

inline bool poly_less(const IntPoly& a, const IntPoly& b)
{
  if (a.degree() != b.degree())
    return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    if (a.coeffs()[i] != b.coeffs()[i])
      return a.coeffs()[i] < b.coeffs()[i];
  return false;
}

inline std::vector<std::uint64_t> small_primes(std::size_t count)
{
  std::vector<std::uint64_t> ps;
  for (std::uint64_t c = 3; ps.size() < count; c += 2) {
    bool prime = true;
    for (std::uint64_t q = 3; q * q <= c; q += 2)
      if (c % q == 0) {
        prime = false;
        break;
      }
    if (prime)
      ps.push_back(c);
  }
  return ps;
}

} // namespace detail

/// Integer multiple of a rational polynomial with all denominators cleared.
inline IntPoly clear_denominators(const RatPoly& a)
{
  BigInt den = 1;
  for (const auto& v : a.coeffs()) {
    BigInt dv = boost::multiprecision::denominator(v);
    den = den / boost::multiprecision::gcd(den, dv) * dv;
  }
  std::vector<BigInt> cc;
  for (const auto& v : a.coeffs())
    cc.push_back(numerator_of(BigRat(v * den)));
  return IntPoly(std::move(cc));
}

/// Yun's square-free decomposition of a primitive integer polynomial.
/// Returns primitive square-free parts with their multiplicities (parts are
/// pairwise coprime, product of part^mult equals f up to sign and content).
inline std::vector<PolyFactor> squarefree_decomposition(const IntPoly& f)
{
  std::vector<PolyFactor> out;
  if (f.degree() < 1)
    return out;
  RatPoly fr = to_rat(primitive_part(f));
  RatPoly df = fr.derivative();
  RatPoly a0 = gcd(fr, df);
  RatPoly b = divmod(fr, a0).first;
  RatPoly c = divmod(df, a0).first;
  RatPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    RatPoly a = gcd(b, d);
    if (a.degree() > 0)
      out.push_back({primitive_part(clear_denominators(a)), i});
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

/// Irreducible factors of a primitive square-free integer polynomial.
inline std::vector<IntPoly> factor_squarefree(const IntPoly& f)
{
  using namespace detail;
  std::vector<IntPoly> out;
  IntPoly g = primitive_part(f);
  if (g.degree() < 1)
    return out;
  if (g.coeff(0) == 0) {
    out.push_back(IntPoly{BigInt(0), BigInt(1)});
    g = primitive_part(divide_exact(g, IntPoly{BigInt(0), BigInt(1)}));
    if (g.degree() < 1)
      return out;
  }
  if (g.degree() == 1) {
    out.push_back(g);
    return out;
  }

  // Pick the prime with the fewest modular factors among a handful of good ones.
  std::uint64_t best_p = 0;
  std::size_t best_r = 0;
  int good = 0;
  for (std::uint64_t p : small_primes(60)) {
    ModP F(p);
    if (F.reduce(g.lead()) == 0)
      continue;
    auto gp = F.monic(F.from_int(g));
    if (F.gcd(gp, F.deriv(gp)).size() != 1)
      continue;
    std::size_t r = berlekamp_kernel(F, gp).size();
    if (best_p == 0 || r < best_r) {
      best_p = p;
      best_r = r;
    }
    if (++good == 6 || r == 1)
      break;
  }
  if (best_p == 0)
    throw std::runtime_error("factor_squarefree: no suitable prime found");
  if (best_r == 1) {
    out.push_back(g);
    return out;
  }

  ModP F(best_p);
  auto gp = F.monic(F.from_int(g));
  auto modfacs = berlekamp_factor(F, gp);

  // Coefficient bound for any factor, scaled by the leading coefficient.
  BigInt maxabs = 0;
  for (const auto& v : g.coeffs())
    maxabs = std::max(maxabs, BigInt(boost::multiprecision::abs(v)));
  BigInt lc = g.lead();
  BigInt bound = (boost::multiprecision::sqrt(BigInt(g.degree() + 1)) + 1) * pow2(static_cast<unsigned>(g.degree())) *
                 maxabs * boost::multiprecision::abs(lc);
  BigInt big_m = best_p;
  while (big_m <= 2 * bound)
    big_m = big_m * big_m;

  // monic version of g modulo big_m
  BigInt lc_inv;
  {
    // inverse of lc modulo big_m by extended Euclid
    BigInt a = bm_reduce(lc, big_m), b = big_m, x0 = 1, x1 = 0;
    while (b != 0) {
      BigInt q = a / b;
      BigInt tmp = a - q * b;
      a = b;
      b = tmp;
      tmp = x0 - q * x1;
      x0 = x1;
      x1 = tmp;
    }
    lc_inv = bm_reduce(x0, big_m);
  }
  BigModPoly gm;
  for (const auto& v : g.coeffs())
    gm.push_back(bm_reduce(v * lc_inv, big_m));
  bm_trim(gm);
  auto lifted = hensel_lift(F, gm, modfacs, big_m);

  // Zassenhaus recombination by trial division.
  std::vector<BigModPoly> rest = lifted;
  IntPoly cur = g;
  std::size_t s = 1;
  while (2 * s <= rest.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i)
      idx[i] = i;
    for (;;) {
      BigModPoly prod{bm_reduce(cur.lead(), big_m)};
      for (auto i : idx)
        prod = bm_mul(prod, rest[i], big_m);
      IntPoly cand = primitive_part(symmetric(prod, big_m));
      auto [ok, quo] = try_divide_exact(cur, cand);
      if (ok && cand.degree() >= 1) {
        out.push_back(cand);
        cur = primitive_part(quo);
        std::vector<BigModPoly> keep;
        for (std::size_t i = 0; i < rest.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end())
            keep.push_back(rest[i]);
        rest = std::move(keep);
        found = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == rest.size() - s + k - 1)
        --k;
      if (k == 0)
        break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j)
        idx[j] = idx[j - 1] + 1;
    }
    if (!found)
      ++s;
  }
  if (cur.degree() >= 1)
    out.push_back(cur);
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

/// Complete factorization over Z (content and sign dropped), sorted by
/// degree then coefficients.
inline std::vector<PolyFactor> factor_over_Z(const IntPoly& f)
{
  std::vector<PolyFactor> out;
  for (const auto& part : squarefree_decomposition(f))
    for (auto& q : factor_squarefree(part.poly))
      out.push_back({std::move(q), part.multiplicity});
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.poly == b.poly)
      return a.multiplicity < b.multiplicity;
    return detail::poly_less(a.poly, b.poly);
  });
  return out;
}

} // namespace rsw
