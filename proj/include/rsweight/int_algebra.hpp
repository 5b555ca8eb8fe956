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
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "factor.hpp"
#include "int_poly.hpp"
#include "roots.hpp"

namespace rsw {

/// Prime factorization by trial division, as (prime, exponent) pairs.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n)
{
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

inline int mobius(std::uint64_t n)
{
  int mu = 1;
  for (auto [p, e] : factorize_u64(n)) {
    if (e > 1)
      return 0;
    mu = -mu;
  }
  return mu;
}

inline std::uint64_t euler_phi(std::uint64_t n)
{
  std::uint64_t r = n;
  for (auto [p, e] : factorize_u64(n))
    r = r / p * (p - 1);
  return r;
}

/// Positive divisors in increasing order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> d;
  for (std::uint64_t k = 1; k * k <= n; ++k)
    if (n % k == 0) {
      d.push_back(k);
      if (k != n / k)
        d.push_back(n / k);
    }
  std::sort(d.begin(), d.end());
  return d;
}

/// d-th cyclotomic polynomial.
inline IntPoly cyclotomic(std::uint64_t d)
{
  if (d == 0)
    throw std::invalid_argument("cyclotomic: d must be positive");
  IntPoly num = IntPoly::constant(BigInt(1)), den = IntPoly::constant(BigInt(1));
  for (auto k : divisors(d)) {
    int mu = mobius(d / k);
    if (mu == 1)
      num = num * IntPoly::binomial(k, BigInt(1));
    else if (mu == -1)
      den = den * IntPoly::binomial(k, BigInt(1));
  }
  return divide_exact(num, den);
}

/// (alpha P)(x) = 2^deg(P) P(x^2 / 2)
inline IntPoly alpha_transform(const IntPoly& p)
{
  if (p.is_zero())
    throw std::invalid_argument("alpha_transform: zero polynomial");
  auto m = static_cast<unsigned>(p.degree());
  std::vector<BigInt> c(2 * m + 1, BigInt(0));
  for (unsigned i = 0; i <= m; ++i)
    c[2 * i] = p.coeff(i) * pow2(m - i);
  return IntPoly(std::move(c));
}

inline IntPoly theta(std::uint64_t d) { return alpha_transform(cyclotomic(d)); }

/// Irreducible factors of Theta_d over Q. Theta_d splits as P(x)P(-x)
/// exactly when d = 4 (mod 8); the split is found by a search over root
/// choices and verified by exact multiplication.
inline std::vector<IntPoly> theta_factors(std::uint64_t d)
{
  IntPoly th = theta(d);
  if (d % 8 != 4)
    return {th};
  auto roots = poly_roots(th);
  // group the roots into orbits {r, conj r, -r, -conj r}; keep one
  // representative with positive imaginary part and positive real part
  std::vector<Complex> reps;
  for (const auto& r : roots)
    if (r.real() > 0 && r.imag() > 0)
      reps.push_back(r);
  std::sort(reps.begin(), reps.end(), [](Complex a, Complex b) { return std::arg(a) < std::arg(b); });
  std::size_t g = reps.size();
  if (g == 0 || 4 * g != roots.size() || g > 24)
    throw error(errc::split_not_found, "theta_factors: unexpected root configuration for d=" + std::to_string(d));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (g - 1)); ++mask) {
    std::vector<Complex> poly{Complex(1)};
    for (std::size_t k = 0; k < g; ++k) {
      Complex r = ((k > 0) && ((mask >> (k - 1)) & 1U)) ? -std::conj(reps[k]) : reps[k];
      // multiply by (x - r)(x - conj r) = x^2 - 2 Re r x + |r|^2
      Complex b = -2.0L * r.real(), c0 = std::norm(r);
      std::vector<Complex> next(poly.size() + 2, Complex(0));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i] * c0;
        next[i + 1] += poly[i] * b;
        next[i + 2] += poly[i];
      }
      poly = std::move(next);
    }
    std::vector<BigInt> coeffs;
    bool near_integer = true;
    for (const auto& v : poly) {
      long double rv = std::round(v.real());
      if (std::fabs(v.real() - rv) > 1e-6L * std::max(1.0L, std::fabs(rv)))
        near_integer = false;
      coeffs.emplace_back(static_cast<long long>(rv));
    }
    if (!near_integer)
      continue;
    IntPoly p(std::move(coeffs));
    IntPoly q = p.negated_var();
    if ((p * q) == th) {
      std::vector<IntPoly> out{p, q};
      std::sort(out.begin(), out.end(), detail::poly_less);
      return out;
    }
  }
  throw error(errc::split_not_found, "theta_factors: no exact split found for d=" + std::to_string(d));
}

/// Multiset of monic irreducible integer polynomials.
class CharValueSet {
public:
  CharValueSet() = default;
  explicit CharValueSet(std::vector<PolyFactor> factors) : factors_(std::move(factors)) { normalize(); }

  const std::vector<PolyFactor>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }

  void add(const IntPoly& p, unsigned mult = 1)
  {
    factors_.push_back({p, mult});
    normalize();
  }

  IntPoly expanded() const
  {
    IntPoly r = IntPoly::constant(BigInt(1));
    for (const auto& f : factors_)
      r = r * pow(f.poly, f.multiplicity);
    return r;
  }

  std::size_t degree() const
  {
    std::size_t s = 0;
    for (const auto& f : factors_)
      s += static_cast<std::size_t>(f.poly.degree()) * f.multiplicity;
    return s;
  }

  unsigned multiplicity(const IntPoly& p) const
  {
    for (const auto& f : factors_)
      if (f.poly == p)
        return f.multiplicity;
    return 0;
  }

  /// e.g. "(x-2)(x^2-2x+2)^2"
  std::string str() const
  {
    std::string s;
    for (const auto& f : factors_) {
      s += "(" + f.poly.compact() + ")";
      if (f.multiplicity > 1)
        s += "^" + std::to_string(f.multiplicity);
    }
    return s.empty() ? "1" : s;
  }

  bool operator==(const CharValueSet&) const = default;

private:
  void normalize()
  {
    std::sort(factors_.begin(), factors_.end(),
              [](const PolyFactor& a, const PolyFactor& b) { return detail::poly_less(a.poly, b.poly); });
    std::vector<PolyFactor> merged;
    for (auto& f : factors_) {
      if (f.multiplicity == 0)
        continue;
      if (!merged.empty() && merged.back().poly == f.poly)
        merged.back().multiplicity += f.multiplicity;
      else
        merged.push_back(std::move(f));
    }
    factors_ = std::move(merged);
  }

  std::vector<PolyFactor> factors_;
};

inline CharValueSet factor_x2t_minus_2t(std::uint64_t t)
{
  if (t == 0)
    throw std::invalid_argument("factor_x2t_minus_2t: t must be positive");
  CharValueSet s;
  for (auto d : divisors(t))
    for (const auto& p : theta_factors(d))
      s.add(p);
  return s;
}

/// Power sums p_0..p_{n_max} of the roots of a monic polynomial; p_0 is the degree.
inline std::vector<BigInt> newton_power_sums(const IntPoly& f, std::size_t n_max)
{
  if (!f.is_monic())
    throw std::invalid_argument("newton_power_sums: polynomial must be monic");
  auto m = static_cast<std::size_t>(f.degree());
  // a_k = coefficient of x^(m-k)
  std::vector<BigInt> a(m + 1);
  for (std::size_t k = 0; k <= m; ++k)
    a[k] = f.coeff(m - k);
  std::vector<BigInt> p(n_max + 1, BigInt(0));
  p[0] = m;
  for (std::size_t n = 1; n <= n_max; ++n) {
    BigInt s = 0;
    std::size_t top = std::min(n - 1, m);
    for (std::size_t k = 1; k <= top; ++k)
      if (a[k] != 0)
        s += a[k] * p[n - k];
    if (n <= m)
      s += BigInt(n) * a[n];
    p[n] = -s;
  }
  return p;
}

inline std::vector<BigInt> newton_power_sums(const CharValueSet& s, std::size_t n_max)
{
  return newton_power_sums(s.expanded(), n_max);
}

/// Monic degree-m polynomial with power sums p[1..m] (p[0] ignored), exact
/// over Q. Throws NonIntegral when integral is requested and a coefficient
/// is not an integer.
inline RatPoly rat_poly_from_power_sums(const std::vector<BigRat>& p, std::size_t m)
{
  if (p.size() < m + 1)
    throw error(errc::insufficient_data, "poly_from_power_sums: need p_1..p_m");
  std::vector<BigRat> a(m + 1, BigRat(0));
  a[0] = 1;
  for (std::size_t n = 1; n <= m; ++n) {
    BigRat s = p[n];
    for (std::size_t k = 1; k < n; ++k)
      s += a[k] * p[n - k];
    a[n] = -s / BigRat(static_cast<long long>(n));
  }
  std::vector<BigRat> c(m + 1);
  for (std::size_t k = 0; k <= m; ++k)
    c[m - k] = a[k];
  return RatPoly(std::move(c));
}

inline IntPoly poly_from_power_sums(const std::vector<BigInt>& p, std::size_t m)
{
  std::vector<BigRat> q(p.begin(), p.end());
  RatPoly r = rat_poly_from_power_sums(q, m);
  for (const auto& v : r.coeffs())
    if (!is_integer(v))
      throw error(errc::non_integral, "poly_from_power_sums: non-integral elementary symmetric function");
  return to_int(r);
}

/// Minimal monic characteristic polynomial of a linear recurrence fitting the
/// sequence, by Berlekamp-Massey over Q.
inline RatPoly berlekamp_massey(const std::vector<BigRat>& s)
{
  std::vector<BigRat> c{BigRat(1)}, b{BigRat(1)};
  std::size_t len = 0, m = 1;
  BigRat bd = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    BigRat d = s[n];
    for (std::size_t i = 1; i <= len && i < c.size(); ++i)
      d += c[i] * s[n - i];
    if (d == 0) {
      ++m;
      continue;
    }
    BigRat coef = d / bd;
    std::vector<BigRat> t = c;
    if (c.size() < b.size() + m)
      c.resize(b.size() + m, BigRat(0));
    for (std::size_t i = 0; i < b.size(); ++i)
      c[i + m] -= coef * b[i];
    if (2 * len <= n) {
      len = n + 1 - len;
      b = std::move(t);
      bd = d;
      m = 1;
    } else {
      ++m;
    }
  }
  c.resize(len + 1, BigRat(0));
  std::vector<BigRat> r(len + 1);
  for (std::size_t i = 0; i <= len; ++i)
    r[len - i] = c[i];
  return RatPoly(std::move(r));
}

inline RatPoly berlekamp_massey(const std::vector<BigInt>& s)
{
  return berlekamp_massey(std::vector<BigRat>(s.begin(), s.end()));
}

/// True when the recurrence with characteristic polynomial c holds on every
/// full window of s.
inline bool annihilates(const RatPoly& c, const std::vector<BigRat>& s)
{
  if (c.is_zero())
    return false;
  auto l = static_cast<std::size_t>(c.degree());
  for (std::size_t n = l; n < s.size(); ++n) {
    BigRat acc = 0;
    for (std::size_t k = 0; k <= l; ++k)
      acc += c.coeff(k) * s[n - l + k];
    if (acc != 0)
      return false;
  }
  return true;
}

inline bool annihilates(const RatPoly& c, const std::vector<BigInt>& s)
{
  return annihilates(c, std::vector<BigRat>(s.begin(), s.end()));
}

/// Factorization of a monic integer polynomial into x^k times a set of
/// nonzero-root irreducible factors. Trial division by x - 2 and the Theta
/// family, then exact factorization of what remains.
struct CharFactorization {
  unsigned zero_multiplicity = 0;
  CharValueSet nonzero;
};

inline CharFactorization factor_char_poly(const IntPoly& f, std::uint64_t theta_d_max = 64)
{
  if (f.is_zero())
    throw std::invalid_argument("factor_char_poly: zero polynomial");
  CharFactorization out;
  out.zero_multiplicity = static_cast<unsigned>(f.x_valuation());
  IntPoly rest = divide_exact(f, IntPoly::monomial(out.zero_multiplicity, BigInt(1)));
  auto strip = [&](const IntPoly& q) {
    unsigned k = 0;
    for (;;) {
      if (rest.degree() < q.degree())
        break;
      auto [ok, quo] = try_divide_exact(rest, q);
      if (!ok)
        break;
      rest = std::move(quo);
      ++k;
    }
    if (k)
      out.nonzero.add(q, k);
  };
  strip(IntPoly{BigInt(-2), BigInt(1)});
  for (std::uint64_t d = 1; d <= theta_d_max && rest.degree() > 0; ++d) {
    if (euler_phi(d) > static_cast<std::uint64_t>(rest.degree()))
      continue;
    for (const auto& q : theta_factors(d))
      strip(q);
  }
  if (rest.degree() > 0)
    for (auto& pf : factor_over_Z(rest))
      out.nonzero.add(pf.poly, pf.multiplicity);
  return out;
}

} // namespace rsw
