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

// Slow, direct reference computations used to cross-check the library.

#include <complex>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rsweight/tuples.hpp"

namespace oracle {

using Bits = std::vector<int>;
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// f(x) = sum_i sum_tuples prod_j x[(i + a_j) mod n] over GF(2), evaluated term by term.
inline int rs_value(const rsw::TupleCollection& c, unsigned n, std::uint64_t x)
{
  int v = 0;
  for (unsigned i = 0; i < n; ++i)
    for (const auto& t : c.tuples()) {
      int p = 1;
      for (unsigned a : t)
        p &= static_cast<int>((x >> ((i + a) % n)) & 1U);
      v ^= p;
    }
  return v;
}

inline std::uint64_t rs_weight(const rsw::TupleCollection& c, unsigned n)
{
  std::uint64_t w = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
    w += static_cast<std::uint64_t>(rs_value(c, n, x));
  return w;
}

/// Polynomials over GF(2) as coefficient vectors, index = power.
inline Bits trim(Bits a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
  return a;
}

inline Bits poly_mod(Bits a, const Bits& m)
{
  a = trim(a);
  while (a.size() >= m.size()) {
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] ^= m[i];
    a = trim(a);
  }
  return a;
}

inline Bits poly_mul(const Bits& a, const Bits& b)
{
  if (a.empty() || b.empty())
    return {};
  Bits r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] ^= b[j];
  return trim(r);
}

inline Bits from_word(std::uint64_t w)
{
  Bits b;
  for (; w; w >>= 1)
    b.push_back(static_cast<int>(w & 1U));
  return b;
}

inline std::uint64_t to_word(const Bits& b)
{
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i])
      w |= std::uint64_t{1} << i;
  return w;
}

/// Irreducible by trial division by every polynomial of degree 1..deg/2.
inline bool irreducible_by_trial(std::uint64_t p)
{
  Bits pb = from_word(p);
  int deg = static_cast<int>(pb.size()) - 1;
  if (deg < 1)
    return false;
  for (int d = 1; 2 * d <= deg; ++d)
    for (std::uint64_t q = std::uint64_t{1} << d; q < (std::uint64_t{2} << d); ++q)
      if (poly_mod(pb, from_word(q)).empty())
        return false;
  return true;
}

inline std::uint64_t least_irreducible(unsigned n)
{
  for (std::uint64_t p = std::uint64_t{1} << n;; ++p)
    if (irreducible_by_trial(p))
      return p;
}

/// GF(2^n) by schoolbook multiplication and long division.
struct Field {
  unsigned n;
  Bits m;

  explicit Field(unsigned deg) : n(deg), m(from_word(least_irreducible(deg))) {}

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const
  {
    return to_word(poly_mod(poly_mul(from_word(a), from_word(b)), m));
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const
  {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i)
      r = mul(r, a);
    return r;
  }

  std::uint64_t trace(std::uint64_t a) const
  {
    std::uint64_t s = 0, p = a;
    for (unsigned i = 0; i < n; ++i) {
      s ^= p;
      p = mul(p, p);
    }
    return s;
  }

  std::uint64_t pf(const rsw::TupleCollection& c, std::uint64_t x) const
  {
    std::uint64_t s = 0;
    for (const auto& t : c.tuples()) {
      std::uint64_t e = 0;
      for (unsigned a : t)
        e += std::uint64_t{1} << a;
      s ^= pow(x, e);
    }
    return s;
  }
};

inline std::uint64_t trace_weight(const rsw::TupleCollection& c, unsigned n)
{
  Field f(n);
  std::uint64_t w = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
    w += f.trace(f.pf(c, x)) == 1 ? 1U : 0U;
  return w;
}

inline std::uint64_t curve_points(const rsw::TupleCollection& c, unsigned n)
{
  Field f(n);
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    std::uint64_t v = f.pf(c, x);
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y)
      if ((f.mul(y, y) ^ y) == v)
        ++count;
  }
  return count;
}

using Matrix = std::vector<std::vector<Int>>;

inline Matrix mat_mul(const Matrix& a, const Matrix& b)
{
  std::size_t n = a.size();
  Matrix c(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j)
          c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Int mat_trace(const Matrix& a)
{
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i][i];
  return s;
}

/// Closed walks in the word graph of allowed L-windows: vertices are all
/// (L-1)-windows of (x, y) letters, with the window rule evaluated from scratch.
inline Matrix word_graph(const rsw::TupleCollection& c)
{
  unsigned L = c.max_offset() + 1;
  unsigned k = L - 1;
  std::size_t nv = std::size_t{1} << (2 * k);
  Matrix a(nv, std::vector<Int>(nv, 0));
  for (std::size_t u = 0; u < nv; ++u)
    for (unsigned last = 0; last < 4; ++last) {
      std::uint64_t w = u | (std::uint64_t{last} << (2 * k));
      auto x = [&](unsigned p) { return static_cast<int>((w >> (2 * p)) & 1U); };
      auto y = [&](unsigned p) { return static_cast<int>((w >> (2 * p + 1)) & 1U); };
      int s = y(0) ^ y(1);
      for (const auto& t : c.tuples()) {
        int p = 1;
        for (unsigned a : t)
          p &= x(a);
        s ^= p;
      }
      if (s == 0)
        a[u][w >> 2] += 1;
    }
  return a;
}

/// det(xI - A) by Faddeev-LeVerrier in exact rationals; coefficients low to high.
inline std::vector<Int> char_poly(const Matrix& a)
{
  std::size_t n = a.size();
  std::vector<Rat> c(n + 1, 0);
  c[n] = 1;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, 0)), am(n, std::vector<Rat>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      m[i][i] += c[n - k + 1];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rat s = 0;
        for (std::size_t l = 0; l < n; ++l)
          s += Rat(a[i][l]) * m[l][j];
        am[i][j] = s;
      }
    Rat tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      tr += am[i][i];
    c[n - k] = -tr / Rat(static_cast<long long>(k));
    m = am;
  }
  std::vector<Int> out;
  for (auto& v : c)
    out.push_back(boost::multiprecision::numerator(v));
  return out;
}

/// Complex value of an integer polynomial (coefficients low to high).
template <class P>
std::complex<long double> eval(const P& p, std::complex<long double> z)
{
  std::complex<long double> s = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    s = s * z + static_cast<long double>(*it);
  return s;
}

} // namespace oracle
