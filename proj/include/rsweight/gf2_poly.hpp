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
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "tuples.hpp"

namespace rsw {

/// Polynomial over GF(2), bit i of the packed words is the coefficient of x^i.
///
/// The word vector never carries trailing zero words, so the zero polynomial
/// is the empty vector and equality is plain vector equality.
class Gf2Poly {
public:
  Gf2Poly() = default;

  static Gf2Poly from_bits(std::uint64_t bits)
  {
    Gf2Poly p;
    if (bits)
      p.w_.push_back(bits);
    return p;
  }

  static Gf2Poly monomial(std::size_t k)
  {
    Gf2Poly p;
    p.flip(k);
    return p;
  }

  static Gf2Poly one() { return from_bits(1); }

  /// x^n + 1
  static Gf2Poly x_pow_plus_one(std::size_t n)
  {
    auto p = monomial(n);
    p.flip(0);
    return p;
  }

  /// Hex string of the coefficient bits, constant term in the least significant bit.
  static Gf2Poly from_hex(std::string_view hex)
  {
    Gf2Poly p;
    std::size_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
      char c = *it;
      unsigned v;
      if (c >= '0' && c <= '9')
        v = static_cast<unsigned>(c - '0');
      else if (c >= 'a' && c <= 'f')
        v = static_cast<unsigned>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F')
        v = static_cast<unsigned>(c - 'A' + 10);
      else
        throw error(errc::parse_error, "bad hex digit in \"" + std::string(hex) + "\"");
      for (unsigned j = 0; j < 4; ++j)
        if ((v >> j) & 1U)
          p.flip(bit + j);
    }
    return p;
  }

  std::string to_hex() const
  {
    if (is_zero())
      return "0";
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    long d = degree();
    for (long nib = d / 4; nib >= 0; --nib) {
      unsigned v = 0;
      for (unsigned j = 0; j < 4; ++j)
        v |= static_cast<unsigned>(coeff(static_cast<std::size_t>(nib) * 4 + j)) << j;
      s += digits[v];
    }
    return s;
  }

  bool is_zero() const noexcept { return w_.empty(); }
  bool is_one() const noexcept { return w_.size() == 1 && w_[0] == 1; }

  /// Degree, -1 for the zero polynomial.
  long degree() const noexcept
  {
    if (w_.empty())
      return -1;
    return static_cast<long>(64 * (w_.size() - 1) + 63 - std::countl_zero(w_.back()));
  }

  bool coeff(std::size_t i) const noexcept
  {
    std::size_t k = i / 64;
    return k < w_.size() && ((w_[k] >> (i % 64)) & 1U);
  }

  void flip(std::size_t i)
  {
    std::size_t k = i / 64;
    if (k >= w_.size())
      w_.resize(k + 1, 0);
    w_[k] ^= std::uint64_t{1} << (i % 64);
    trim();
  }

  const std::vector<std::uint64_t>& words() const noexcept { return w_; }

  /// Low 64 coefficient bits (the full polynomial when degree < 64).
  std::uint64_t low_bits() const noexcept { return w_.empty() ? 0 : w_[0]; }

  Gf2Poly& operator+=(const Gf2Poly& o)
  {
    if (o.w_.size() > w_.size())
      w_.resize(o.w_.size(), 0);
    for (std::size_t i = 0; i < o.w_.size(); ++i)
      w_[i] ^= o.w_[i];
    trim();
    return *this;
  }

  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }

  Gf2Poly shifted(std::size_t k) const
  {
    if (is_zero())
      return {};
    Gf2Poly r;
    std::size_t ws = k / 64, bs = k % 64;
    r.w_.assign(w_.size() + ws + 1, 0);
    for (std::size_t i = 0; i < w_.size(); ++i) {
      r.w_[i + ws] ^= w_[i] << bs;
      if (bs)
        r.w_[i + ws + 1] ^= w_[i] >> (64 - bs);
    }
    r.trim();
    return r;
  }

  /// Divides out x^k; requires the low k coefficients to vanish.
  Gf2Poly unshifted(std::size_t k) const
  {
    Gf2Poly r;
    long d = degree();
    for (long i = static_cast<long>(k); i <= d; ++i)
      if (coeff(static_cast<std::size_t>(i)))
        r.flip(static_cast<std::size_t>(i) - k);
    return r;
  }

  /// Number of trailing zero coefficients (0 for the zero polynomial).
  std::size_t trailing_zeros() const noexcept
  {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i])
        return 64 * i + static_cast<std::size_t>(std::countr_zero(w_[i]));
    return 0;
  }

  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b)
  {
    Gf2Poly r;
    if (a.is_zero() || b.is_zero())
      return r;
    r.w_.assign(a.w_.size() + b.w_.size(), 0);
    for (std::size_t i = 0; i < a.w_.size(); ++i) {
      std::uint64_t ai = a.w_[i];
      while (ai) {
        unsigned bit = static_cast<unsigned>(std::countr_zero(ai));
        ai &= ai - 1;
        for (std::size_t j = 0; j < b.w_.size(); ++j) {
          r.w_[i + j] ^= b.w_[j] << bit;
          if (bit)
            r.w_[i + j + 1] ^= b.w_[j] >> (64 - bit);
        }
      }
    }
    r.trim();
    return r;
  }

  /// Quotient and remainder; the divisor must be nonzero.
  static std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& a, const Gf2Poly& b)
  {
    if (b.is_zero())
      throw std::domain_error("Gf2Poly division by zero");
    Gf2Poly q, r = a;
    long db = b.degree();
    for (long dr = r.degree(); dr >= db; dr = r.degree()) {
      auto k = static_cast<std::size_t>(dr - db);
      q.flip(k);
      r += b.shifted(k);
    }
    return {std::move(q), std::move(r)};
  }

  friend Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& b) { return divmod(a, b).second; }
  friend Gf2Poly operator/(const Gf2Poly& a, const Gf2Poly& b) { return divmod(a, b).first; }

  bool divides(const Gf2Poly& a) const { return (a % *this).is_zero(); }

  bool operator==(const Gf2Poly&) const = default;

  /// Order by the coefficient bit-string read as a binary integer.
  std::strong_ordering operator<=>(const Gf2Poly& o) const
  {
    if (w_.size() != o.w_.size())
      return w_.size() <=> o.w_.size();
    for (std::size_t i = w_.size(); i-- > 0;)
      if (w_[i] != o.w_[i])
        return w_[i] <=> o.w_[i];
    return std::strong_ordering::equal;
  }

  std::string str() const
  {
    if (is_zero())
      return "0";
    std::string s;
    for (long i = degree(); i >= 0; --i) {
      if (!coeff(static_cast<std::size_t>(i)))
        continue;
      if (!s.empty())
        s += " + ";
      if (i == 0)
        s += "1";
      else if (i == 1)
        s += "x";
      else
        s += "x^" + std::to_string(i);
    }
    return s;
  }

private:
  void trim()
  {
    while (!w_.empty() && w_.back() == 0)
      w_.pop_back();
  }

  std::vector<std::uint64_t> w_;
};

/// Monic gcd; gcd(p, 0) = p and gcd(0, 0) = 0.
inline Gf2Poly gf2_gcd(Gf2Poly a, Gf2Poly b)
{
  while (!b.is_zero()) {
    a = a % b;
    std::swap(a, b);
  }
  return a;
}

/// Element of GF(2)[x^{+-1}]: x^shift * body, with body(0) = 1 unless zero.
struct Gf2Laurent {
  Gf2Poly body;
  long shift = 0;

  static Gf2Laurent normalized(Gf2Poly p, long shift)
  {
    if (p.is_zero())
      return {};
    auto tz = p.trailing_zeros();
    return {p.unshifted(tz), shift + static_cast<long>(tz)};
  }

  bool is_zero() const { return body.is_zero(); }
};

inline Gf2Poly mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m) { return (a * b) % m; }

/// x^(2^k) mod m by k squarings.
inline Gf2Poly x_pow_two_pow(std::size_t k, const Gf2Poly& m)
{
  auto r = Gf2Poly::monomial(1) % m;
  for (std::size_t i = 0; i < k; ++i)
    r = mulmod(r, r, m);
  return r;
}

/// A_n(x) = sum over (0,t) of x^(t mod n) + x^((n - t) mod n).
inline Gf2Poly a_n_poly(const TupleCollection& c, unsigned n)
{
  if (n == 0)
    throw std::invalid_argument("a_n_poly: n must be positive");
  Gf2Poly a;
  for (unsigned t : c.quadratic_offsets()) {
    unsigned e1 = t % n;
    unsigned e2 = (n - e1) % n;
    a.flip(e1);
    a.flip(e2);
  }
  return a;
}

/// v(n) = deg gcd(x^n - 1, A_n(x)); equals n when A_n vanishes.
inline unsigned plateau_v(const TupleCollection& c, unsigned n)
{
  auto a = a_n_poly(c, n);
  auto g = gf2_gcd(Gf2Poly::x_pow_plus_one(n), a);
  return static_cast<unsigned>(g.degree());
}

/// A(x) = sum over (0,t) of x^t + x^{-t} in GF(2)[x^{+-1}].
inline Gf2Laurent laurent_a(const TupleCollection& c)
{
  auto ts = c.quadratic_offsets();
  unsigned m = 0;
  for (unsigned t : ts)
    m = std::max(m, t);
  Gf2Poly p;
  for (unsigned t : ts) {
    p.flip(m + t);
    p.flip(m - t);
  }
  return Gf2Laurent::normalized(std::move(p), -static_cast<long>(m));
}

/// Least n >= 1 with A(x) dividing x^n - 1 in the Laurent ring.
inline unsigned period_N(const TupleCollection& c)
{
  auto a = laurent_a(c);
  if (a.is_zero())
    throw error(errc::zero_a, "A(x) vanishes for " + c.str());
  if (!a.body.coeff(0))
    throw error(errc::no_period, "normalized body has zero constant term");
  // The class of x has finite multiplicative order modulo the body; bound the scan generously.
  unsigned limit = 1U << std::min<long>(24, a.body.degree() + 2);
  auto r = Gf2Poly::one();
  auto xm = Gf2Poly::monomial(1) % a.body;
  for (unsigned n = 1; n <= limit; ++n) {
    r = mulmod(r, xm, a.body);
    if (r == Gf2Poly::one() % a.body)
      return n;
  }
  throw error(errc::no_period, "no period found below " + std::to_string(limit));
}

inline std::vector<unsigned> prime_divisors(unsigned n)
{
  std::vector<unsigned> ps;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    ps.push_back(n);
  return ps;
}

/// Rabin's irreducibility test.
inline bool is_irreducible_rabin(const Gf2Poly& p)
{
  long d = p.degree();
  if (d < 1)
    return false;
  auto n = static_cast<std::size_t>(d);
  auto x = Gf2Poly::monomial(1) % p;
  if (!(x_pow_two_pow(n, p) + x).is_zero())
    return false;
  for (unsigned q : prime_divisors(static_cast<unsigned>(n))) {
    auto h = x_pow_two_pow(n / q, p) + x;
    if (!gf2_gcd(p, h).is_one())
      return false;
  }
  return true;
}

/// Least irreducible polynomial of degree n in bit-string order.
inline Gf2Poly min_irreducible(unsigned n)
{
  if (n == 0)
    throw std::invalid_argument("min_irreducible: degree must be positive");
  auto p = Gf2Poly::monomial(n);
  for (;;) {
    if (is_irreducible_rabin(p))
      return p;
    // next polynomial in integer order below x^(n+1)
    std::size_t i = 0;
    while (p.coeff(i)) {
      p.flip(i);
      ++i;
    }
    p.flip(i);
  }
}

} // namespace rsw
