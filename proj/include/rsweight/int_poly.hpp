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
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"

namespace rsw {

/// Dense univariate polynomial, coeffs()[i] is the coefficient of x^i.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
template <class T>
class Poly {
public:
  Poly() = default;
  Poly(std::initializer_list<T> c) : c_(c) { trim(); }
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }

  static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }

  static Poly monomial(std::size_t k, T v = T(1))
  {
    std::vector<T> c(k + 1, T(0));
    c[k] = std::move(v);
    return Poly(std::move(c));
  }

  /// x^k - v
  static Poly binomial(std::size_t k, T v)
  {
    std::vector<T> c(k + 1, T(0));
    c[k] = 1;
    c[0] -= v;
    return Poly(std::move(c));
  }

  const std::vector<T>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const T& lead() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

  T operator()(const T& x) const
  {
    T r = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
      r = r * x + c_[i];
    return r;
  }

  Poly& operator+=(const Poly& o)
  {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o)
  {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const T& s)
  {
    for (auto& v : c_)
      v *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator-(Poly a)
  {
    for (auto& v : a.c_)
      v = -v;
    return a;
  }

  friend Poly operator*(const Poly& a, const Poly& b)
  {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0)
        continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }

  Poly shifted(std::size_t k) const
  {
    if (is_zero())
      return {};
    std::vector<T> r(k, T(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r));
  }

  /// p(-x)
  Poly negated_var() const
  {
    auto r = c_;
    for (std::size_t i = 1; i < r.size(); i += 2)
      r[i] = -r[i];
    return Poly(std::move(r));
  }

  /// p(x^k)
  Poly substitute_power(std::size_t k) const
  {
    if (is_zero())
      return {};
    std::vector<T> r((c_.size() - 1) * k + 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      r[i * k] = c_[i];
    return Poly(std::move(r));
  }

  Poly derivative() const
  {
    if (c_.size() <= 1)
      return {};
    std::vector<T> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      r[i - 1] = c_[i] * T(static_cast<long>(i));
    return Poly(std::move(r));
  }

  /// x^deg * p(1/x)
  Poly reversed() const
  {
    auto r = c_;
    std::reverse(r.begin(), r.end());
    return Poly(std::move(r));
  }

  /// Number of leading zero roots (power of x dividing p).
  std::size_t x_valuation() const
  {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0)
      ++k;
    return k;
  }

  bool operator==(const Poly&) const = default;

  /// Human-readable form, highest degree first: "x^3 - 2x^2 + 4".
  std::string str(const std::string& var = "x") const
  {
    if (is_zero())
      return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const T& a = c_[i];
      if (a == 0)
        continue;
      bool neg = a < 0;
      T mag = neg ? T(-a) : a;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      std::string ms = mag.str();
      if (i == 0)
        s += ms;
      else {
        if (mag != 1)
          s += ms;
        s += var;
        if (i > 1)
          s += "^" + std::to_string(i);
      }
    }
    return s;
  }

  /// Same as str() without spaces: "x^3-2x^2+4".
  std::string compact(const std::string& var = "x") const
  {
    auto s = str(var);
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
  }

private:
  void trim()
  {
    while (!c_.empty() && c_.back() == 0)
      c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<BigRat>;

inline RatPoly to_rat(const IntPoly& p)
{
  std::vector<BigRat> c;
  for (const auto& v : p.coeffs())
    c.emplace_back(v);
  return RatPoly(std::move(c));
}

/// Converts when every coefficient is an integer.
inline IntPoly to_int(const RatPoly& p)
{
  std::vector<BigInt> c;
  for (const auto& v : p.coeffs()) {
    if (!is_integer(v))
      throw error(errc::non_integral, "coefficient " + v.str() + " is not an integer");
    c.push_back(numerator_of(v));
  }
  return IntPoly(std::move(c));
}

/// Division with remainder over the rationals.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b)
{
  if (b.is_zero())
    throw std::domain_error("polynomial division by zero");
  std::vector<BigRat> r = a.coeffs();
  long db = b.degree();
  long da = a.degree();
  if (da < db)
    return {RatPoly{}, a};
  std::vector<BigRat> q(static_cast<std::size_t>(da - db + 1), BigRat(0));
  const auto& bc = b.coeffs();
  for (long k = da - db; k >= 0; --k) {
    auto top = static_cast<std::size_t>(k + db);
    if (r[top] == 0)
      continue;
    BigRat f = r[top] / b.lead();
    q[static_cast<std::size_t>(k)] = f;
    for (std::size_t j = 0; j < bc.size(); ++j)
      r[static_cast<std::size_t>(k) + j] -= f * bc[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

/// Division with remainder over Z by a monic divisor.
inline std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b)
{
  if (!b.is_monic())
    throw std::invalid_argument("divmod_monic: divisor must be monic");
  std::vector<BigInt> r = a.coeffs();
  long db = b.degree(), da = a.degree();
  if (da < db)
    return {IntPoly{}, a};
  std::vector<BigInt> q(static_cast<std::size_t>(da - db + 1), BigInt(0));
  const auto& bc = b.coeffs();
  for (long k = da - db; k >= 0; --k) {
    auto top = static_cast<std::size_t>(k + db);
    BigInt f = r[top];
    if (f == 0)
      continue;
    q[static_cast<std::size_t>(k)] = f;
    for (std::size_t j = 0; j < bc.size(); ++j)
      r[static_cast<std::size_t>(k) + j] -= f * bc[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

/// Exact quotient a / b over Z, or nullopt-like failure signalled by the bool.
inline std::pair<bool, IntPoly> try_divide_exact(const IntPoly& a, const IntPoly& b)
{
  if (b.is_zero())
    throw std::domain_error("polynomial division by zero");
  if (a.is_zero())
    return {true, {}};
  long db = b.degree(), da = a.degree();
  if (da < db)
    return {false, {}};
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(static_cast<std::size_t>(da - db + 1), BigInt(0));
  const auto& bc = b.coeffs();
  for (long k = da - db; k >= 0; --k) {
    auto top = static_cast<std::size_t>(k + db);
    if (r[top] == 0)
      continue;
    BigInt f, rem;
    boost::multiprecision::divide_qr(r[top], b.lead(), f, rem);
    if (rem != 0)
      return {false, {}};
    q[static_cast<std::size_t>(k)] = f;
    for (std::size_t j = 0; j < bc.size(); ++j)
      r[static_cast<std::size_t>(k) + j] -= f * bc[j];
  }
  for (long i = 0; i < db; ++i)
    if (r[static_cast<std::size_t>(i)] != 0)
      return {false, {}};
  return {true, IntPoly(std::move(q))};
}

inline IntPoly divide_exact(const IntPoly& a, const IntPoly& b)
{
  auto [ok, q] = try_divide_exact(a, b);
  if (!ok)
    throw std::logic_error("divide_exact: " + b.str() + " does not divide " + a.str());
  return q;
}

inline bool divides(const IntPoly& b, const IntPoly& a) { return try_divide_exact(a, b).first; }

inline BigInt content(const IntPoly& p)
{
  BigInt g = 0;
  for (const auto& v : p.coeffs())
    g = boost::multiprecision::gcd(g, v);
  return g;
}

/// Primitive part with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& p)
{
  if (p.is_zero())
    return p;
  BigInt g = content(p);
  if (p.lead() < 0)
    g = -g;
  std::vector<BigInt> c;
  for (const auto& v : p.coeffs())
    c.push_back(v / g);
  return IntPoly(std::move(c));
}

/// Monic gcd over the rationals.
inline RatPoly gcd(RatPoly a, RatPoly b)
{
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero())
    return a;
  BigRat l = a.lead();
  std::vector<BigRat> c;
  for (const auto& v : a.coeffs())
    c.push_back(v / l);
  return RatPoly(std::move(c));
}

/// Primitive integer gcd with positive leading coefficient.
inline IntPoly gcd(const IntPoly& a, const IntPoly& b)
{
  auto g = gcd(to_rat(a), to_rat(b));
  if (g.is_zero())
    return {};
  BigInt den = 1;
  for (const auto& v : g.coeffs()) {
    BigInt d = boost::multiprecision::denominator(v);
    den = den / boost::multiprecision::gcd(den, d) * d;
  }
  std::vector<BigInt> c;
  for (const auto& v : g.coeffs())
    c.push_back(numerator_of(v * den));
  return primitive_part(IntPoly(std::move(c)));
}

inline IntPoly pow(const IntPoly& p, unsigned k)
{
  IntPoly r = IntPoly::constant(1);
  for (unsigned i = 0; i < k; ++i)
    r = r * p;
  return r;
}

} // namespace rsw
