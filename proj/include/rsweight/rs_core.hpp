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
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "field.hpp"
#include "tuples.hpp"

namespace rsw {

enum class Context { rs, trace };
enum class Provenance { oracle, sft, formula, recurrence };

inline std::string context_name(Context c) { return c == Context::rs ? "rs" : "trace"; }

inline Context parse_context(const std::string& s)
{
  if (s == "rs")
    return Context::rs;
  if (s == "trace")
    return Context::trace;
  throw error(errc::parse_error, "unknown context: " + s);
}

inline std::string provenance_name(Provenance p)
{
  switch (p) {
  case Provenance::oracle:
    return "oracle";
  case Provenance::sft:
    return "sft";
  case Provenance::formula:
    return "formula";
  case Provenance::recurrence:
    return "recurrence";
  }
  return "?";
}

struct WeightEntry {
  BigInt weight;
  Provenance provenance = Provenance::oracle;

  bool operator==(const WeightEntry&) const = default;
};

struct WeightSequence {
  TupleCollection family;
  Context context = Context::rs;
  std::map<unsigned, WeightEntry> entries;
};

struct OracleOptions {
  unsigned cap = 28;
  unsigned threads = 1;
  const Gf2Poly* modulus = nullptr; // trace context: field modulus, min_irreducible(n) when null
};

namespace detail {

inline std::uint64_t low_mask(unsigned n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

/// bit i of the result is bit (i + k) mod n of x
inline std::uint64_t rot_down(std::uint64_t x, unsigned k, unsigned n)
{
  k %= n;
  if (k == 0)
    return x;
  return ((x >> k) | (x << (n - k))) & low_mask(n);
}

inline void check_cap(unsigned n, unsigned cap, const char* what)
{
  if (n == 0)
    throw std::invalid_argument(std::string(what) + ": n must be positive");
  if (n > cap)
    throw error(errc::cap_exceeded,
                std::string(what) + ": n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

template <class F>
std::uint64_t parallel_sum(std::uint64_t count, unsigned threads, F&& body)
{
  if (threads <= 1 || count < 2 * threads)
    return body(std::uint64_t{0}, count);
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  std::uint64_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::uint64_t lo = std::min(count, t * chunk), hi = std::min(count, lo + chunk);
    pool.emplace_back([&, t, lo, hi] { partial[t] = body(lo, hi); });
  }
  for (auto& th : pool)
    th.join();
  std::uint64_t s = 0;
  for (auto v : partial)
    s += v;
  return s;
}

} // namespace detail

/// Monomials of f_{C,n} as variable masks, with x^2 = x and duplicate
/// monomials cancelled. Requires n <= 64.
inline std::vector<std::uint64_t> rs_monomials(const TupleCollection& c, unsigned n)
{
  if (n == 0 || n > 64)
    throw std::invalid_argument("rs_monomials: n must be in 1..64");
  std::map<std::uint64_t, unsigned> count;
  for (const auto& t : c.tuples())
    for (unsigned i = 0; i < n; ++i) {
      std::uint64_t m = 0;
      for (unsigned a : t)
        m |= std::uint64_t{1} << ((i + a) % n);
      ++count[m];
    }
  std::vector<std::uint64_t> out;
  for (auto [m, k] : count)
    if (k & 1U)
      out.push_back(m);
  return out;
}

/// f_{C,n}(x) where bit i of x is x_i.
inline bool rs_eval(const TupleCollection& c, unsigned n, std::uint64_t x)
{
  bool v = false;
  for (auto m : rs_monomials(c, n))
    v ^= (x & m) == m;
  return v;
}

/// Weight of f_{C,n} by bit-parallel truth-table enumeration.
inline BigInt rs_weight_oracle(const TupleCollection& c, unsigned n, const OracleOptions& opt = {})
{
  detail::check_cap(n, opt.cap, "rs_weight_oracle");
  if (c.empty())
    return 0;
  static constexpr std::array<std::uint64_t, 6> pattern{0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL,
                                                        0xF0F0F0F0F0F0F0F0ULL, 0xFF00FF00FF00FF00ULL,
                                                        0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
  struct Mono {
    std::uint64_t low;
    std::uint64_t high;
  };
  std::vector<Mono> monos;
  for (auto m : rs_monomials(c, n)) {
    std::uint64_t w = ~std::uint64_t{0};
    for (unsigned j = 0; j < 6; ++j)
      if ((m >> j) & 1U)
        w &= pattern[j];
    monos.push_back({w, m >> 6});
  }
  std::uint64_t valid = n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1U << n)) - 1;
  std::uint64_t blocks = n > 6 ? std::uint64_t{1} << (n - 6) : 1;
  std::uint64_t total = detail::parallel_sum(blocks, opt.threads, [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t s = 0;
    for (std::uint64_t h = lo; h < hi; ++h) {
      std::uint64_t w = 0;
      for (const auto& m : monos)
        if ((m.high & ~h) == 0)
          w ^= m.low;
      s += static_cast<std::uint64_t>(std::popcount(w & valid));
    }
    return s;
  });
  return BigInt(total);
}

/// Weight of Tr(P_f(x)) on GF(2^n) by full enumeration.
inline BigInt trace_weight_oracle(const TupleCollection& c, unsigned n, const OracleOptions& opt = {24, 1})
{
  detail::check_cap(n, opt.cap, "trace_weight_oracle");
  if (c.empty())
    return 0;
  FieldCtx f = opt.modulus ? FieldCtx(n, *opt.modulus) : FieldCtx(n);
  std::uint64_t total = detail::parallel_sum(f.order(), opt.threads, [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t s = 0;
    for (std::uint64_t x = lo; x < hi; ++x)
      s += f.trace_raw(f.eval_pf_raw(c, x)) ? 1U : 0U;
    return s;
  });
  return BigInt(total);
}

/// Number of (x, y) in GF(2^n)^2 with P_f(x) = y + y^2.
inline BigInt curve_point_count(const TupleCollection& c, unsigned n, unsigned cap = 24)
{
  detail::check_cap(n, cap, "curve_point_count");
  FieldCtx f(n);
  std::vector<std::uint8_t> hist(f.order(), 0);
  for (std::uint64_t y = 0; y < f.order(); ++y)
    ++hist[f.sqr_raw(y) ^ y];
  std::uint64_t total = 0;
  for (std::uint64_t x = 0; x < f.order(); ++x)
    total += hist[c.empty() ? 0 : f.eval_pf_raw(c, x)];
  return BigInt(total);
}

/// Vector-valued P_{f,n}: component i is sum over tuples of prod_j x_{i+a_j}.
inline std::uint64_t rs_vector_map(const TupleCollection& c, unsigned n, std::uint64_t x)
{
  std::uint64_t v = 0;
  for (const auto& t : c.tuples()) {
    std::uint64_t m = detail::low_mask(n);
    for (unsigned a : t)
      m &= detail::rot_down(x, a, n);
    v ^= m;
  }
  return v;
}

/// Number of (x, y) in V_n^2 with P_{f,n}(x) = y + sigma(y).
inline BigInt rs_pair_count(const TupleCollection& c, unsigned n, unsigned cap = 24)
{
  detail::check_cap(n, cap, "rs_pair_count");
  std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint8_t> hist(size, 0);
  for (std::uint64_t y = 0; y < size; ++y)
    ++hist[y ^ detail::rot_down(y, 1, n)];
  std::uint64_t total = 0;
  for (std::uint64_t x = 0; x < size; ++x)
    total += hist[rs_vector_map(c, n, x)];
  return BigInt(total);
}

/// W_f(0) = 2^n - 2 wt
inline BigInt walsh_zero_from_weight(const BigInt& weight, unsigned n) { return pow2(n) - 2 * weight; }

inline BigInt walsh_zero(const TupleCollection& c, unsigned n, const OracleOptions& opt = {})
{
  return walsh_zero_from_weight(rs_weight_oracle(c, n, opt), n);
}

// Exact weights of quadratic functions over GF(2)^n (Dickson normal form).

using BitVec = std::vector<std::uint64_t>;

namespace detail {

inline BitVec bits_zero(unsigned n) { return BitVec((n + 63) / 64, 0); }
inline bool bit_get(const BitVec& v, unsigned i) { return (v[i / 64] >> (i % 64)) & 1U; }
inline void bit_flip(BitVec& v, unsigned i) { v[i / 64] ^= std::uint64_t{1} << (i % 64); }

inline bool bits_dot(const BitVec& a, const BitVec& b)
{
  unsigned s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    s += static_cast<unsigned>(std::popcount(a[k] & b[k]));
  return s & 1U;
}

inline void bits_xor(BitVec& a, const BitVec& b)
{
  for (std::size_t k = 0; k < a.size(); ++k)
    a[k] ^= b[k];
}

} // namespace detail

/// f(x) = constant + <linear, x> + sum_{i<j} upper[i]_j x_i x_j
class QuadraticFunction {
public:
  explicit QuadraticFunction(unsigned n)
      : n_(n), upper_(n, detail::bits_zero(n)), linear_(detail::bits_zero(n))
  {
  }

  unsigned n() const noexcept { return n_; }

  void toggle_pair(unsigned i, unsigned j)
  {
    if (i == j) {
      toggle_linear(i);
      return;
    }
    if (i > j)
      std::swap(i, j);
    detail::bit_flip(upper_[i], j);
  }
  void toggle_linear(unsigned i) { detail::bit_flip(linear_, i); }
  void toggle_constant() { constant_ = !constant_; }

  bool eval(const BitVec& x) const
  {
    bool v = constant_ ^ detail::bits_dot(linear_, x);
    for (unsigned i = 0; i < n_; ++i)
      if (detail::bit_get(x, i))
        v ^= detail::bits_dot(upper_[i], x);
    return v;
  }

  /// rows of the symmetric alternating matrix of the polar form
  std::vector<BitVec> polar_rows() const
  {
    std::vector<BitVec> rows = upper_;
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = i + 1; j < n_; ++j)
        if (detail::bit_get(upper_[i], j))
          detail::bit_flip(rows[j], i);
    return rows;
  }

private:
  unsigned n_;
  std::vector<BitVec> upper_;
  BitVec linear_;
  bool constant_ = false;
};

struct QuadraticWeight {
  BigInt weight;
  unsigned radical_dim = 0;
  bool linear_on_radical = false; // balanced because f is non-constant on the radical
};

inline QuadraticWeight quadratic_weight(const QuadraticFunction& q)
{
  unsigned n = q.n();
  auto rows = q.polar_rows();
  struct Vec {
    BitVec x, bx;
  };
  std::vector<Vec> work;
  for (unsigned i = 0; i < n; ++i) {
    BitVec e = detail::bits_zero(n);
    detail::bit_flip(e, i);
    work.push_back({e, rows[i]});
  }
  std::vector<std::pair<BitVec, BitVec>> pairs;
  std::vector<BitVec> radical;
  while (!work.empty()) {
    Vec u = std::move(work.back());
    work.pop_back();
    auto it = std::find_if(work.begin(), work.end(), [&](const Vec& w) { return detail::bits_dot(w.x, u.bx); });
    if (it == work.end()) {
      radical.push_back(std::move(u.x));
      continue;
    }
    Vec w = std::move(*it);
    work.erase(it);
    for (auto& z : work) {
      bool cu = detail::bits_dot(z.x, w.bx); // coefficient on u
      bool cw = detail::bits_dot(z.x, u.bx); // coefficient on w
      if (cu) {
        detail::bits_xor(z.x, u.x);
        detail::bits_xor(z.bx, u.bx);
      }
      if (cw) {
        detail::bits_xor(z.x, w.x);
        detail::bits_xor(z.bx, w.bx);
      }
    }
    pairs.emplace_back(std::move(u.x), std::move(w.x));
  }
  BitVec zero = detail::bits_zero(n);
  bool f0 = q.eval(zero);
  QuadraticWeight out;
  out.radical_dim = static_cast<unsigned>(radical.size());
  for (const auto& r : radical)
    if (q.eval(r) != f0) {
      out.linear_on_radical = true;
      out.weight = pow2(n - 1);
      return out;
    }
  bool s = f0;
  for (const auto& [e, f] : pairs)
    s ^= (q.eval(e) != f0) && (q.eval(f) != f0);
  BigInt w = pow2((n + out.radical_dim) / 2);
  BigInt walsh = s ? BigInt(-w) : w;
  out.weight = (pow2(n) - walsh) / 2;
  return out;
}

/// Quadratic function of f_{C,n} for quadratic C (any n >= 1).
inline QuadraticFunction rs_quadratic_function(const TupleCollection& c, unsigned n)
{
  QuadraticFunction q(n);
  for (unsigned t : c.quadratic_offsets())
    for (unsigned i = 0; i < n; ++i)
      q.toggle_pair(i, (i + t) % n);
  return q;
}

/// Coordinates of Tr(P_f(x)) in the polynomial basis of GF(2^n) for
/// quadratic C; any n >= 1 (field elements as GF(2) polynomials).
inline QuadraticFunction trace_quadratic_function(const TupleCollection& c, unsigned n)
{
  if (n == 0)
    throw std::invalid_argument("trace_quadratic_function: n must be positive");
  auto offs = c.quadratic_offsets();
  Gf2Poly m = min_irreducible(n);
  // Tr(x^k) for k < 2n - 1 are the power sums of the roots of m, by
  // Newton's identities over GF(2)
  std::vector<bool> a(n + 1, false);
  for (unsigned i = 1; i <= n; ++i)
    a[i] = m.coeff(n - i);
  unsigned len = 2 * n - 1;
  BitVec tau = detail::bits_zero(len + n);
  std::vector<bool> p(len, false);
  p[0] = n % 2 != 0;
  for (unsigned k = 1; k < len; ++k) {
    bool v = false;
    for (unsigned i = 1; i <= std::min(k - 1, n); ++i)
      v ^= a[i] && p[k - i];
    if (k <= n)
      v ^= (k % 2 != 0) && a[k];
    p[k] = v;
  }
  for (unsigned k = 0; k < len; ++k)
    if (p[k])
      detail::bit_flip(tau, k);
  // window[i] holds Tr(x^(i+k)) at bit k
  std::vector<BitVec> window(n, detail::bits_zero(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k)
      if (detail::bit_get(tau, i + k))
        detail::bit_flip(window[i], k);
  QuadraticFunction q(n);
  for (unsigned t : offs) {
    // (x^j)^(2^t) = (x^(2^t))^j
    Gf2Poly xt = x_pow_two_pow(t % n, m);
    Gf2Poly fj = Gf2Poly::one();
    for (unsigned j = 0; j < n; ++j) {
      BitVec fb = detail::bits_zero(n);
      for (std::size_t w = 0; w < fj.words().size() && w < fb.size(); ++w)
        fb[w] = fj.words()[w];
      for (unsigned i = 0; i < n; ++i)
        if (detail::bits_dot(window[i], fb))
          q.toggle_pair(i, j);
      fj = mulmod(fj, xt, m);
    }
  }
  return q;
}

inline QuadraticWeight rs_weight_quadratic(const TupleCollection& c, unsigned n)
{
  return quadratic_weight(rs_quadratic_function(c, n));
}

inline QuadraticWeight trace_weight_quadratic(const TupleCollection& c, unsigned n)
{
  return quadratic_weight(trace_quadratic_function(c, n));
}

} // namespace rsw
