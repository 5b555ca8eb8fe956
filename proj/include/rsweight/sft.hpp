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
#include <string>
#include <thread>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "int_algebra.hpp"
#include "int_poly.hpp"
#include "matrix.hpp"
#include "tuples.hpp"

namespace rsw {

/// P_f on a window: sum over tuples of x_0 x_{a_1} ... x_{a_{d-1}}, where
/// bit i of xbits is x_i.
inline bool pf_window(const TupleCollection& c, std::uint64_t xbits)
{
  bool v = false;
  for (const auto& t : c.tuples()) {
    bool m = true;
    for (unsigned a : t)
      m = m && ((xbits >> a) & 1U);
    v ^= m;
  }
  return v;
}

/// Allowed L-words over GF(2) x GF(2). Letter p of a word sits at bits
/// 2p (x) and 2p+1 (y).
struct LocalRule {
  TupleCollection family;
  unsigned window_len = 0;
  std::vector<std::uint8_t> allowed;

  static unsigned letter(std::uint64_t word, unsigned p) { return static_cast<unsigned>((word >> (2 * p)) & 3U); }
  static unsigned x_of(std::uint64_t word, unsigned p) { return letter(word, p) & 1U; }
  static unsigned y_of(std::uint64_t word, unsigned p) { return letter(word, p) >> 1; }

  bool predicate(std::uint64_t word) const { return allowed.at(word) != 0; }

  std::size_t allowed_count() const
  {
    return static_cast<std::size_t>(std::count(allowed.begin(), allowed.end(), std::uint8_t{1}));
  }
};

inline LocalRule build_local_rule(const TupleCollection& c)
{
  if (c.empty())
    throw error(errc::empty_collection, "build_local_rule: empty tuple collection");
  LocalRule r;
  r.family = c;
  r.window_len = c.max_offset() + 1;
  if (r.window_len > 10)
    throw error(errc::cap_exceeded, "build_local_rule: window longer than 10 letters");
  std::uint64_t words = std::uint64_t{1} << (2 * r.window_len);
  r.allowed.assign(words, 0);
  for (std::uint64_t w = 0; w < words; ++w) {
    std::uint64_t xb = 0;
    for (unsigned p = 0; p < r.window_len; ++p)
      xb |= static_cast<std::uint64_t>(LocalRule::x_of(w, p)) << p;
    bool v = pf_window(c, xb) ^ (LocalRule::y_of(w, 0) != 0) ^ (LocalRule::y_of(w, 1) != 0);
    r.allowed[w] = v ? 0 : 1;
  }
  return r;
}

enum class Presentation { de_bruijn, compact };

/// Finite directed graph whose closed walks of length n are the n-periodic
/// points of the shift.
struct TransferSystem {
  TupleCollection family;
  unsigned window_len = 0;
  Presentation kind = Presentation::de_bruijn;
  std::vector<std::uint64_t> codes;
  std::vector<std::vector<std::uint32_t>> out;

  std::size_t vertex_count() const noexcept { return codes.size(); }

  std::size_t edge_count() const noexcept
  {
    std::size_t e = 0;
    for (const auto& o : out)
      e += o.size();
    return e;
  }

  std::size_t max_out_degree() const noexcept
  {
    std::size_t d = 0;
    for (const auto& o : out)
      d = std::max(d, o.size());
    return d;
  }

  /// de Bruijn: one digit 0..3 (x + 2y) per letter; compact: x-bits, '|', y.
  std::string label(std::size_t v) const
  {
    std::string s;
    std::uint64_t code = codes.at(v);
    if (kind == Presentation::de_bruijn) {
      for (unsigned p = 0; p + 1 < window_len; ++p)
        s += static_cast<char>('0' + LocalRule::letter(code, p));
    } else {
      for (unsigned p = 0; p + 1 < window_len; ++p)
        s += static_cast<char>('0' + ((code >> p) & 1U));
      s += '|';
      s += static_cast<char>('0' + ((code >> (window_len - 1)) & 1U));
    }
    return s;
  }

  IntMatrix adjacency() const
  {
    IntMatrix a(vertex_count());
    for (std::size_t u = 0; u < out.size(); ++u)
      for (auto v : out[u])
        a(u, v) += 1;
    return a;
  }
};

namespace detail {

inline void trim_transfer_system(TransferSystem& t)
{
  std::size_t n = t.vertex_count();
  std::vector<bool> alive(n, true);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
      if (!alive[u])
        continue;
      for (auto v : t.out[u])
        if (alive[v]) {
          ++outdeg[u];
          ++indeg[v];
        }
    }
    for (std::size_t u = 0; u < n; ++u)
      if (alive[u] && (indeg[u] == 0 || outdeg[u] == 0)) {
        alive[u] = false;
        changed = true;
      }
  }
  std::vector<std::uint32_t> index(n, 0);
  TransferSystem r;
  r.family = t.family;
  r.window_len = t.window_len;
  r.kind = t.kind;
  for (std::size_t u = 0; u < n; ++u)
    if (alive[u]) {
      index[u] = static_cast<std::uint32_t>(r.codes.size());
      r.codes.push_back(t.codes[u]);
    }
  r.out.resize(r.codes.size());
  for (std::size_t u = 0; u < n; ++u) {
    if (!alive[u])
      continue;
    for (auto v : t.out[u])
      if (alive[v])
        r.out[index[u]].push_back(index[v]);
  }
  t = std::move(r);
}

} // namespace detail

/// Vertex shift on (L-1)-words; edges are the allowed L-words.
inline TransferSystem build_transfer_system(const LocalRule& rule, bool trim = true)
{
  TransferSystem t;
  t.family = rule.family;
  t.window_len = rule.window_len;
  t.kind = Presentation::de_bruijn;
  unsigned k = rule.window_len - 1;
  std::uint64_t nv = std::uint64_t{1} << (2 * k);
  t.codes.resize(nv);
  t.out.resize(nv);
  for (std::uint64_t u = 0; u < nv; ++u) {
    t.codes[u] = u;
    for (std::uint64_t last = 0; last < 4; ++last) {
      std::uint64_t word = u | (last << (2 * k));
      if (rule.predicate(word))
        t.out[u].push_back(static_cast<std::uint32_t>(word >> 2));
    }
  }
  if (trim)
    detail::trim_transfer_system(t);
  return t;
}

/// Conjugate presentation on (x_0..x_{L-2}, y_0): 2^L vertices, out-degree 2.
inline TransferSystem build_compact_system(const TupleCollection& c)
{
  if (c.empty())
    throw error(errc::empty_collection, "build_compact_system: empty tuple collection");
  TransferSystem t;
  t.family = c;
  t.window_len = c.max_offset() + 1;
  t.kind = Presentation::compact;
  unsigned k = t.window_len - 1;
  std::uint64_t nv = std::uint64_t{1} << t.window_len;
  std::uint64_t xmask = (std::uint64_t{1} << k) - 1;
  t.codes.resize(nv);
  t.out.resize(nv);
  for (std::uint64_t u = 0; u < nv; ++u) {
    t.codes[u] = u;
    std::uint64_t xs = u & xmask, y = u >> k;
    for (std::uint64_t last = 0; last < 2; ++last) {
      std::uint64_t window = xs | (last << k);
      std::uint64_t y1 = y ^ (pf_window(c, window) ? 1U : 0U);
      std::uint64_t v = (window >> 1) | (y1 << k);
      t.out[u].push_back(static_cast<std::uint32_t>(v));
    }
  }
  return t;
}

enum class CountMethod { automatic, dense, walk };

/// N_1..N_{n_max} (index 0 holds the vertex count) as traces of A^n.
inline std::vector<BigInt> periodic_counts(const TransferSystem& t, unsigned n_max,
                                           CountMethod method = CountMethod::automatic, unsigned threads = 1)
{
  std::size_t nv = t.vertex_count();
  std::vector<BigInt> res(n_max + 1, BigInt(0));
  res[0] = nv;
  if (nv == 0 || n_max == 0)
    return res;
  if (method == CountMethod::automatic)
    method = nv <= 64 ? CountMethod::dense : CountMethod::walk;
  if (method == CountMethod::dense) {
    IntMatrix a = t.adjacency(), p = a;
    for (unsigned n = 1; n <= n_max; ++n) {
      res[n] = p.trace();
      if (n < n_max)
        p = p * a;
    }
    return res;
  }
  // closed-walk dynamic programming from each start vertex
  double growth = std::log2(static_cast<double>(std::max<std::size_t>(2, t.max_out_degree())));
  bool fits = growth * n_max < 62.0;
  auto run = [&](std::size_t lo, std::size_t hi, std::vector<BigInt>& acc) {
    if (fits) {
      std::vector<std::uint64_t> cur(nv), next(nv), sums(n_max + 1, 0);
      for (std::size_t s = lo; s < hi; ++s) {
        std::fill(cur.begin(), cur.end(), 0);
        cur[s] = 1;
        for (unsigned n = 1; n <= n_max; ++n) {
          std::fill(next.begin(), next.end(), 0);
          for (std::size_t u = 0; u < nv; ++u)
            if (cur[u])
              for (auto v : t.out[u])
                next[v] += cur[u];
          cur.swap(next);
          sums[n] += cur[s];
        }
      }
      for (unsigned n = 1; n <= n_max; ++n)
        acc[n] += sums[n];
    } else {
      std::vector<BigInt> cur(nv), next(nv);
      for (std::size_t s = lo; s < hi; ++s) {
        std::fill(cur.begin(), cur.end(), BigInt(0));
        cur[s] = 1;
        for (unsigned n = 1; n <= n_max; ++n) {
          std::fill(next.begin(), next.end(), BigInt(0));
          for (std::size_t u = 0; u < nv; ++u)
            if (cur[u] != 0)
              for (auto v : t.out[u])
                next[v] += cur[u];
          cur.swap(next);
          acc[n] += cur[s];
        }
      }
    }
  };
  if (threads <= 1 || nv < 2 * threads) {
    run(0, nv, res);
    res[0] = nv;
    return res;
  }
  std::vector<std::vector<BigInt>> partial(threads, std::vector<BigInt>(n_max + 1, BigInt(0)));
  std::vector<std::thread> pool;
  std::size_t chunk = (nv + threads - 1) / threads;
  for (unsigned k = 0; k < threads; ++k) {
    std::size_t lo = std::min(nv, k * chunk), hi = std::min(nv, lo + chunk);
    pool.emplace_back([&, k, lo, hi] { run(lo, hi, partial[k]); });
  }
  for (auto& th : pool)
    th.join();
  for (const auto& p : partial)
    for (unsigned n = 1; n <= n_max; ++n)
      res[n] += p[n];
  return res;
}

inline BigInt periodic_count(const TransferSystem& t, unsigned n)
{
  if (n == 0)
    throw std::invalid_argument("periodic_count: n must be positive");
  return periodic_counts(t, n)[n];
}

/// det(xI - A) from the traces of A^1..A^V by inverse Newton identities.
inline IntPoly transfer_char_poly(const TransferSystem& t, std::size_t max_vertices = 256)
{
  std::size_t nv = t.vertex_count();
  if (nv > max_vertices)
    throw error(errc::cap_exceeded, "transfer_char_poly: " + std::to_string(nv) + " vertices exceed cap " +
                                        std::to_string(max_vertices));
  if (nv == 0)
    return IntPoly::constant(BigInt(1));
  auto traces = periodic_counts(t, static_cast<unsigned>(nv));
  return poly_from_power_sums(traces, nv);
}

/// Characteristic polynomial of this system, or of the compact conjugate
/// presentation (same zeta function) when the graph is large.
inline IntPoly spectral_char_poly(const TransferSystem& t)
{
  if (t.vertex_count() <= 64 || t.family.empty())
    return transfer_char_poly(t);
  return transfer_char_poly(build_compact_system(t.family));
}

/// det(1 - sA) as a polynomial in s.
inline IntPoly zeta_denominator(const TransferSystem& t)
{
  auto p = spectral_char_poly(t);
  auto d = static_cast<std::size_t>(p.degree());
  std::vector<BigInt> c(d + 1);
  for (std::size_t k = 0; k <= d; ++k)
    c[k] = p.coeff(d - k);
  return IntPoly(std::move(c));
}

inline CharValueSet char_values_from_sft(const TransferSystem& t)
{
  return factor_char_poly(spectral_char_poly(t)).nonzero;
}

/// Compares exp(sum N_n s^n / n) with 1 / det(1 - sA) up to order m.
inline bool zeta_series_check(const TransferSystem& t, unsigned m)
{
  auto counts = periodic_counts(t, m);
  auto den = zeta_denominator(t);
  std::vector<BigRat> e(m + 1, BigRat(0));
  e[0] = 1;
  for (unsigned k = 1; k <= m; ++k) {
    BigRat s = 0;
    for (unsigned j = 1; j <= k; ++j)
      s += BigRat(counts[j]) * e[k - j];
    e[k] = s / BigRat(static_cast<long long>(k));
  }
  std::vector<BigInt> q(m + 1, BigInt(0));
  q[0] = 1;
  for (unsigned k = 1; k <= m; ++k) {
    BigInt s = 0;
    for (unsigned j = 1; j <= k; ++j)
      s += den.coeff(j) * q[k - j];
    q[k] = -s;
  }
  for (unsigned k = 0; k <= m; ++k)
    if (e[k] != BigRat(q[k]))
      return false;
  return true;
}

} // namespace rsw
