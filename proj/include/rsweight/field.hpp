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

#include <array>
#include <bit>
#include <cstdint>
#include <string>

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#include <wmmintrin.h>
#define RSW_HAVE_CLMUL_DISPATCH 1
#endif

#include "error.hpp"
#include "gf2_poly.hpp"
#include "tuples.hpp"

namespace rsw {

class FieldCtx;

namespace detail {

#ifdef RSW_HAVE_CLMUL_DISPATCH
__attribute__((target("pclmul,sse2"))) inline std::uint64_t clmul_hw(std::uint64_t a, std::uint64_t b) noexcept
{
  __m128i r = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                   _mm_cvtsi64_si128(static_cast<long long>(b)), 0);
  return static_cast<std::uint64_t>(_mm_cvtsi128_si64(r));
}

inline bool cpu_has_clmul() noexcept
{
  static const bool has = __builtin_cpu_supports("pclmul");
  return has;
}
#endif

/// Carry-less product of two operands below 2^32.
inline std::uint64_t clmul32(std::uint64_t a, std::uint64_t b) noexcept
{
#ifdef RSW_HAVE_CLMUL_DISPATCH
  if (cpu_has_clmul())
    return clmul_hw(a, b);
#endif
  std::array<std::uint64_t, 16> t{};
  for (unsigned i = 1; i < 16; ++i)
    t[i] = (i & 1U) ? t[i - 1] ^ a : t[i >> 1] << 1;
  std::uint64_t r = 0;
  for (int s = 28; s >= 0; s -= 4)
    r = (r << 4) ^ t[(b >> s) & 15U];
  return r;
}

inline constexpr std::array<std::uint16_t, 256> make_spread()
{
  std::array<std::uint16_t, 256> t{};
  for (unsigned b = 0; b < 256; ++b) {
    std::uint16_t v = 0;
    for (unsigned i = 0; i < 8; ++i)
      if ((b >> i) & 1U)
        v = static_cast<std::uint16_t>(v | (1U << (2 * i)));
    t[b] = v;
  }
  return t;
}

inline constexpr std::array<std::uint16_t, 256> spread_table = make_spread();

} // namespace detail

/// Element of GF(2^n) in the polynomial basis of its context.
struct FieldElem {
  const FieldCtx* ctx = nullptr;
  std::uint64_t bits = 0;

  bool operator==(const FieldElem& o) const { return ctx == o.ctx && bits == o.bits; }
};

/// GF(2^n) = GF(2)[x]/(modulus), n <= 63, elements packed into one word.
///
/// FieldElem keeps a pointer to its context, so a context must outlive the
/// elements it hands out. Contexts are immutable once built.
class FieldCtx {
public:
  static constexpr unsigned max_degree = 63;

  explicit FieldCtx(unsigned n) : FieldCtx(n, min_irreducible(n)) {}

  FieldCtx(unsigned n, const Gf2Poly& modulus) : n_(n), modulus_(modulus)
  {
    if (n == 0 || n > max_degree)
      throw std::invalid_argument("FieldCtx: degree must be in 1..63");
    if (modulus.degree() != static_cast<long>(n) || !is_irreducible_rabin(modulus))
      throw error(errc::not_irreducible, "modulus " + modulus.str() + " is not irreducible of degree " +
                                             std::to_string(n));
    full_ = modulus.low_bits();
    top_ = std::uint64_t{1} << n;
    mask_ = top_ - 1;
    if (n <= 32)
      for (unsigned k = 0; k < 4; ++k)
        for (std::uint64_t b = 0; b < 256; ++b) {
          // (b x^(8k)) x^n mod modulus
          std::uint64_t v = b;
          for (unsigned s = 0; s < 8 * k + n; ++s) {
            v <<= 1;
            if (v & top_)
              v ^= full_;
          }
          red_[k][b] = v;
        }
    for (unsigned i = 0; i < n; ++i)
      if (trace_by_definition(std::uint64_t{1} << i))
        trace_mask_ |= std::uint64_t{1} << i;
  }

  unsigned degree() const noexcept { return n_; }
  const Gf2Poly& modulus() const noexcept { return modulus_; }
  std::uint64_t order() const noexcept { return top_; }

  FieldElem elem(std::uint64_t bits) const
  {
    if (bits & ~mask_)
      throw std::invalid_argument("FieldCtx::elem: value outside the field");
    return {this, bits};
  }
  FieldElem zero() const { return {this, 0}; }
  FieldElem one() const { return {this, 1}; }
  /// Class of x; a generator of the basis.
  FieldElem gen() const { return {this, n_ == 1 ? std::uint64_t{0} : std::uint64_t{2}}; }

  // Raw word arithmetic for hot loops. Operands must be reduced.
  std::uint64_t mul_raw(std::uint64_t a, std::uint64_t b) const noexcept
  {
    if (n_ <= 32)
      return reduce_wide(detail::clmul32(a, b));
    return mul_shift_add(a, b);
  }

  /// Reference shift-and-add product, valid for every degree.
  std::uint64_t mul_shift_add(std::uint64_t a, std::uint64_t b) const noexcept
  {
    std::uint64_t r = 0;
    while (b) {
      if (b & 1U)
        r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & top_)
        a ^= full_;
    }
    return r;
  }

  std::uint64_t sqr_raw(std::uint64_t a) const noexcept
  {
    if (n_ > 32)
      return mul_shift_add(a, a);
    std::uint64_t w = 0;
    for (unsigned k = 0; k < 4; ++k)
      w |= static_cast<std::uint64_t>(detail::spread_table[(a >> (8 * k)) & 0xFFU]) << (16 * k);
    return reduce_wide(w);
  }

  std::uint64_t pow_raw(std::uint64_t a, std::uint64_t e) const noexcept
  {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1U)
        r = mul_raw(r, a);
      a = mul_raw(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Trace through the precomputed linear functional.
  bool trace_raw(std::uint64_t a) const noexcept { return std::popcount(a & trace_mask_) & 1; }

  /// Tr(a) = a + a^2 + ... + a^(2^(n-1)); the sum lands in {0, 1}.
  bool trace_by_definition(std::uint64_t a) const
  {
    std::uint64_t s = 0, y = a;
    for (unsigned i = 0; i < n_; ++i) {
      s ^= y;
      y = sqr_raw(y);
    }
    if (s > 1)
      throw std::logic_error("trace left the prime field");
    return s == 1;
  }

  FieldElem add(const FieldElem& a, const FieldElem& b) const
  {
    check(a);
    check(b);
    return {this, a.bits ^ b.bits};
  }
  FieldElem mul(const FieldElem& a, const FieldElem& b) const
  {
    check(a);
    check(b);
    return {this, mul_raw(a.bits, b.bits)};
  }
  FieldElem square(const FieldElem& a) const
  {
    check(a);
    return {this, sqr_raw(a.bits)};
  }
  FieldElem frobenius(const FieldElem& a) const { return square(a); }
  FieldElem pow(const FieldElem& a, std::uint64_t e) const
  {
    check(a);
    return {this, pow_raw(a.bits, e)};
  }
  bool trace(const FieldElem& a) const
  {
    check(a);
    return trace_by_definition(a.bits);
  }

  /// P_f(x) = sum over tuples of x * x^(2^a1) * ... * x^(2^a_{d-1}).
  std::uint64_t eval_pf_raw(const TupleCollection& c, std::uint64_t x) const noexcept
  {
    std::uint64_t s = 0;
    for (const auto& t : c.tuples()) {
      std::uint64_t prod = x, y = x;
      unsigned prev = 0;
      for (std::size_t j = 1; j < t.size(); ++j) {
        for (unsigned k = prev; k < t[j]; ++k)
          y = sqr_raw(y);
        prev = t[j];
        prod = mul_raw(prod, y);
      }
      s ^= prod;
    }
    return s;
  }

  FieldElem eval_pf(const TupleCollection& c, const FieldElem& x) const
  {
    check(x);
    return {this, eval_pf_raw(c, x.bits)};
  }

private:
  // reduces a product of two reduced operands (n <= 32)
  std::uint64_t reduce_wide(std::uint64_t p) const noexcept
  {
    std::uint64_t h = p >> n_;
    std::uint64_t r = p & mask_;
    for (unsigned k = 0; h; ++k, h >>= 8)
      r ^= red_[k][h & 0xFFU];
    return r;
  }

  void check(const FieldElem& a) const
  {
    if (a.ctx != this)
      throw error(errc::ctx_mismatch, "field element belongs to another context");
  }

  unsigned n_;
  Gf2Poly modulus_;
  std::uint64_t full_ = 0;
  std::uint64_t top_ = 0;
  std::uint64_t mask_ = 0;
  std::uint64_t trace_mask_ = 0;
  std::array<std::array<std::uint64_t, 256>, 4> red_{};
};

} // namespace rsw
