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
#include <complex>
#include <vector>

#include "int_poly.hpp"

namespace rsw {

using Complex = std::complex<long double>;

namespace detail {

inline Complex horner(const std::vector<Complex>& c, Complex z)
{
  Complex r = 0;
  for (std::size_t i = c.size(); i-- > 0;)
    r = r * z + c[i];
  return r;
}

} // namespace detail

/// All complex roots of a nonzero integer polynomial (with multiplicity),
/// by Aberth-Ehrlich iteration followed by Newton polishing.
inline std::vector<Complex> poly_roots(const IntPoly& p, int max_iter = 2000)
{
  std::vector<Complex> roots;
  if (p.degree() < 1)
    return roots;
  std::size_t zeros = p.x_valuation();
  roots.assign(zeros, Complex(0));
  std::vector<Complex> c;
  for (std::size_t i = zeros; i < p.coeffs().size(); ++i)
    c.emplace_back(static_cast<long double>(p.coeffs()[i].convert_to<long double>()));
  std::size_t n = c.size() - 1;
  if (n == 0)
    return roots;
  for (auto& v : c)
    v /= c.back();
  std::vector<Complex> dc(n);
  for (std::size_t i = 1; i <= n; ++i)
    dc[i - 1] = c[i] * static_cast<long double>(i);

  long double radius = 0;
  for (std::size_t i = 0; i < n; ++i)
    radius = std::max(radius, std::pow(std::abs(c[i]), 1.0L / static_cast<long double>(n - i)));
  radius = std::max(radius, 1e-3L);
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    long double ang = 2.0L * 3.14159265358979323846L * static_cast<long double>(k) / static_cast<long double>(n) + 0.4L;
    z[k] = std::polar(radius, ang);
  }
  for (int it = 0; it < max_iter; ++it) {
    long double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex pv = detail::horner(c, z[k]);
      Complex dv = detail::horner(dc, z[k]);
      if (pv == Complex(0))
        continue;
      Complex ratio = pv / dv;
      Complex sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k)
          sum += 1.0L / (z[k] - z[j]);
      Complex w = ratio / (1.0L - ratio * sum);
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[k])));
    }
    if (worst < 1e-17L)
      break;
  }
  for (auto& r : z) {
    for (int k = 0; k < 3; ++k) {
      Complex dv = detail::horner(dc, r);
      if (dv == Complex(0))
        break;
      r -= detail::horner(c, r) / dv;
    }
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

} // namespace rsw
