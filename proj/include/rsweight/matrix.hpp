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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace rsw {

/// Dense square matrix over the integers.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, BigInt(0)) {}

  static IntMatrix identity(std::size_t n)
  {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  std::vector<BigInt> row(std::size_t i) const
  {
    return {a_.begin() + static_cast<long>(i * n_), a_.begin() + static_cast<long>((i + 1) * n_)};
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y)
  {
    if (x.n_ != y.n_)
      throw std::invalid_argument("IntMatrix: size mismatch");
    IntMatrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        const BigInt& v = x(i, k);
        if (v == 0)
          continue;
        for (std::size_t j = 0; j < x.n_; ++j)
          if (y(k, j) != 0)
            r(i, j) += v * y(k, j);
      }
    return r;
  }

  IntMatrix operator*(const BigInt& s) const
  {
    IntMatrix r = *this;
    for (auto& v : r.a_)
      v *= s;
    return r;
  }

  IntMatrix operator-() const
  {
    IntMatrix r = *this;
    for (auto& v : r.a_)
      v = -v;
    return r;
  }

  IntMatrix transpose() const
  {
    IntMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        r(j, i) = (*this)(i, j);
    return r;
  }

  BigInt trace() const
  {
    BigInt s = 0;
    for (std::size_t i = 0; i < n_; ++i)
      s += (*this)(i, i);
    return s;
  }

  IntMatrix pow(unsigned long e) const
  {
    IntMatrix r = identity(n_), b = *this;
    while (e) {
      if (e & 1UL)
        r = r * b;
      e >>= 1;
      if (e)
        b = b * b;
    }
    return r;
  }

  bool operator==(const IntMatrix&) const = default;

private:
  std::size_t n_ = 0;
  std::vector<BigInt> a_;
};

} // namespace rsw
