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

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rsw {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned k)
{
  BigInt r = 1;
  r <<= k;
  return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline bool is_integer(const BigRat& r)
{
  return boost::multiprecision::denominator(r) == 1;
}

inline BigInt numerator_of(const BigRat& r) { return boost::multiprecision::numerator(r); }

/// Floor of log2 for positive values; -1 for zero.
inline long bit_length(const BigInt& v)
{
  if (v == 0)
    return 0;
  return static_cast<long>(boost::multiprecision::msb(boost::multiprecision::abs(v))) + 1;
}

} // namespace rsw
