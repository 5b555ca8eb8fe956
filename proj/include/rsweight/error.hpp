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

#include <stdexcept>
#include <string>

namespace rsw {

enum class errc {
  invalid_collection,
  empty_collection,
  non_quadratic,
  zero_a,
  no_period,
  ctx_mismatch,
  cap_exceeded,
  split_not_found,
  non_integral,
  non_integral_multiplicity,
  closed_form_mismatch,
  insufficient_data,
  not_irreducible,
  parse_error,
};

inline const char* errc_name(errc c)
{
  switch (c) {
  case errc::invalid_collection: return "InvalidCollection";
  case errc::empty_collection: return "EmptyCollection";
  case errc::non_quadratic: return "NonQuadratic";
  case errc::zero_a: return "ZeroA";
  case errc::no_period: return "NoPeriod";
  case errc::ctx_mismatch: return "CtxMismatch";
  case errc::cap_exceeded: return "CapExceeded";
  case errc::split_not_found: return "SplitNotFound";
  case errc::non_integral: return "NonIntegral";
  case errc::non_integral_multiplicity: return "NonIntegralMultiplicity";
  case errc::closed_form_mismatch: return "ClosedFormMismatch";
  case errc::insufficient_data: return "InsufficientData";
  case errc::not_irreducible: return "NotIrreducible";
  case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
  {
  }

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

} // namespace rsw
