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
#include <charconv>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace rsw {

/// One offset tuple (0, a1, ..., a_{d-1}) with 0 < a1 < ... < a_{d-1}.
using OffsetTuple = std::vector<unsigned>;

/// A finite set of offset tuples defining a family of functions, one per n.
///
/// Tuples are kept sorted so that two collections built from the same set
/// compare equal. Every tuple starts at 0 and has at least two entries.
class TupleCollection {
public:
  TupleCollection() = default;

  explicit TupleCollection(std::vector<OffsetTuple> tuples) : tuples_(std::move(tuples))
  {
    std::set<OffsetTuple> seen;
    for (const auto& t : tuples_) {
      if (t.size() < 2)
        throw error(errc::invalid_collection, "tuple " + format_tuple(t) + " has fewer than two entries");
      if (t.front() != 0)
        throw error(errc::invalid_collection, "tuple " + format_tuple(t) + " does not start at 0");
      for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] <= t[i - 1])
          throw error(errc::invalid_collection, "tuple " + format_tuple(t) + " is not strictly increasing");
      if (!seen.insert(t).second)
        throw error(errc::invalid_collection, "duplicate tuple " + format_tuple(t));
    }
    std::sort(tuples_.begin(), tuples_.end());
  }

  /// Parses "0,1;0,1,2": tuples separated by ';', entries by ','.
  static TupleCollection parse(std::string_view text)
  {
    std::vector<OffsetTuple> tuples;
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    if (text.empty())
      return TupleCollection{};
    std::size_t start = 0;
    while (start <= text.size()) {
      auto stop = text.find(';', start);
      if (stop == std::string_view::npos)
        stop = text.size();
      auto part = trim(text.substr(start, stop - start));
      if (part.empty())
        throw error(errc::invalid_collection, "empty tuple in \"" + std::string(text) + "\"");
      OffsetTuple tup;
      std::size_t p = 0;
      while (p <= part.size()) {
        auto q = part.find(',', p);
        if (q == std::string_view::npos)
          q = part.size();
        auto tok = trim(part.substr(p, q - p));
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
          throw error(errc::invalid_collection, "bad entry \"" + std::string(tok) + "\"");
        tup.push_back(v);
        p = q + 1;
      }
      tuples.push_back(std::move(tup));
      start = stop + 1;
    }
    return TupleCollection(std::move(tuples));
  }

  const std::vector<OffsetTuple>& tuples() const noexcept { return tuples_; }
  bool empty() const noexcept { return tuples_.empty(); }
  std::size_t size() const noexcept { return tuples_.size(); }

  unsigned max_offset() const noexcept
  {
    unsigned m = 0;
    for (const auto& t : tuples_)
      m = std::max(m, t.back());
    return m;
  }

  /// Every tuple has exactly two entries (degree-2 monomials).
  bool is_quadratic() const noexcept
  {
    return std::all_of(tuples_.begin(), tuples_.end(), [](const auto& t) { return t.size() == 2; });
  }

  /// The offsets t of a quadratic collection {(0,t)}.
  std::vector<unsigned> quadratic_offsets() const
  {
    if (!is_quadratic())
      throw error(errc::non_quadratic, "collection " + str() + " has a tuple with d != 2");
    std::vector<unsigned> out;
    for (const auto& t : tuples_)
      out.push_back(t[1]);
    return out;
  }

  std::string str() const
  {
    std::string s;
    for (std::size_t i = 0; i < tuples_.size(); ++i) {
      if (i)
        s += ';';
      for (std::size_t j = 0; j < tuples_[i].size(); ++j) {
        if (j)
          s += ',';
        s += std::to_string(tuples_[i][j]);
      }
    }
    return s;
  }

  bool operator==(const TupleCollection&) const = default;

  static std::string format_tuple(const OffsetTuple& t)
  {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(t[i]);
    }
    return s + ")";
  }

private:
  std::vector<OffsetTuple> tuples_;
};

} // namespace rsw
