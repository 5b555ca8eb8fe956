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

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bigint.hpp"
#include "error.hpp"
#include "gf2_poly.hpp"
#include "int_algebra.hpp"
#include "int_poly.hpp"
#include "rs_core.hpp"
#include "sft.hpp"

namespace rsw::io {

using json = nlohmann::ordered_json;

/// Coefficients as decimal strings, constant term first.
inline json poly_json(const IntPoly& p)
{
  json a = json::array();
  for (const auto& c : p.coeffs())
    a.push_back(to_string(c));
  return a;
}

inline IntPoly poly_from_json(const json& j)
{
  std::vector<BigInt> c;
  for (const auto& v : j)
    c.emplace_back(v.get<std::string>());
  return IntPoly(std::move(c));
}

inline json char_values_json(const CharValueSet& s)
{
  json a = json::array();
  for (const auto& f : s.factors())
    a.push_back({{"factor", poly_json(f.poly)}, {"text", f.poly.compact()}, {"multiplicity", f.multiplicity}});
  return a;
}

/// "1 - 2s - 2s^2 + 4s^3"
inline std::string s_poly_text(const IntPoly& p)
{
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const BigInt& c = p.coeffs()[k];
    if (c == 0)
      continue;
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (out.empty())
      out = c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (a != 1 || k == 0)
      out += to_string(a);
    if (k >= 1)
      out += "s";
    if (k >= 2)
      out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

inline std::string zeta_text(const IntPoly& denominator) { return "1/(" + s_poly_text(denominator) + ")"; }

/// Weights of one family in the rs context, the trace context or both.
struct WeightTable {
  TupleCollection family;
  std::optional<WeightSequence> rs;
  std::optional<WeightSequence> trace;

  std::vector<unsigned> indices() const
  {
    std::set<unsigned> s;
    for (const auto* w : {&rs, &trace})
      if (*w)
        for (const auto& [n, e] : (*w)->entries)
          s.insert(n);
    return {s.begin(), s.end()};
  }
};

namespace detail {

inline std::pair<std::string, std::string> cell(const std::optional<WeightSequence>& w, unsigned n)
{
  auto it = w->entries.find(n);
  if (it == w->entries.end())
    return {"", ""};
  return {to_string(it->second.weight), provenance_name(it->second.provenance)};
}

} // namespace detail

inline std::string weights_csv(const WeightTable& t)
{
  std::ostringstream os;
  bool both = t.rs && t.trace;
  if (both)
    os << "n,rs_weight,rs_provenance,trace_weight,trace_provenance\n";
  else
    os << "n,weight,provenance\n";
  for (unsigned n : t.indices()) {
    os << n;
    for (const auto* w : {&t.rs, &t.trace})
      if (*w) {
        auto [v, p] = detail::cell(*w, n);
        os << ',' << v << ',' << p;
      }
    os << '\n';
  }
  return os.str();
}

inline json weights_json(const WeightTable& t)
{
  bool both = t.rs && t.trace;
  json j;
  j["family"] = t.family.str();
  j["context"] = both ? "both" : (t.rs ? "rs" : "trace");
  json rows = json::array();
  for (unsigned n : t.indices()) {
    json r;
    r["n"] = n;
    if (both) {
      auto [rv, rp] = detail::cell(t.rs, n);
      auto [tv, tp] = detail::cell(t.trace, n);
      r["rs_weight"] = rv;
      r["rs_provenance"] = rp;
      r["trace_weight"] = tv;
      r["trace_provenance"] = tp;
    } else {
      auto [v, p] = detail::cell(t.rs ? t.rs : t.trace, n);
      r["weight"] = v;
      r["provenance"] = p;
    }
    rows.push_back(std::move(r));
  }
  j["weights"] = std::move(rows);
  return j;
}

inline json graph_json(const TransferSystem& t)
{
  json j;
  j["family"] = t.family.str();
  j["presentation"] = t.kind == Presentation::de_bruijn ? "de_bruijn" : "compact";
  j["window_len"] = t.window_len;
  j["vertex_count"] = t.vertex_count();
  j["edge_count"] = t.edge_count();
  json vs = json::array();
  for (std::size_t v = 0; v < t.vertex_count(); ++v)
    vs.push_back({{"id", v}, {"label", t.label(v)}, {"out", t.out[v]}});
  j["vertices"] = std::move(vs);
  return j;
}

inline std::optional<std::string> read_file(const std::filesystem::path& p)
{
  std::ifstream in(p, std::ios::binary);
  if (!in)
    return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& text)
{
  if (p.has_parent_path())
    std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot write " + p.string());
  out << text;
}

/// Field moduli, one line per degree: n:<hex, bit 0 = constant term>.
/// Entries that fail the irreducibility test are recomputed.
class IrreducibleCache {
public:
  IrreducibleCache() = default;
  explicit IrreducibleCache(std::filesystem::path dir) : dir_(std::move(dir)) { load(); }

  const Gf2Poly& get(unsigned n)
  {
    auto it = polys_.find(n);
    if (it != polys_.end())
      return it->second;
    dirty_ = true;
    return polys_.emplace(n, min_irreducible(n)).first->second;
  }

  void save()
  {
    if (dir_.empty() || !dirty_)
      return;
    std::ostringstream os;
    for (const auto& [n, p] : polys_)
      os << n << ':' << p.to_hex() << '\n';
    write_file(file(), os.str());
    dirty_ = false;
  }

  std::filesystem::path file() const { return dir_ / "irreducible.txt"; }

private:
  void load()
  {
    auto text = read_file(file());
    if (!text)
      return;
    std::istringstream is(*text);
    std::string line;
    while (std::getline(is, line)) {
      auto colon = line.find(':');
      if (colon == std::string::npos)
        continue;
      try {
        unsigned n = static_cast<unsigned>(std::stoul(line.substr(0, colon)));
        auto p = Gf2Poly::from_hex(line.substr(colon + 1));
        if (p.degree() == static_cast<long>(n) && is_irreducible_rabin(p))
          polys_.emplace(n, std::move(p));
        else
          dirty_ = true;
      } catch (const std::exception&) {
        dirty_ = true;
      }
    }
  }

  std::filesystem::path dir_;
  std::map<unsigned, Gf2Poly> polys_;
  bool dirty_ = false;
};

/// Characteristic polynomials of transfer systems keyed by family.
class CharPolyCache {
public:
  CharPolyCache() = default;
  explicit CharPolyCache(std::filesystem::path dir) : dir_(std::move(dir))
  {
    auto text = read_file(file());
    if (!text)
      return;
    try {
      auto j = json::parse(*text);
      for (auto it = j.begin(); it != j.end(); ++it)
        polys_.emplace(it.key(), poly_from_json(it.value()));
    } catch (const std::exception&) {
      polys_.clear();
      dirty_ = true;
    }
  }

  const IntPoly& get(const TupleCollection& c)
  {
    auto key = c.str();
    auto it = polys_.find(key);
    if (it != polys_.end())
      return it->second;
    dirty_ = true;
    auto sys = build_compact_system(c);
    return polys_.emplace(key, transfer_char_poly(sys)).first->second;
  }

  void save()
  {
    if (dir_.empty() || !dirty_)
      return;
    json j = json::object();
    for (const auto& [k, p] : polys_)
      j[k] = poly_json(p);
    write_file(file(), j.dump(1) + "\n");
    dirty_ = false;
  }

  std::filesystem::path file() const { return dir_ / "charpoly.json"; }

private:
  std::filesystem::path dir_;
  std::map<std::string, IntPoly> polys_;
  bool dirty_ = false;
};

struct Caches {
  IrreducibleCache irreducible;
  CharPolyCache charpoly;

  Caches() = default;
  explicit Caches(const std::filesystem::path& dir) : irreducible(dir), charpoly(dir) {}

  void save()
  {
    irreducible.save();
    charpoly.save();
  }
};

} // namespace rsw::io
