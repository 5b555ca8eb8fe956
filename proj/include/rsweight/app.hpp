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

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "io.hpp"
#include "verify.hpp"

namespace rsw::app {

enum exit_code : int { ok = 0, verification_failed = 1, usage = 2, cap_exceeded = 3 };

/// One invocation, from command-line flags or a JSON job file.
struct JobSpec {
  std::string command;
  std::string tuples;
  std::string n = "1..16";
  std::string context = "rs";
  std::string method = "oracle";
  std::string suite = "all";
  unsigned t_max = 6;
  unsigned e_max = 9;
  std::optional<unsigned> cap_n;
  std::string cache_dir;
  std::string out;
};

inline JobSpec job_from_json(const io::json& j)
{
  JobSpec s;
  auto str = [&](const char* k, std::string& v) {
    if (j.contains(k))
      v = j.at(k).is_string() ? j.at(k).get<std::string>() : j.at(k).dump();
  };
  str("command", s.command);
  str("tuples", s.tuples);
  str("n", s.n);
  str("context", s.context);
  str("method", s.method);
  str("suite", s.suite);
  str("cache_dir", s.cache_dir);
  str("out", s.out);
  if (j.contains("t_max"))
    s.t_max = j.at("t_max").get<unsigned>();
  if (j.contains("e_max"))
    s.e_max = j.at("e_max").get<unsigned>();
  if (j.contains("cap_n"))
    s.cap_n = j.at("cap_n").get<unsigned>();
  return s;
}

/// "1..16", "10000" or a comma list of either.
inline std::vector<unsigned> parse_range(const std::string& text)
{
  std::vector<unsigned> out;
  auto num = [&](const std::string& s) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || s.empty() || v == 0 || v > 1000000)
      throw error(errc::parse_error, "bad n value \"" + s + "\"");
    return static_cast<unsigned>(v);
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find(',', start);
    if (stop == std::string::npos)
      stop = text.size();
    std::string part = text.substr(start, stop - start);
    auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(num(part));
    } else {
      unsigned lo = num(part.substr(0, dots)), hi = num(part.substr(dots + 2));
      if (lo > hi)
        throw error(errc::parse_error, "empty n range \"" + part + "\"");
      for (unsigned n = lo; n <= hi; ++n)
        out.push_back(n);
    }
    start = stop + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::string cache_dir(const JobSpec& job)
{
  if (const char* env = std::getenv("RSWEIGHT_CACHE"); env && *env)
    return env;
  return job.cache_dir;
}

namespace detail {

inline Provenance method_provenance(const std::string& m)
{
  if (m == "oracle")
    return Provenance::oracle;
  if (m == "sft")
    return Provenance::sft;
  if (m == "formula")
    return Provenance::formula;
  if (m == "recurrence")
    return Provenance::recurrence;
  throw error(errc::parse_error, "unknown method \"" + m + "\"");
}

inline WeightSequence rs_weights(const TupleCollection& c, const std::vector<unsigned>& ns, Provenance m,
                                 const JobSpec& job, io::Caches& caches)
{
  WeightSequence w;
  w.family = c;
  w.context = Context::rs;
  unsigned top = ns.back();
  switch (m) {
  case Provenance::oracle:
    for (unsigned n : ns)
      w.entries[n] = {rs_weight_oracle(c, n, {job.cap_n.value_or(28), 1}), m};
    break;
  case Provenance::sft: {
    auto sys = build_transfer_system(build_local_rule(c));
    auto counts = periodic_counts(sys, top);
    for (unsigned n : ns)
      w.entries[n] = {pow2(n) - counts[n] / 2, m};
    break;
  }
  case Provenance::formula: {
    if (!c.is_quadratic())
      throw error(errc::non_quadratic, "method formula needs a quadratic collection");
    auto ts = c.quadratic_offsets();
    for (unsigned n : ns) {
      if (ts.size() == 1 && n >= 2 * ts[0] + 1)
        w.entries[n] = {quad_weight_formula(ts[0], n), m};
      else
        w.entries[n] = {rs_weight_quadratic(c, n).weight, m};
    }
    break;
  }
  case Provenance::recurrence: {
    auto values = factor_char_poly(caches.charpoly.get(c)).nonzero;
    auto sums = newton_power_sums(values, top);
    for (unsigned n : ns)
      w.entries[n] = {pow2(n) - sums[n] / 2, m};
    break;
  }
  }
  return w;
}

inline WeightSequence trace_weights(const TupleCollection& c, const std::vector<unsigned>& ns, Provenance m,
                                    const JobSpec& job, io::Caches& caches)
{
  WeightSequence w;
  w.family = c;
  w.context = Context::trace;
  unsigned cap = job.cap_n.value_or(24);
  switch (m) {
  case Provenance::oracle:
    for (unsigned n : ns)
      w.entries[n] = {trace_weight_oracle(c, n, {cap, 1, n <= cap ? &caches.irreducible.get(n) : nullptr}), m};
    break;
  case Provenance::sft:
    throw error(errc::ctx_mismatch, "method sft applies to the rs context only");
  case Provenance::formula:
    if (!c.is_quadratic())
      throw error(errc::non_quadratic, "method formula needs a quadratic collection");
    for (unsigned n : ns)
      w.entries[n] = {trace_weight_quadratic(c, n).weight, m};
    break;
  case Provenance::recurrence: {
    auto m_deg = static_cast<unsigned>(curve_degree(c) - 1);
    WeightSequence base;
    base.family = c;
    base.context = Context::trace;
    for (unsigned n = 1; n <= m_deg; ++n)
      base.entries[n] = {trace_weight_oracle(c, n, {cap, 1, n <= cap ? &caches.irreducible.get(n) : nullptr}),
                         Provenance::oracle};
    auto rep = recover_weil_poly(c, base);
    auto sums = newton_power_sums(rep.recovered, ns.back());
    for (unsigned n : ns)
      w.entries[n] = {(pow2(n) + sums[n]) / 2, m};
    break;
  }
  }
  return w;
}

inline int exit_for(const error& e)
{
  return e.code() == errc::cap_exceeded ? exit_code::cap_exceeded : exit_code::usage;
}

inline void write_outputs(const std::string& dir, const std::vector<std::pair<std::string, std::string>>& files)
{
  if (dir.empty())
    return;
  for (const auto& [name, text] : files)
    io::write_file(std::filesystem::path(dir) / name, text);
}

/// Left-aligned text table.
inline std::string table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows)
{
  std::vector<std::size_t> w(head.size());
  for (std::size_t i = 0; i < head.size(); ++i)
    w[i] = head[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size() && i < w.size(); ++i)
      w[i] = std::max(w[i], r[i].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += r[i];
      if (i + 1 < r.size())
        s += std::string(w[i] - r[i].size() + 2, ' ');
    }
    os << s << '\n';
  };
  line(head);
  std::vector<std::string> rule;
  for (auto x : w)
    rule.emplace_back(x, '-');
  line(rule);
  for (const auto& r : rows)
    line(r);
  return os.str();
}

inline std::string text_of(const io::json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

} // namespace detail

inline int cmd_weights(const JobSpec& job, std::ostream& out, std::ostream& err)
{
  try {
    auto c = TupleCollection::parse(job.tuples);
    if (c.empty())
      throw error(errc::empty_collection, "--tuples is required");
    auto ns = parse_range(job.n);
    auto m = detail::method_provenance(job.method);
    if (job.context != "rs" && job.context != "trace" && job.context != "both")
      throw error(errc::parse_error, "unknown context \"" + job.context + "\"");
    io::Caches caches(cache_dir(job));
    io::WeightTable t;
    t.family = c;
    if (job.context != "trace")
      t.rs = detail::rs_weights(c, ns, m, job, caches);
    if (job.context != "rs")
      t.trace = detail::trace_weights(c, ns, m, job, caches);
    caches.save();
    auto csv = io::weights_csv(t);
    detail::write_outputs(job.out, {{"weights.csv", csv}, {"weights.json", io::weights_json(t).dump(2) + "\n"}});
    out << csv;
    return exit_code::ok;
  } catch (const error& e) {
    err << "rsweight: " << e.what() << '\n';
    return detail::exit_for(e);
  }
}

inline int cmd_verify(const JobSpec& job, std::ostream& out, std::ostream& err)
{
  try {
    VerifyOptions opt;
    opt.t_max = job.t_max;
    opt.e_max = job.e_max;
    if (job.cap_n)
      opt.n_max = *job.cap_n;
    io::Caches caches(cache_dir(job));
    auto r = run_suites(job.suite, opt, caches);
    caches.save();
    for (const auto& c : r.claims) {
      const char* tag = c.pass ? "PASS" : (c.asserted ? "FAIL" : "INFO");
      out << tag << "  " << c.claim << "  " << c.params.dump() << '\n';
    }
    auto summary = r.claims_json();
    out << "summary " << summary["summary"].dump() << '\n';
    io::json report = {{"suite", job.suite},
                       {"options", {{"t_max", opt.t_max}, {"e_max", opt.e_max}, {"n_max", opt.n_max}}},
                       {"pass", r.pass()}};
    report.update(summary);
    detail::write_outputs(job.out, {{"verify.json", report.dump(2) + "\n"},
                                    {"artifacts.json", r.artifacts.dump(2) + "\n"}});
    return r.pass() ? exit_code::ok : exit_code::verification_failed;
  } catch (const error& e) {
    err << "rsweight: " << e.what() << '\n';
    return detail::exit_for(e);
  }
}

inline int cmd_report(const JobSpec& job, std::ostream& out, std::ostream& err)
{
  std::filesystem::path dir = job.out.empty() ? "." : job.out;
  auto art_text = io::read_file(dir / "artifacts.json");
  auto ver_text = io::read_file(dir / "verify.json");
  if (!art_text || !ver_text) {
    err << "rsweight: no verify artifacts in " << dir.string() << " (run verify --out " << dir.string()
        << " first)\n";
    return exit_code::usage;
  }
  io::json art, ver;
  try {
    art = io::json::parse(*art_text);
    ver = io::json::parse(*ver_text);
  } catch (const std::exception& e) {
    err << "rsweight: unreadable artifacts: " << e.what() << '\n';
    return exit_code::usage;
  }
  using detail::text_of;
  if (art.contains("zeta")) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& z : art["zeta"])
      rows.push_back({text_of(z["family"]), text_of(z["vertices"]), text_of(z["zeta"]), text_of(z["char_values"])});
    out << "Zeta functions\n" << detail::table({"family", "vertices", "zeta", "char values"}, rows) << '\n';
  }
  if (art.contains("char_polys")) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& z : art["char_polys"])
      rows.push_back({text_of(z["t"]), text_of(z["degree"]), text_of(z["factored"])});
    out << "Characteristic polynomials of R(t)\n" << detail::table({"t", "degree", "factored"}, rows) << '\n';
  }
  if (art.contains("deltas")) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& z : art["deltas"])
      for (const auto& g : z["groups"])
        rows.push_back({text_of(z["t"]), text_of(z["nu"]), text_of(z["m"]), text_of(g["order"]),
                        text_of(g["multiplicity"])});
    out << "Delta multisets (sqrt 2 times the roots of unity of each order)\n"
        << detail::table({"t", "nu", "m", "order", "multiplicity"}, rows) << '\n';
  }
  if (art.contains("weil")) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& z : art["weil"])
      rows.push_back({text_of(z["family"]), text_of(z["e"]), text_of(z["g"]), text_of(z["case"]),
                      text_of(z["text"]), text_of(z["delta_count"]), z["moduli_ok"].get<bool>() ? "yes" : "no"});
    out << "Weil polynomials\n"
        << detail::table({"family", "e", "g", "case", "recovered", "delta count", "|root| = sqrt 2"}, rows) << '\n';
  }
  std::vector<std::vector<std::string>> failed;
  for (const auto& c : ver["claims"])
    if (!c["pass"].get<bool>())
      failed.push_back({c["asserted"].get<bool>() ? "FAIL" : "INFO", text_of(c["claim"]), c["params"].dump()});
  out << "Claims: " << ver["summary"].dump() << '\n';
  if (!failed.empty())
    out << detail::table({"status", "claim", "params"}, failed);
  return exit_code::ok;
}

inline int cmd_sft(const JobSpec& job, std::ostream& out, std::ostream& err)
{
  try {
    auto c = TupleCollection::parse(job.tuples);
    auto sys = build_transfer_system(build_local_rule(c));
    auto ns = parse_range(job.n);
    auto counts = periodic_counts(sys, ns.back());
    io::json j;
    j["graph"] = io::graph_json(sys);
    auto den = zeta_denominator(sys);
    j["zeta_denominator"] = io::poly_json(den);
    j["zeta"] = io::zeta_text(den);
    j["char_values"] = io::char_values_json(char_values_from_sft(sys));
    io::json pc = io::json::array();
    for (unsigned n : ns)
      pc.push_back({{"n", n}, {"count", to_string(counts[n])}});
    j["periodic_counts"] = std::move(pc);
    auto text = j.dump(2) + "\n";
    detail::write_outputs(job.out, {{"sft.json", text}});
    out << text;
    return exit_code::ok;
  } catch (const error& e) {
    err << "rsweight: " << e.what() << '\n';
    return detail::exit_for(e);
  }
}

inline int run(const JobSpec& job, std::ostream& out, std::ostream& err)
{
  if (job.command == "weights")
    return cmd_weights(job, out, err);
  if (job.command == "verify")
    return cmd_verify(job, out, err);
  if (job.command == "report")
    return cmd_report(job, out, err);
  if (job.command == "sft")
    return cmd_sft(job, out, err);
  err << "rsweight: unknown command \"" << job.command << "\"\n";
  return exit_code::usage;
}

} // namespace rsw::app
