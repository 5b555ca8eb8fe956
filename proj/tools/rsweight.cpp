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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rsweight/app.hpp"

namespace {

void add_common(CLI::App* sub, rsw::app::JobSpec& job)
{
  sub->add_option("--tuples", job.tuples, "offset tuples, e.g. \"0,1;0,1,2\"");
  sub->add_option("--n", job.n, "n values: 1..16, 10000 or a comma list")->capture_default_str();
  sub->add_option("--context", job.context, "rs, trace or both")->capture_default_str();
  sub->add_option("--method", job.method, "oracle, sft, formula or recurrence")->capture_default_str();
  sub->add_option("--suite", job.suite, "sft, quadratic, weil or all")->capture_default_str();
  sub->add_option("--t-max", job.t_max, "largest t for R(t) checks")->capture_default_str();
  sub->add_option("--e-max", job.e_max, "largest curve degree for Weil checks")->capture_default_str();
  sub->add_option("--cap-n", job.cap_n, "enumeration cap (weights) or sweep length (verify)");
  sub->add_option("--cache-dir", job.cache_dir, "persistent cache directory (RSWEIGHT_CACHE overrides)");
  sub->add_option("--out", job.out, "output directory");
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact weights of rotation symmetric and trace Boolean functions"};
  app.require_subcommand(0, 1);
  std::string job_file;
  app.add_option("--json", job_file, "JSON job file with the same keys as the flags")->check(CLI::ExistingFile);

  rsw::app::JobSpec job;
  for (const char* name : {"weights", "verify", "report", "sft"}) {
    auto* sub = app.add_subcommand(name);
    add_common(sub, job);
    sub->callback([&job, name] { job.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : rsw::app::exit_code::usage;
  }

  try {
    if (!job_file.empty()) {
      if (!job.command.empty()) {
        std::cerr << "rsweight: --json replaces the subcommand and its flags\n";
        return rsw::app::exit_code::usage;
      }
      std::ifstream in(job_file);
      job = rsw::app::job_from_json(rsw::io::json::parse(in));
    }
    if (job.command.empty()) {
      std::cerr << app.help();
      return rsw::app::exit_code::usage;
    }
    return rsw::app::run(job, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "rsweight: " << e.what() << '\n';
    return rsw::app::exit_code::usage;
  }
}
