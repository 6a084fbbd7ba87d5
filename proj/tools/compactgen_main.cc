// Copyright 2026 The Compactgen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end of the experiment harness.
//
//   compactgen --mode ilp,pipeline --base a.json --base b.json
//       --lambda1 0:0.9:0.1 --facts 2,3,4 --out results.csv
//
// Exit status: 0 on success, 2 on invalid input, 3 when some solve ran out of
// time and its text is the best one found so far.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11/CLI11.hpp"
#include "compactgen/harness.h"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitDegraded = 3;

void write_or_print(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compact text generation from fact bases"};
  std::string modes;
  std::vector<std::string> base_paths;
  std::string lambda1 = "0.5";
  std::string facts = "3";
  std::string out_path;
  std::string dump_lp;
  std::string text_out;
  bool no_timing = false;
  compactgen::RunConfig cfg;

  app.add_option("--mode", modes,
                 "Comma-separated systems: ilp, ilp-extended, ilp-approx, ilp-approx-extended, "
                 "pipeline, pipeline-stoch, pipeline-short, pipeline-short-star, pipeline-beam")
      ->required();
  app.add_option("--base", base_paths, "Fact-base JSON file (repeatable)")->required();
  app.add_option("--lambda1", lambda1, "Planner grid: list a,b,c or range start:stop:step");
  app.add_option("--facts", facts, "Baseline fact-count grid M, same syntax");
  app.add_option("--m", cfg.m, "Buckets (sentences) for the planners");
  app.add_option("--bmax", cfg.b_max, "Distinct elements per sentence");
  app.add_option("--wmax", cfg.w_max, "Words per sentence");
  app.add_option("--beam", cfg.beam, "Baseline width K; K^4 trials");
  app.add_option("--seed", cfg.seed, "Baseline random seed");
  app.add_option("--timeout-ms", cfg.timeout_ms, "Time budget per solve");
  app.add_option("--out", out_path,
                 "CSV path (stdout when omitted); the fact-count grouping goes to <out>.grouped.csv");
  app.add_option("--dump-lp", dump_lp, "Directory for the exact models in LP format");
  app.add_option("--text-out", text_out, "Directory for the realized texts");
  app.add_flag("--no-timing", no_timing, "Report solve_ms as 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    cfg.modes = compactgen::parse_modes(modes);
    cfg.lambda1 = compactgen::parse_grid(lambda1);
    cfg.facts = compactgen::parse_grid(facts);
    cfg.timing = !no_timing;
    if (!dump_lp.empty()) cfg.dump_lp_dir = dump_lp;
    if (!text_out.empty()) cfg.text_out_dir = text_out;

    std::vector<compactgen::NamedBase> bases;
    for (const std::string& path : base_paths) {
      bases.push_back({std::filesystem::path(path).stem().string(),
                       compactgen::load_fact_base_file(path)});
    }
    const compactgen::Report report = compactgen::run(cfg, bases);
    write_or_print(out_path, compactgen::report_csv(report, cfg.timing));
    if (!out_path.empty() && out_path != "-") {
      write_or_print(out_path + ".grouped.csv", compactgen::grouped_csv(report));
    }
    if (report.degraded) {
      std::cerr << "warning: some solves hit the time budget\n";
      return kExitDegraded;
    }
    return 0;
  } catch (const compactgen::ValidationError& e) {
    std::cerr << "invalid fact base: " << e.what() << '\n';
    for (const auto& v : e.violations()) std::cerr << "  " << v.message << '\n';
    return kExitInvalid;
  } catch (const compactgen::ParseError& e) {
    std::cerr << "malformed fact base: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
