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

// Experiment runner behind the command-line tool: generates one text per
// (system, grid value, fact base), realizes it and reports facts-per-word
// statistics as CSV.

#ifndef COMPACTGEN_HARNESS_H_
#define COMPACTGEN_HARNESS_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "compactgen/fact_model.h"
#include "compactgen/joint_planner.h"
#include "compactgen/pipeline_baselines.h"
#include "compactgen/rational.h"

namespace compactgen {

enum class Mode {
  kIlp,
  kIlpExtended,
  kIlpApprox,
  kIlpApproxExtended,
  kPipeline,
  kPipelineStoch,
  kPipelineShort,
  kPipelineShortStar,
  kPipelineBeam,
};

const char* mode_name(Mode mode);

// True for the planner modes, whose grid is lambda1; baselines sweep M.
bool is_planner_mode(Mode mode);

// Bad command-line values: unknown modes, malformed grids.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Comma-separated mode names.
std::vector<Mode> parse_modes(const std::string& text);

struct GridValue {
  // As written on the command line; used verbatim in the CSV.
  std::string label;
  Rational value;
};

// Comma-separated numbers, or "start:stop:step" (inclusive, exact arithmetic).
std::vector<GridValue> parse_grid(const std::string& text);

struct RunConfig {
  std::vector<Mode> modes;
  std::vector<GridValue> lambda1 = parse_grid("0.5");
  std::vector<GridValue> facts = parse_grid("3");
  int m = 3;
  int b_max = 20;
  int w_max = 30;
  int beam = 2;
  std::uint64_t seed = 0;
  std::int64_t timeout_ms = 60000;
  // Reports solve_ms as 0 so that repeated runs are byte-identical.
  bool timing = true;
  std::optional<std::string> dump_lp_dir;
  std::optional<std::string> text_out_dir;
};

struct TextRecord {
  std::string system;
  std::string param;
  std::string target;
  int facts_reported = 0;
  int words = 0;
  double ratio = 0.0;
  double solve_ms = 0.0;
  SolveStatus status = SolveStatus::kOptimal;
  std::string text;
  TextPlan plan;
};

// One row per (system, grid value) over all bases.
struct GridAggregate {
  std::string system;
  std::string param;
  double avg_facts = 0.0;
  double avg_words = 0.0;
  // avg_facts / avg_words.
  double ratio = 0.0;
  double avg_ms = 0.0;
  double worst_ms = 0.0;
  SolveStatus status = SolveStatus::kOptimal;
};

// Texts of one system pooled over the grid and grouped by their number of
// reported facts. Within a group each target keeps its best-ratio text (its
// three best for the uniform pipeline, whose texts vary by trial).
struct FactGroup {
  std::string system;
  int facts_reported = 0;
  int texts = 0;
  double avg_words = 0.0;
  double ratio = 0.0;
};

struct Report {
  std::vector<TextRecord> texts;
  std::vector<GridAggregate> aggregates;
  std::vector<FactGroup> groups;
  // Some solve ran out of time.
  bool degraded = false;
};

struct NamedBase {
  std::string label;
  FactBase base;
};

// Texts in order system, grid value, base. Writes LP files and texts when the
// config names directories.
Report run(const RunConfig& cfg, const std::vector<NamedBase>& bases);

// Columns system,param,target,facts_reported,words,ratio,solve_ms,status;
// each (system, param) block ends with its aggregate row (target "*").
std::string report_csv(const Report& report, bool timing);

// Columns system,facts_reported,texts,avg_words,ratio.
std::string grouped_csv(const Report& report);

}  // namespace compactgen

#endif  // COMPACTGEN_HARNESS_H_
