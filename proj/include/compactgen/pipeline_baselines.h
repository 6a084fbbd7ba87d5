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

// Greedy pipeline generators: content selection, then lexicalization, then
// aggregation, each decided locally. Every generator builds T = K^4 candidate
// texts and keeps the one with the best estimated facts-per-length ratio
// (reported facts over distinct elements, or over words for the word-based
// variant); objective_value of the result holds that ratio.

#ifndef COMPACTGEN_PIPELINE_BASELINES_H_
#define COMPACTGEN_PIPELINE_BASELINES_H_

#include <cstdint>
#include <string>

#include "compactgen/fact_model.h"
#include "compactgen/text_plan.h"

namespace compactgen {

struct BaselineConfig {
  // Facts per text.
  int M = 3;
  // Beam width; T = K^4 trials.
  int K = 2;
  std::uint64_t seed = 0;
  int b_max = 20;
  int w_max = 30;
  // Simple sentences per aggregated sentence.
  int max_merge = 3;

  // Throws std::invalid_argument on non-positive counts.
  void validate() const;
  int trials() const { return K * K * K * K; }
};

enum class BaselineKind { kPipeline, kStoch, kShort, kShortStar, kBeam };

const char* baseline_name(BaselineKind kind);

// Length metric of a baseline's estimate and caps: words for kShortStar,
// distinct elements otherwise.
LengthMetric baseline_metric(BaselineKind kind);

// M most important facts (random ties), uniformly drawn plans per relation
// and subject name, section-wise greedy aggregation.
TextPlan pipeline(const FactBase& base, const BaselineConfig& cfg);

// Facts, plans and names drawn with probability proportional to
// 1/length; facts placed into buckets with weight 1 + shared elements.
TextPlan pipeline_stoch(const FactBase& base, const BaselineConfig& cfg);

// Shortest plan per relation and shortest subject name; equally important
// facts ranked by their shortest plan.
TextPlan pipeline_short(const FactBase& base, const BaselineConfig& cfg);

// Word-based variant: shortest plans in words, and the subject name that
// expresses the most available facts (ties to the shortest); facts that name
// expresses need no sentence.
TextPlan pipeline_short_star(const FactBase& base, const BaselineConfig& cfg);

// K single-substitution variants of the pipeline_short text along each of
// fact set, plans, subject name and bucket assignment; best of the K^4
// combinations. Variants do not depend on K, so larger K never does worse.
TextPlan pipeline_beam(const FactBase& base, const BaselineConfig& cfg);

TextPlan run_baseline(BaselineKind kind, const FactBase& base, const BaselineConfig& cfg);

}  // namespace compactgen

#endif  // COMPACTGEN_PIPELINE_BASELINES_H_
