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

// The planners' common output: a subject name, ordered groups of facts (one
// aggregated sentence per group) with their chosen sentence plans, and the
// facts conveyed by the subject name alone.

#ifndef COMPACTGEN_TEXT_PLAN_H_
#define COMPACTGEN_TEXT_PLAN_H_

#include <optional>
#include <set>
#include <vector>

#include "compactgen/bilp.h"
#include "compactgen/fact_model.h"
#include "compactgen/rational.h"

namespace compactgen {

struct PlannedFact {
  int fact_id = 0;
  int plan_id = 0;

  bool operator==(const PlannedFact&) const = default;
};

using Bucket = std::vector<PlannedFact>;

struct TextPlan {
  std::optional<NLName> subject_name;
  // Non-empty groups only.
  std::vector<Bucket> buckets;
  std::set<int> name_expressed;
  Rational objective_value;
  SolveStatus status = SolveStatus::kOptimal;
  SolveStats stats;
};

enum class LengthMetric { kElements, kWords };

// Facts that appear in some bucket.
std::set<int> sentence_facts(const TextPlan& plan);

// Facts the text conveys: sentence facts plus name-expressed facts with
// non-zero importance.
std::set<int> reported_facts(const TextPlan& plan, const FactBase& base);

// Estimated text length. kElements: sum over buckets of the distinct element
// count. kWords: sum over buckets of the word lengths of the distinct
// elements, plus the subject name's length when there is one.
int estimate_length(const TextPlan& plan, const FactBase& base, LengthMetric metric);

}  // namespace compactgen

#endif  // COMPACTGEN_TEXT_PLAN_H_
