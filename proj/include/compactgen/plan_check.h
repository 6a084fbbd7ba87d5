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

// Re-verifies a TextPlan against the planning constraints without trusting
// whichever generator produced it.

#ifndef COMPACTGEN_PLAN_CHECK_H_
#define COMPACTGEN_PLAN_CHECK_H_

#include <optional>
#include <string>
#include <vector>

#include "compactgen/fact_model.h"
#include "compactgen/text_plan.h"

namespace compactgen {

struct PlanLimits {
  // Maximum distinct elements per bucket.
  std::optional<int> b_max;
  // Maximum element words per bucket.
  std::optional<int> w_max;
  // Maximum number of buckets.
  std::optional<int> m;
};

// One message per violated condition; empty when the plan is consistent:
// every sentence fact appears exactly once with a valid plan, zero-importance
// facts never get a sentence, buckets are non-empty, section-pure and within
// the caps, a subject name is present and is a candidate of the target, and
// name-expressed facts are expressed by that name and have no sentence.
std::vector<std::string> check_plan(const TextPlan& plan, const FactBase& base,
                                    const PlanLimits& limits);

}  // namespace compactgen

#endif  // COMPACTGEN_PLAN_CHECK_H_
