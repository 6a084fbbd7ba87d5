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

#include "compactgen/text_plan.h"

#include "compactgen/element_algebra.h"

namespace compactgen {

std::set<int> sentence_facts(const TextPlan& plan) {
  std::set<int> out;
  for (const Bucket& bucket : plan.buckets) {
    for (const PlannedFact& pf : bucket) out.insert(pf.fact_id);
  }
  return out;
}

std::set<int> reported_facts(const TextPlan& plan, const FactBase& base) {
  std::set<int> out = sentence_facts(plan);
  for (int id : plan.name_expressed) {
    if (base.fact(id).importance > 0) out.insert(id);
  }
  return out;
}

int estimate_length(const TextPlan& plan, const FactBase& base, LengthMetric metric) {
  int total = 0;
  for (const Bucket& bucket : plan.buckets) {
    std::vector<ElementSet> sets;
    for (const PlannedFact& pf : bucket) {
      const Fact& fact = base.fact(pf.fact_id);
      sets.push_back(extract_elements(base.plans_for(fact).at(pf.plan_id), fact));
    }
    const ElementSet merged = distinct_union(sets);
    if (metric == LengthMetric::kElements) {
      total += static_cast<int>(merged.size());
    } else {
      for (const auto& [key, element] : merged) total += element_word_length(element, base);
    }
  }
  if (metric == LengthMetric::kWords && plan.subject_name) {
    total += plan.subject_name->word_length;
  }
  return total;
}

}  // namespace compactgen
