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

#include "compactgen/plan_check.h"

#include <map>
#include <set>

#include "compactgen/element_algebra.h"

namespace compactgen {

std::vector<std::string> check_plan(const TextPlan& plan, const FactBase& base,
                                    const PlanLimits& limits) {
  std::vector<std::string> out;
  auto report = [&](std::string message) { out.push_back(std::move(message)); };

  if (limits.m && static_cast<int>(plan.buckets.size()) > *limits.m) {
    report("more buckets than allowed: " + std::to_string(plan.buckets.size()));
  }
  std::map<int, int> occurrences;
  for (size_t j = 0; j < plan.buckets.size(); ++j) {
    const Bucket& bucket = plan.buckets[j];
    const std::string where = "bucket " + std::to_string(j);
    if (bucket.empty()) {
      report(where + " is empty");
      continue;
    }
    std::set<std::string> sections;
    std::vector<ElementSet> sets;
    bool resolvable = true;
    for (const PlannedFact& pf : bucket) {
      if (pf.fact_id < 1 || pf.fact_id > base.num_facts()) {
        report(where + " names unknown fact " + std::to_string(pf.fact_id));
        resolvable = false;
        continue;
      }
      const Fact& fact = base.fact(pf.fact_id);
      ++occurrences[pf.fact_id];
      sections.insert(fact.section);
      if (fact.importance == 0) {
        report("zero-importance fact " + std::to_string(fact.id) + " has a sentence");
      }
      const auto it = base.plans.find(fact.plan_key());
      if (it == base.plans.end() || pf.plan_id < 0 ||
          pf.plan_id >= static_cast<int>(it->second.size())) {
        report("fact " + std::to_string(fact.id) + " uses unknown plan " +
               std::to_string(pf.plan_id));
        resolvable = false;
        continue;
      }
      sets.push_back(extract_elements(it->second[pf.plan_id], fact));
    }
    if (sections.size() > 1) report(where + " mixes topical sections");
    if (!resolvable) continue;
    const ElementSet merged = distinct_union(sets);
    if (limits.b_max && static_cast<int>(merged.size()) > *limits.b_max) {
      report(where + " has " + std::to_string(merged.size()) + " distinct elements, cap " +
             std::to_string(*limits.b_max));
    }
    if (limits.w_max) {
      int words = 0;
      for (const auto& [key, element] : merged) words += element_word_length(element, base);
      if (words > *limits.w_max) {
        report(where + " has " + std::to_string(words) + " element words, cap " +
               std::to_string(*limits.w_max));
      }
    }
  }
  for (const auto& [id, count] : occurrences) {
    if (count != 1) {
      report("fact " + std::to_string(id) + " has " + std::to_string(count) + " sentences");
    }
  }

  if (!plan.subject_name) {
    report("no subject name");
  } else {
    const NLName& name = *plan.subject_name;
    bool candidate = false;
    for (const NLName& c : subject_candidates(base)) {
      if (c.variant == name.variant && c.surface == name.surface && c.ancestor == name.ancestor &&
          c.expressed_facts == name.expressed_facts) {
        candidate = true;
      }
    }
    if (!candidate) report("subject name is not a candidate of the target");
    for (int id : plan.name_expressed) {
      if (!name.expressed_facts.contains(id)) {
        report("fact " + std::to_string(id) + " is not expressed by the subject name");
      }
    }
  }
  for (int id : plan.name_expressed) {
    if (occurrences.contains(id)) {
      report("fact " + std::to_string(id) + " is both name-expressed and in a sentence");
    }
  }
  return out;
}

}  // namespace compactgen
