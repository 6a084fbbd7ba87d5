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

// Surface realization of a TextPlan: ordering, aggregation of each bucket
// into one sentence, referring expressions and word counting.

#ifndef COMPACTGEN_REALIZATION_H_
#define COMPACTGEN_REALIZATION_H_

#include <string>
#include <vector>

#include "compactgen/fact_model.h"
#include "compactgen/text_plan.h"

namespace compactgen {

// Buckets sorted by (section order, smallest order key), where a section's
// order is the smallest order key of its facts in the base; facts within a
// bucket by order key. Stable.
TextPlan order(const TextPlan& plan, const FactBase& base);

enum class AggregationRule {
  kSingle,
  // Shared subject and verb: complements merged.
  kSharedVerb,
  // Shared subject: verb phrases joined.
  kSharedSubject,
  // Clauses joined with "and".
  kClauseConjunction,
};

struct AggregatedSentence {
  // Tokens following the subject reference, without the final period. For
  // kClauseConjunction the subject reference of every clause after the first
  // is already resolved to `later_subject`.
  std::vector<std::string> predicate;
  // False when the first clause does not start with the subject; then the
  // subject reference is embedded in `predicate` as the placeholder token
  // kSubjectPlaceholder.
  bool subject_first = true;
  AggregationRule rule = AggregationRule::kSingle;
};

inline constexpr const char* kSubjectPlaceholder = "\x01S";

// Rule cascade over the ordered group: facts whose plans start with the
// subject followed by a verb share one subject; equal verbs merge their
// complements, different verbs are joined as verb phrases (a shared leading
// auxiliary is said once); any other plan becomes a separate clause joined
// with "and" and referring to the subject as `later_subject`.
AggregatedSentence aggregate(const Bucket& group, const FactBase& base,
                             const std::string& later_subject);

struct RealizedText {
  std::string text;
  std::vector<std::string> sentences;
  int words = 0;
};

// Noun phrase for a subject name. Demonstrative noun phrases append the
// ancestor's shortest name.
std::vector<std::string> name_tokens(const NLName& name, const FactBase& base);

// One sentence per bucket, in order(). The first sentence refers to the
// subject by its name, later ones by the base's pronoun. Words are
// whitespace-separated tokens.
RealizedText realize(const TextPlan& plan, const FactBase& base);

int count_words(const std::string& text);

}  // namespace compactgen

#endif  // COMPACTGEN_REALIZATION_H_
