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

// Elements: the unordered slots of a sentence plan together with the entities
// their references are bound to. Distinct-element counts estimate the length
// of an aggregated sentence; element word lengths refine that estimate.

#ifndef COMPACTGEN_ELEMENT_ALGEBRA_H_
#define COMPACTGEN_ELEMENT_ALGEBRA_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "compactgen/fact_model.h"

namespace compactgen {

struct Element {
  SlotKind kind = SlotKind::kFixedString;
  // Byte-exact canonical encoding; equal keys mean equal elements.
  std::string key;
  std::vector<std::string> surface;
  // Bound subject (owner references) or object (filler references).
  EntityId owner;
  std::optional<ObjectSpec> filler;

  bool operator==(const Element&) const = default;
};

// Distinct elements keyed by canonical key.
using ElementSet = std::map<std::string, Element>;

// Canonical key of `slot` once bound to `fact`. Reference keys carry only the
// bound entity, so an owner reference to S is the same element in every plan.
std::string canonical_key(const Slot& slot, const Fact& fact);

// B_ik: the distinct elements of `plan` bound to `fact`. Throws
// std::invalid_argument when the plan belongs to another relation.
ElementSet extract_elements(const SentencePlan& plan, const Fact& fact);

ElementSet distinct_union(std::span<const ElementSet> sets);
ElementSet distinct_union(const ElementSet& a, const ElementSet& b);

// Shortest name of `entity` (plain names only), ties to the lowest name_id.
// Throws std::out_of_range when the entity has no name.
const NLName& shortest_name(const EntityId& entity, const FactBase& base);

// Words produced by an object reference: the shortest name of a single
// entity, or for conjunctions/disjunctions the member lengths plus one word
// for the final connective (commas are free).
int object_word_length(const ObjectSpec& object, const FactBase& base);

// length(e): 1 for an owner reference (the subject's name is charged once per
// text), object_word_length for a filler reference, token count otherwise.
int element_word_length(const Element& element, const FactBase& base);

// Flat element universe over a chosen subset of facts: every (fact, plan)
// pair is mapped to the ids of its distinct elements.
class ElementCatalog {
 public:
  ElementCatalog() = default;
  ElementCatalog(const FactBase& base, std::span<const int> fact_ids);

  int num_elements() const { return static_cast<int>(elements_.size()); }
  const Element& element(int t) const { return elements_[t]; }
  int word_length(int t) const { return word_lengths_[t]; }
  std::optional<int> find(const std::string& key) const;

  // Element ids of plan k of fact `fact_id` (sorted ascending).
  const std::vector<int>& plan_elements(int fact_id, int k) const;
  int num_plans(int fact_id) const;
  // Sum of word lengths of the plan's distinct elements.
  int plan_words(int fact_id, int k) const;
  const std::vector<int>& fact_ids() const { return fact_ids_; }
  // Plans (fact id, plan id) whose element set contains element t.
  const std::vector<std::pair<int, int>>& plans_with(int t) const { return plans_with_[t]; }

 private:
  std::vector<int> fact_ids_;
  std::vector<Element> elements_;
  std::vector<int> word_lengths_;
  std::map<std::string, int> index_;
  std::map<int, std::vector<std::vector<int>>> plan_elements_;
  std::vector<std::vector<std::pair<int, int>>> plans_with_;
};

}  // namespace compactgen

#endif  // COMPACTGEN_ELEMENT_ALGEBRA_H_
