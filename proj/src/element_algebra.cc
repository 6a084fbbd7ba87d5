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

#include "compactgen/element_algebra.h"

#include <algorithm>
#include <stdexcept>

namespace compactgen {
namespace {

// Length-prefixed field so that no token content can collide with a separator.
void append_field(std::string& out, const std::string& field) {
  out += std::to_string(field.size());
  out += ':';
  out += field;
}

void append_object(std::string& out, const ObjectSpec& object) {
  switch (object.kind) {
    case ObjectKind::kSingle: out += 's'; break;
    case ObjectKind::kConjunction: out += 'c'; break;
    case ObjectKind::kDisjunction: out += 'd'; break;
  }
  out += std::to_string(object.members.size());
  for (const ObjectMember& m : object.members) {
    if (m.is_literal()) {
      out += 'L';
      out += std::to_string(m.literal.size());
      for (const std::string& token : m.literal) append_field(out, token);
    } else {
      out += 'E';
      append_field(out, m.entity);
    }
  }
}

}  // namespace

std::string canonical_key(const Slot& slot, const Fact& fact) {
  std::string key;
  switch (slot.kind) {
    case SlotKind::kOwnerRef:
      key = "S|";
      append_field(key, fact.subject);
      return key;
    case SlotKind::kFillerRef:
      key = "O|";
      append_object(key, fact.object);
      return key;
    case SlotKind::kVerb: key = "V|"; break;
    case SlotKind::kNounOrAdjective: key = "N|"; break;
    case SlotKind::kPreposition: key = "P|"; break;
    case SlotKind::kFixedString: key = "F|"; break;
  }
  key += std::to_string(slot.surface.size());
  for (const std::string& token : slot.surface) append_field(key, token);
  key += '|';
  // std::map iterates features in sorted order.
  for (const auto& [name, value] : slot.features) {
    append_field(key, name);
    append_field(key, value);
  }
  return key;
}

ElementSet extract_elements(const SentencePlan& plan, const Fact& fact) {
  if (plan.relation != fact.plan_key()) {
    throw std::invalid_argument("plan for \"" + plan.relation + "\" cannot express fact " +
                                std::to_string(fact.id) + " (\"" + fact.plan_key() + "\")");
  }
  ElementSet out;
  for (const Slot& slot : plan.slots) {
    Element e;
    e.kind = slot.kind;
    e.key = canonical_key(slot, fact);
    if (slot.kind == SlotKind::kOwnerRef) {
      e.owner = fact.subject;
    } else if (slot.kind == SlotKind::kFillerRef) {
      e.filler = fact.object;
    } else {
      e.surface = slot.surface;
    }
    out.emplace(e.key, std::move(e));
  }
  return out;
}

ElementSet distinct_union(std::span<const ElementSet> sets) {
  ElementSet out;
  for (const ElementSet& set : sets) out.insert(set.begin(), set.end());
  return out;
}

ElementSet distinct_union(const ElementSet& a, const ElementSet& b) {
  const ElementSet both[] = {a, b};
  return distinct_union(both);
}

const NLName& shortest_name(const EntityId& entity, const FactBase& base) {
  auto it = base.names.find(entity);
  const NLName* best = nullptr;
  if (it != base.names.end()) {
    for (const NLName& name : it->second) {
      if (name.variant != NameVariant::kName) continue;
      if (best == nullptr || name.word_length < best->word_length ||
          (name.word_length == best->word_length && name.name_id < best->name_id)) {
        best = &name;
      }
    }
  }
  if (best == nullptr) throw std::out_of_range("no name registered for \"" + entity + "\"");
  return *best;
}

int object_word_length(const ObjectSpec& object, const FactBase& base) {
  int total = 0;
  for (const ObjectMember& m : object.members) {
    total += m.is_literal() ? static_cast<int>(m.literal.size())
                            : shortest_name(m.entity, base).word_length;
  }
  if (object.members.size() >= 2) total += 1;
  return total;
}

int element_word_length(const Element& element, const FactBase& base) {
  switch (element.kind) {
    case SlotKind::kOwnerRef:
      return 1;
    case SlotKind::kFillerRef:
      return object_word_length(*element.filler, base);
    default:
      return static_cast<int>(element.surface.size());
  }
}

ElementCatalog::ElementCatalog(const FactBase& base, std::span<const int> fact_ids)
    : fact_ids_(fact_ids.begin(), fact_ids.end()) {
  for (int id : fact_ids_) {
    const Fact& fact = base.fact(id);
    const std::vector<SentencePlan>& plans = base.plans_for(fact);
    std::vector<std::vector<int>>& per_plan = plan_elements_[id];
    for (size_t k = 0; k < plans.size(); ++k) {
      std::vector<int> ids;
      for (auto& [key, element] : extract_elements(plans[k], fact)) {
        auto [it, inserted] = index_.emplace(key, static_cast<int>(elements_.size()));
        if (inserted) {
          word_lengths_.push_back(element_word_length(element, base));
          elements_.push_back(element);
          plans_with_.emplace_back();
        }
        ids.push_back(it->second);
        plans_with_[it->second].emplace_back(id, static_cast<int>(k));
      }
      std::sort(ids.begin(), ids.end());
      per_plan.push_back(std::move(ids));
    }
  }
}

std::optional<int> ElementCatalog::find(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<int>& ElementCatalog::plan_elements(int fact_id, int k) const {
  return plan_elements_.at(fact_id).at(k);
}

int ElementCatalog::num_plans(int fact_id) const {
  return static_cast<int>(plan_elements_.at(fact_id).size());
}

int ElementCatalog::plan_words(int fact_id, int k) const {
  int words = 0;
  for (int t : plan_elements(fact_id, k)) words += word_lengths_[t];
  return words;
}

}  // namespace compactgen
