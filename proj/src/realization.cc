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

#include "compactgen/realization.h"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

#include "compactgen/element_algebra.h"

namespace compactgen {
namespace {

using Tokens = std::vector<std::string>;

void append(Tokens& out, const Tokens& more) { out.insert(out.end(), more.begin(), more.end()); }

// "a", "a and b", "a, b and c". Commas attach to the preceding token.
Tokens coordinate(const std::vector<Tokens>& items, const std::string& connective) {
  Tokens out;
  for (size_t p = 0; p < items.size(); ++p) {
    if (items[p].empty()) continue;
    if (!out.empty()) {
      if (p + 1 == items.size()) {
        out.push_back(connective);
      } else {
        out.back() += ',';
      }
    }
    append(out, items[p]);
  }
  return out;
}

Tokens object_tokens(const ObjectSpec& object, const FactBase& base) {
  std::vector<Tokens> parts;
  for (const ObjectMember& m : object.members) {
    parts.push_back(m.is_literal() ? m.literal : shortest_name(m.entity, base).surface);
  }
  return coordinate(parts, object.kind == ObjectKind::kDisjunction ? "or" : "and");
}

struct SimpleSentence {
  // Subject reference first, verb second.
  bool standard = false;
  std::string verb_key;
  Tokens verb;
  Tokens complement;
  // Tokens of the leading preposition when the complement is a prepositional
  // phrase; empty otherwise.
  Tokens preposition;
  // Whole clause with kSubjectPlaceholder for the subject reference.
  Tokens clause;
};

SimpleSentence simple_sentence(const PlannedFact& pf, const FactBase& base) {
  const Fact& fact = base.fact(pf.fact_id);
  const SentencePlan& plan = base.plans_for(fact).at(pf.plan_id);
  SimpleSentence s;
  std::vector<Tokens> slot_tokens;
  for (const Slot& slot : plan.slots) {
    if (slot.kind == SlotKind::kOwnerRef) {
      slot_tokens.push_back({kSubjectPlaceholder});
    } else if (slot.kind == SlotKind::kFillerRef) {
      slot_tokens.push_back(object_tokens(fact.object, base));
    } else {
      slot_tokens.push_back(slot.surface);
    }
    append(s.clause, slot_tokens.back());
  }
  s.standard = plan.slots.size() >= 2 && plan.slots[0].kind == SlotKind::kOwnerRef &&
               plan.slots[1].kind == SlotKind::kVerb;
  if (s.standard) {
    s.verb_key = canonical_key(plan.slots[1], fact);
    s.verb = plan.slots[1].surface;
    for (size_t i = 2; i < plan.slots.size(); ++i) append(s.complement, slot_tokens[i]);
    if (plan.slots.size() > 2 && plan.slots[2].kind == SlotKind::kPreposition) {
      s.preposition = plan.slots[2].surface;
    }
  }
  return s;
}

struct VerbPhrase {
  std::string key;
  Tokens verb;
  std::vector<const SimpleSentence*> parts;
};

// Plain complements are coordinated; prepositional phrases follow them side
// by side, with "and" replacing a repeated preposition.
Tokens merged_complements(const VerbPhrase& vp) {
  std::vector<Tokens> plain;
  std::vector<const SimpleSentence*> phrases;
  for (const SimpleSentence* s : vp.parts) {
    if (s->preposition.empty()) {
      plain.push_back(s->complement);
    } else {
      phrases.push_back(s);
    }
  }
  Tokens out = coordinate(plain, "and");
  const Tokens* previous = nullptr;
  for (const SimpleSentence* s : phrases) {
    if (previous != nullptr && *previous == s->preposition) {
      out.push_back("and");
      out.insert(out.end(), s->complement.begin() + s->preposition.size(), s->complement.end());
    } else {
      append(out, s->complement);
    }
    previous = &s->preposition;
  }
  return out;
}

Tokens with_subject(const Tokens& clause, const Tokens& subject) {
  Tokens out;
  for (const std::string& t : clause) {
    if (t == kSubjectPlaceholder) {
      append(out, subject);
    } else {
      out.push_back(t);
    }
  }
  return out;
}

std::string join(const Tokens& tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    if (t.empty()) continue;
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

}  // namespace

TextPlan order(const TextPlan& plan, const FactBase& base) {
  std::map<std::string, int> section_order;
  for (const Fact& f : base.facts) {
    auto [it, inserted] = section_order.emplace(f.section, f.order_key);
    if (!inserted) it->second = std::min(it->second, f.order_key);
  }
  TextPlan out = plan;
  for (Bucket& bucket : out.buckets) {
    std::stable_sort(bucket.begin(), bucket.end(), [&](const PlannedFact& a, const PlannedFact& b) {
      return base.fact(a.fact_id).order_key < base.fact(b.fact_id).order_key;
    });
  }
  auto key = [&](const Bucket& bucket) {
    if (bucket.empty()) {
      return std::pair(std::numeric_limits<int>::max(), std::numeric_limits<int>::max());
    }
    const Fact& first = base.fact(bucket.front().fact_id);
    return std::pair(section_order.at(first.section), first.order_key);
  };
  std::stable_sort(out.buckets.begin(), out.buckets.end(),
                   [&](const Bucket& a, const Bucket& b) { return key(a) < key(b); });
  return out;
}

AggregatedSentence aggregate(const Bucket& group, const FactBase& base,
                             const std::string& later_subject) {
  std::vector<SimpleSentence> simples;
  for (const PlannedFact& pf : group) simples.push_back(simple_sentence(pf, base));

  std::vector<VerbPhrase> phrases;
  std::vector<const SimpleSentence*> clauses;
  for (const SimpleSentence& s : simples) {
    if (!s.standard) {
      clauses.push_back(&s);
      continue;
    }
    auto it = std::find_if(phrases.begin(), phrases.end(),
                           [&](const VerbPhrase& vp) { return vp.key == s.verb_key; });
    if (it == phrases.end()) {
      phrases.push_back({s.verb_key, s.verb, {&s}});
    } else {
      it->parts.push_back(&s);
    }
  }

  AggregatedSentence out;
  std::vector<Tokens> items;
  if (!phrases.empty()) {
    std::vector<Tokens> vps;
    for (size_t p = 0; p < phrases.size(); ++p) {
      Tokens verb = phrases[p].verb;
      if (p > 0 && verb.size() >= 2 && verb.front() == phrases[p - 1].verb.front()) {
        verb.erase(verb.begin());
      }
      append(verb, merged_complements(phrases[p]));
      vps.push_back(std::move(verb));
    }
    items.push_back(coordinate(vps, "and"));
  } else {
    out.subject_first = false;
  }
  const Tokens later = {later_subject};
  for (size_t c = 0; c < clauses.size(); ++c) {
    if (c == 0 && !out.subject_first) {
      items.push_back(clauses[c]->clause);
    } else {
      items.push_back(with_subject(clauses[c]->clause, later));
    }
  }
  out.predicate = coordinate(items, "and");

  if (group.size() <= 1) {
    out.rule = AggregationRule::kSingle;
  } else if (!clauses.empty()) {
    out.rule = AggregationRule::kClauseConjunction;
  } else if (phrases.size() == 1) {
    out.rule = AggregationRule::kSharedVerb;
  } else {
    out.rule = AggregationRule::kSharedSubject;
  }
  return out;
}

std::vector<std::string> name_tokens(const NLName& name, const FactBase& base) {
  Tokens out = name.surface;
  if (name.variant == NameVariant::kDemonstrativeNp) append(out, shortest_name(name.ancestor, base).surface);
  return out;
}

int count_words(const std::string& text) {
  std::istringstream in(text);
  int words = 0;
  std::string token;
  while (in >> token) ++words;
  return words;
}

RealizedText realize(const TextPlan& plan, const FactBase& base) {
  const TextPlan ordered = order(plan, base);
  const Tokens pronoun = {base.pronoun};
  const Tokens name = plan.subject_name ? name_tokens(*plan.subject_name, base) : pronoun;

  RealizedText out;
  for (size_t b = 0; b < ordered.buckets.size(); ++b) {
    const AggregatedSentence agg = aggregate(ordered.buckets[b], base, base.pronoun);
    const Tokens& subject = b == 0 ? name : pronoun;
    Tokens tokens;
    if (agg.subject_first) {
      tokens = subject;
      append(tokens, agg.predicate);
    } else {
      tokens = with_subject(agg.predicate, subject);
    }
    std::string sentence = join(tokens) + ".";
    sentence[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(sentence[0])));
    out.sentences.push_back(std::move(sentence));
  }
  for (const std::string& s : out.sentences) {
    if (!out.text.empty()) out.text += ' ';
    out.text += s;
  }
  out.words = count_words(out.text);
  return out;
}

}  // namespace compactgen
