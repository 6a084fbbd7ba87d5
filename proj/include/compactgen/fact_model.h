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

// Fact bases: the target entity, its message triples, the sentence plans that
// can express them, and the natural-language names of the entities involved.

#ifndef COMPACTGEN_FACT_MODEL_H_
#define COMPACTGEN_FACT_MODEL_H_

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "compactgen/rational.h"

namespace compactgen {

using EntityId = std::string;

enum class ObjectKind { kSingle, kConjunction, kDisjunction };

// One conjunct/disjunct of a fact's object: either an entity or a literal
// token sequence (datatype values such as "4.0 lux").
struct ObjectMember {
  EntityId entity;
  std::vector<std::string> literal;

  bool is_literal() const { return entity.empty(); }
  bool operator==(const ObjectMember&) const = default;
};

struct ObjectSpec {
  ObjectKind kind = ObjectKind::kSingle;
  std::vector<ObjectMember> members;

  bool operator==(const ObjectSpec&) const = default;
};

// A message triple <S, R, O> about the target.
struct Fact {
  int id = 0;
  EntityId subject;
  std::string relation;
  // Relation modifier such as "maxCardinality"; empty when absent.
  std::string modifier;
  ObjectSpec object;
  Rational importance{1};
  std::string section;
  int order_key = 0;

  // Key used to look up the sentence plans of this fact:
  // "relation" or "modifier(relation)".
  std::string plan_key() const;
  bool operator==(const Fact&) const = default;
};

enum class SlotKind {
  kOwnerRef,
  kFillerRef,
  kVerb,
  kNounOrAdjective,
  kPreposition,
  kFixedString,
};

struct Slot {
  SlotKind kind = SlotKind::kFixedString;
  // Grammatical case of a referring slot ("nom", "acc"); empty otherwise.
  std::string case_tag;
  // Pre-inflected tokens; empty for owner and filler references.
  std::vector<std::string> surface;
  // Opaque annotations (tense, voice, polarity, agreement, head flag).
  std::map<std::string, std::string> features;

  bool is_ref() const {
    return kind == SlotKind::kOwnerRef || kind == SlotKind::kFillerRef;
  }
  bool operator==(const Slot&) const = default;
};

struct SentencePlan {
  std::string relation;
  int plan_id = 0;
  std::vector<Slot> slots;

  bool operator==(const SentencePlan&) const = default;
};

enum class NameVariant { kName, kDemonstrative, kDemonstrativeNp };

struct NLName {
  EntityId entity;
  int name_id = 0;
  NameVariant variant = NameVariant::kName;
  // Class mentioned by a demonstrative noun phrase ("this Chardonnay").
  EntityId ancestor;
  // Tokens as authored. For a demonstrative noun phrase this is only the
  // determiner; the ancestor's shortest name follows it when realized.
  std::vector<std::string> surface;
  // Derived at load time: token count, plus the ancestor's shortest name
  // length for demonstrative noun phrases.
  int word_length = 0;
  std::set<int> expressed_facts;
  // Added by subject_candidates() rather than read from the file.
  bool synthetic = false;

  bool operator==(const NLName&) const = default;
};

struct FactBase {
  EntityId target;
  std::string pronoun = "it";
  // Sorted by id; facts[i].id == i + 1.
  std::vector<Fact> facts;
  std::map<std::string, std::vector<SentencePlan>> plans;
  std::map<EntityId, std::vector<NLName>> names;
  std::map<EntityId, bool> anonymity;

  const Fact& fact(int id) const { return facts.at(id - 1); }
  int num_facts() const { return static_cast<int>(facts.size()); }
  bool possibly_anonymous(const EntityId& entity) const;
  // Plans usable for `fact`; throws std::out_of_range when none exist.
  const std::vector<SentencePlan>& plans_for(const Fact& fact) const;

  bool operator==(const FactBase&) const = default;
};

enum class ViolationCode {
  kBadEntityId,
  kSubjectMismatch,
  kFactIdSequence,
  kImportanceOutOfRange,
  kEmptyObject,
  kSingleArity,
  kMissingPlan,
  kEmptyPlan,
  kPlanRelationMismatch,
  kOwnerRefCount,
  kFillerRefCount,
  kRefWithSurface,
  kEmptySurface,
  kMissingName,
  kEmptyNameSurface,
  kNameEntityMismatch,
  kDemonstrativeLength,
  kMissingAncestor,
  kDanglingExpressedFact,
  kEmptyPronoun,
};

std::string_view violation_code_name(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string message;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Checks every invariant of the fact base. Returns one entry per violation;
// empty when the base is valid.
std::vector<Violation> validate(const FactBase& base);

// Parses and validates a fact-base JSON document. Throws ParseError on
// malformed input (including unknown keys) and ValidationError otherwise.
FactBase load_fact_base(std::string_view document);
FactBase load_fact_base_file(const std::string& path);

// Inverse of load_fact_base.
std::string serialize_fact_base(const FactBase& base);

// Recomputes word_length of every name (needed after editing names by hand).
void finalize_name_lengths(FactBase& base);

// Candidate names for the target: the declared ones followed, when the target
// is possibly anonymous, by a plain demonstrative ("this") and one
// demonstrative noun phrase per isA/instanceOf fact, which expresses that
// fact. Synthetic candidates are skipped when an equivalent one is declared.
std::vector<NLName> subject_candidates(const FactBase& base);

// True for relations whose object is an ancestor class of the subject.
bool is_ancestor_relation(std::string_view relation);

}  // namespace compactgen

#endif  // COMPACTGEN_FACT_MODEL_H_
