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

#include "compactgen/fact_model.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "nlohmann/json.hpp"

namespace compactgen {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kNoLength = std::numeric_limits<int>::max();

const char* slot_kind_name(SlotKind kind) {
  switch (kind) {
    case SlotKind::kOwnerRef: return "owner-ref";
    case SlotKind::kFillerRef: return "filler-ref";
    case SlotKind::kVerb: return "verb";
    case SlotKind::kNounOrAdjective: return "noun-or-adjective";
    case SlotKind::kPreposition: return "preposition";
    case SlotKind::kFixedString: return "fixed-string";
  }
  return "?";
}

const char* object_kind_name(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::kSingle: return "single";
    case ObjectKind::kConjunction: return "conjunction";
    case ObjectKind::kDisjunction: return "disjunction";
  }
  return "?";
}

const char* variant_name(NameVariant variant) {
  switch (variant) {
    case NameVariant::kName: return "name";
    case NameVariant::kDemonstrative: return "demonstrative";
    case NameVariant::kDemonstrativeNp: return "demonstrative-np";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Parsing helpers. Every object is checked against its allowed key set.

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

void check_keys(const json& object, const std::string& where,
                std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional) {
  if (!object.is_object()) parse_fail(where, "expected an object");
  for (const char* key : required) {
    if (!object.contains(key)) parse_fail(where, std::string("missing key \"") + key + "\"");
  }
  for (const auto& item : object.items()) {
    const std::string& key = item.key();
    auto match = [&](const char* k) { return key == k; };
    if (std::none_of(required.begin(), required.end(), match) &&
        std::none_of(optional.begin(), optional.end(), match)) {
      parse_fail(where, "unknown key \"" + key + "\"");
    }
  }
}

std::string get_string(const json& value, const std::string& where) {
  if (!value.is_string()) parse_fail(where, "expected a string");
  return value.get<std::string>();
}

int get_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) parse_fail(where, "expected an integer");
  return value.get<int>();
}

std::vector<std::string> get_tokens(const json& value, const std::string& where) {
  if (!value.is_array()) parse_fail(where, "expected an array of tokens");
  std::vector<std::string> tokens;
  for (size_t i = 0; i < value.size(); ++i) {
    tokens.push_back(get_string(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return tokens;
}

Rational get_importance(const json& value, const std::string& where) {
  try {
    if (value.is_number_integer()) return Rational(value.get<long>());
    if (value.is_number_float()) return rational_from_double(value.get<double>());
    if (value.is_string()) return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    parse_fail(where, e.what());
  }
  parse_fail(where, "expected a number or a \"p/q\" string");
}

ObjectSpec parse_object(const json& value, const std::string& where) {
  check_keys(value, where, {"kind", "members"}, {});
  ObjectSpec spec;
  const std::string kind = get_string(value["kind"], where + ".kind");
  if (kind == "single") {
    spec.kind = ObjectKind::kSingle;
  } else if (kind == "conjunction") {
    spec.kind = ObjectKind::kConjunction;
  } else if (kind == "disjunction") {
    spec.kind = ObjectKind::kDisjunction;
  } else {
    parse_fail(where + ".kind", "unknown object kind \"" + kind + "\"");
  }
  const json& members = value["members"];
  if (!members.is_array()) parse_fail(where + ".members", "expected an array");
  for (size_t i = 0; i < members.size(); ++i) {
    const std::string at = where + ".members[" + std::to_string(i) + "]";
    ObjectMember member;
    if (members[i].is_string()) {
      member.entity = members[i].get<std::string>();
      if (member.entity.empty()) parse_fail(at, "empty entity id");
    } else if (members[i].is_array()) {
      member.literal = get_tokens(members[i], at);
    } else {
      parse_fail(at, "expected an entity id or a token array");
    }
    spec.members.push_back(std::move(member));
  }
  return spec;
}

Slot parse_slot(const json& value, const std::string& where) {
  check_keys(value, where, {"kind"}, {"case", "surface", "features"});
  Slot slot;
  const std::string kind = get_string(value["kind"], where + ".kind");
  static const std::pair<const char*, SlotKind> kKinds[] = {
      {"owner-ref", SlotKind::kOwnerRef},
      {"filler-ref", SlotKind::kFillerRef},
      {"verb", SlotKind::kVerb},
      {"noun-or-adjective", SlotKind::kNounOrAdjective},
      {"preposition", SlotKind::kPreposition},
      {"fixed-string", SlotKind::kFixedString},
  };
  auto it = std::find_if(std::begin(kKinds), std::end(kKinds),
                         [&](const auto& k) { return kind == k.first; });
  if (it == std::end(kKinds)) parse_fail(where + ".kind", "unknown slot kind \"" + kind + "\"");
  slot.kind = it->second;
  if (value.contains("case")) slot.case_tag = get_string(value["case"], where + ".case");
  if (value.contains("surface")) slot.surface = get_tokens(value["surface"], where + ".surface");
  if (value.contains("features")) {
    const json& features = value["features"];
    if (!features.is_object()) parse_fail(where + ".features", "expected an object");
    for (const auto& item : features.items()) {
      slot.features[item.key()] =
          get_string(item.value(), where + ".features." + item.key());
    }
  }
  return slot;
}

NLName parse_name(const json& value, const std::string& where) {
  check_keys(value, where, {"entity", "surface"}, {"variant", "ancestor", "expressed_facts"});
  NLName name;
  name.entity = get_string(value["entity"], where + ".entity");
  const std::string variant =
      value.contains("variant") ? get_string(value["variant"], where + ".variant") : "name";
  if (variant == "name") {
    name.variant = NameVariant::kName;
  } else if (variant == "demonstrative") {
    name.variant = NameVariant::kDemonstrative;
  } else if (variant == "demonstrative-np") {
    name.variant = NameVariant::kDemonstrativeNp;
  } else {
    parse_fail(where + ".variant", "unknown name variant \"" + variant + "\"");
  }
  if (value.contains("ancestor")) name.ancestor = get_string(value["ancestor"], where + ".ancestor");
  name.surface = get_tokens(value["surface"], where + ".surface");
  if (value.contains("expressed_facts")) {
    const json& ids = value["expressed_facts"];
    if (!ids.is_array()) parse_fail(where + ".expressed_facts", "expected an array");
    for (size_t i = 0; i < ids.size(); ++i) {
      name.expressed_facts.insert(
          get_int(ids[i], where + ".expressed_facts[" + std::to_string(i) + "]"));
    }
  }
  return name;
}

Fact parse_fact(const json& value, const std::string& where) {
  check_keys(value, where,
             {"id", "subject", "relation", "object", "importance", "section", "order_key"},
             {"modifier"});
  Fact fact;
  fact.id = get_int(value["id"], where + ".id");
  fact.subject = get_string(value["subject"], where + ".subject");
  fact.relation = get_string(value["relation"], where + ".relation");
  if (value.contains("modifier")) fact.modifier = get_string(value["modifier"], where + ".modifier");
  fact.object = parse_object(value["object"], where + ".object");
  fact.importance = get_importance(value["importance"], where + ".importance");
  fact.section = get_string(value["section"], where + ".section");
  fact.order_key = get_int(value["order_key"], where + ".order_key");
  return fact;
}

bool is_entity_id(const std::string& id) {
  return !id.empty() && std::none_of(id.begin(), id.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

bool is_token(const std::string& token) { return is_entity_id(token); }

int shortest_plain_name_length(const FactBase& base, const EntityId& entity) {
  auto it = base.names.find(entity);
  if (it == base.names.end()) return kNoLength;
  int best = kNoLength;
  for (const NLName& name : it->second) {
    if (name.variant == NameVariant::kName) {
      best = std::min(best, static_cast<int>(name.surface.size()));
    }
  }
  return best;
}

const NLName* shortest_plain_name(const FactBase& base, const EntityId& entity) {
  auto it = base.names.find(entity);
  if (it == base.names.end()) return nullptr;
  const NLName* best = nullptr;
  for (const NLName& name : it->second) {
    if (name.variant != NameVariant::kName) continue;
    if (best == nullptr || name.word_length < best->word_length) best = &name;
  }
  return best;
}

}  // namespace

std::string Fact::plan_key() const {
  return modifier.empty() ? relation : modifier + "(" + relation + ")";
}

bool FactBase::possibly_anonymous(const EntityId& entity) const {
  auto it = anonymity.find(entity);
  return it != anonymity.end() && it->second;
}

const std::vector<SentencePlan>& FactBase::plans_for(const Fact& f) const {
  auto it = plans.find(f.plan_key());
  if (it == plans.end()) {
    throw std::out_of_range("no sentence plan for relation \"" + f.plan_key() + "\"");
  }
  return it->second;
}

std::string_view violation_code_name(ViolationCode code) {
  switch (code) {
    case ViolationCode::kBadEntityId: return "BadEntityId";
    case ViolationCode::kSubjectMismatch: return "SubjectMismatch";
    case ViolationCode::kFactIdSequence: return "FactIdSequence";
    case ViolationCode::kImportanceOutOfRange: return "ImportanceOutOfRange";
    case ViolationCode::kEmptyObject: return "EmptyObject";
    case ViolationCode::kSingleArity: return "SingleArity";
    case ViolationCode::kMissingPlan: return "MissingPlan";
    case ViolationCode::kEmptyPlan: return "EmptyPlan";
    case ViolationCode::kPlanRelationMismatch: return "PlanRelationMismatch";
    case ViolationCode::kOwnerRefCount: return "OwnerRefCount";
    case ViolationCode::kFillerRefCount: return "FillerRefCount";
    case ViolationCode::kRefWithSurface: return "RefWithSurface";
    case ViolationCode::kEmptySurface: return "EmptySurface";
    case ViolationCode::kMissingName: return "MissingName";
    case ViolationCode::kEmptyNameSurface: return "EmptyNameSurface";
    case ViolationCode::kNameEntityMismatch: return "NameEntityMismatch";
    case ViolationCode::kDemonstrativeLength: return "DemonstrativeLength";
    case ViolationCode::kMissingAncestor: return "MissingAncestor";
    case ViolationCode::kDanglingExpressedFact: return "DanglingExpressedFact";
    case ViolationCode::kEmptyPronoun: return "EmptyPronoun";
  }
  return "Unknown";
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error([&] {
        std::string message = "invalid fact base:";
        for (const Violation& v : violations) {
          message += "\n  ";
          message += violation_code_name(v.code);
          message += ": " + v.message;
        }
        return message;
      }()),
      violations_(std::move(violations)) {}

std::vector<Violation> validate(const FactBase& base) {
  std::vector<Violation> out;
  auto report = [&](ViolationCode code, std::string message) {
    out.push_back({code, std::move(message)});
  };
  auto check_entity = [&](const std::string& id, const std::string& where) {
    if (!is_entity_id(id)) report(ViolationCode::kBadEntityId, where + ": \"" + id + "\"");
  };

  check_entity(base.target, "target");
  if (base.pronoun.empty() || !is_token(base.pronoun)) {
    report(ViolationCode::kEmptyPronoun, "pronoun must be a single token");
  }

  std::set<EntityId> referenced;
  for (size_t idx = 0; idx < base.facts.size(); ++idx) {
    const Fact& f = base.facts[idx];
    const std::string where = "fact " + std::to_string(f.id);
    if (f.id != static_cast<int>(idx) + 1) {
      report(ViolationCode::kFactIdSequence,
             where + " at position " + std::to_string(idx + 1) + "; ids must be 1..n");
    }
    if (f.subject != base.target) {
      report(ViolationCode::kSubjectMismatch, where + " has subject \"" + f.subject +
                                                  "\" but the target is \"" + base.target + "\"");
    }
    if (f.importance < 0 || f.importance > 1) {
      report(ViolationCode::kImportanceOutOfRange,
             where + " importance " + to_string(f.importance) + " not in [0,1]");
    }
    if (f.object.members.empty()) {
      report(ViolationCode::kEmptyObject, where + " has no object members");
    }
    if (f.object.kind == ObjectKind::kSingle && f.object.members.size() > 1) {
      report(ViolationCode::kSingleArity, where + " single object with several members");
    }
    for (const ObjectMember& m : f.object.members) {
      if (m.is_literal()) {
        if (m.literal.empty() || !std::all_of(m.literal.begin(), m.literal.end(), is_token)) {
          report(ViolationCode::kEmptyObject, where + " has an empty or malformed literal");
        }
      } else {
        check_entity(m.entity, where + " object");
        referenced.insert(m.entity);
      }
    }
    if (base.plans.find(f.plan_key()) == base.plans.end()) {
      report(ViolationCode::kMissingPlan,
             where + " uses relation \"" + f.plan_key() + "\" which has no sentence plan");
    }
  }

  for (const auto& [relation, plans] : base.plans) {
    if (plans.empty()) report(ViolationCode::kEmptyPlan, "relation \"" + relation + "\" has no plans");
    for (size_t k = 0; k < plans.size(); ++k) {
      const SentencePlan& plan = plans[k];
      const std::string where = "plan " + relation + "#" + std::to_string(k);
      if (plan.relation != relation) {
        report(ViolationCode::kPlanRelationMismatch, where + " declares relation " + plan.relation);
      }
      if (plan.slots.empty()) report(ViolationCode::kEmptyPlan, where + " has no slots");
      int owners = 0, fillers = 0;
      for (const Slot& slot : plan.slots) {
        owners += slot.kind == SlotKind::kOwnerRef;
        fillers += slot.kind == SlotKind::kFillerRef;
        if (slot.is_ref() && !slot.surface.empty()) {
          report(ViolationCode::kRefWithSurface, where + " has a reference slot with surface");
        }
        if (!slot.is_ref() &&
            (slot.surface.empty() ||
             !std::all_of(slot.surface.begin(), slot.surface.end(), is_token))) {
          report(ViolationCode::kEmptySurface,
                 where + " has a " + slot_kind_name(slot.kind) + " slot without valid tokens");
        }
      }
      if (owners != 1) {
        report(ViolationCode::kOwnerRefCount,
               where + " has " + std::to_string(owners) + " owner references");
      }
      if (fillers > 1) {
        report(ViolationCode::kFillerRefCount,
               where + " has " + std::to_string(fillers) + " filler references");
      }
    }
  }

  for (const auto& [entity, names] : base.names) {
    check_entity(entity, "names");
    if (names.empty()) report(ViolationCode::kMissingName, "entity \"" + entity + "\" has no names");
    for (const NLName& name : names) {
      const std::string where = "name " + entity + "#" + std::to_string(name.name_id);
      if (name.entity != entity) {
        report(ViolationCode::kNameEntityMismatch, where + " declares entity " + name.entity);
      }
      if (name.surface.empty() ||
          !std::all_of(name.surface.begin(), name.surface.end(), is_token)) {
        report(ViolationCode::kEmptyNameSurface, where + " has no valid tokens");
      }
      if (name.variant != NameVariant::kName && name.surface.size() != 1) {
        report(ViolationCode::kDemonstrativeLength,
               where + " demonstrative must be exactly one token");
      }
      if (name.variant == NameVariant::kDemonstrativeNp &&
          (name.ancestor.empty() || shortest_plain_name_length(base, name.ancestor) == kNoLength)) {
        report(ViolationCode::kMissingAncestor,
               where + " refers to ancestor \"" + name.ancestor + "\" without a name");
      }
      for (int id : name.expressed_facts) {
        if (id < 1 || id > base.num_facts()) {
          report(ViolationCode::kDanglingExpressedFact,
                 where + " expresses missing fact " + std::to_string(id));
        }
      }
    }
  }

  for (const EntityId& entity : referenced) {
    auto it = base.names.find(entity);
    if (it == base.names.end() || it->second.empty()) {
      report(ViolationCode::kMissingName, "object entity \"" + entity + "\" has no name");
    } else if (shortest_plain_name_length(base, entity) == kNoLength) {
      report(ViolationCode::kMissingName, "object entity \"" + entity + "\" has only demonstratives");
    }
  }
  auto target_names = base.names.find(base.target);
  if ((target_names == base.names.end() || target_names->second.empty()) &&
      !base.possibly_anonymous(base.target)) {
    report(ViolationCode::kMissingName, "target \"" + base.target + "\" has no name");
  }
  for (const auto& [entity, flag] : base.anonymity) check_entity(entity, "anonymity");
  return out;
}

void finalize_name_lengths(FactBase& base) {
  for (auto& [entity, names] : base.names) {
    for (NLName& name : names) {
      name.word_length = static_cast<int>(name.surface.size());
      if (name.variant == NameVariant::kDemonstrativeNp) {
        int ancestor = shortest_plain_name_length(base, name.ancestor);
        if (ancestor != kNoLength) name.word_length += ancestor;
      }
    }
  }
}

FactBase load_fact_base(std::string_view document) {
  json root;
  try {
    root = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  check_keys(root, "document", {"target", "facts", "plans", "names"}, {"pronoun", "anonymity"});

  FactBase base;
  base.target = get_string(root["target"], "target");
  if (root.contains("pronoun")) base.pronoun = get_string(root["pronoun"], "pronoun");

  const json& facts = root["facts"];
  if (!facts.is_array()) parse_fail("facts", "expected an array");
  for (size_t i = 0; i < facts.size(); ++i) {
    base.facts.push_back(parse_fact(facts[i], "facts[" + std::to_string(i) + "]"));
  }
  std::stable_sort(base.facts.begin(), base.facts.end(),
                   [](const Fact& a, const Fact& b) { return a.id < b.id; });

  const json& plans = root["plans"];
  if (!plans.is_object()) parse_fail("plans", "expected an object keyed by relation");
  for (const auto& item : plans.items()) {
    const std::string where = "plans." + item.key();
    if (!item.value().is_array()) parse_fail(where, "expected an array of plans");
    std::vector<SentencePlan>& list = base.plans[item.key()];
    for (size_t k = 0; k < item.value().size(); ++k) {
      const std::string at = where + "[" + std::to_string(k) + "]";
      const json& plan_json = item.value()[k];
      check_keys(plan_json, at, {"slots"}, {});
      if (!plan_json["slots"].is_array()) parse_fail(at + ".slots", "expected an array");
      SentencePlan plan;
      plan.relation = item.key();
      plan.plan_id = static_cast<int>(k);
      for (size_t s = 0; s < plan_json["slots"].size(); ++s) {
        plan.slots.push_back(
            parse_slot(plan_json["slots"][s], at + ".slots[" + std::to_string(s) + "]"));
      }
      list.push_back(std::move(plan));
    }
  }

  const json& names = root["names"];
  if (!names.is_array()) parse_fail("names", "expected an array");
  for (size_t r = 0; r < names.size(); ++r) {
    NLName name = parse_name(names[r], "names[" + std::to_string(r) + "]");
    std::vector<NLName>& list = base.names[name.entity];
    name.name_id = static_cast<int>(list.size());
    list.push_back(std::move(name));
  }

  if (root.contains("anonymity")) {
    const json& anonymity = root["anonymity"];
    if (!anonymity.is_object()) parse_fail("anonymity", "expected an object");
    for (const auto& item : anonymity.items()) {
      if (!item.value().is_boolean()) parse_fail("anonymity." + item.key(), "expected a boolean");
      base.anonymity[item.key()] = item.value().get<bool>();
    }
  }

  finalize_name_lengths(base);
  if (auto violations = validate(base); !violations.empty()) {
    throw ValidationError(std::move(violations));
  }
  return base;
}

FactBase load_fact_base_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open fact base file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_fact_base(buffer.str());
}

std::string serialize_fact_base(const FactBase& base) {
  ordered_json root;
  root["target"] = base.target;
  root["pronoun"] = base.pronoun;

  ordered_json facts = ordered_json::array();
  for (const Fact& f : base.facts) {
    ordered_json fact;
    fact["id"] = f.id;
    fact["subject"] = f.subject;
    fact["relation"] = f.relation;
    if (!f.modifier.empty()) fact["modifier"] = f.modifier;
    ordered_json members = ordered_json::array();
    for (const ObjectMember& m : f.object.members) {
      if (m.is_literal()) {
        members.push_back(m.literal);
      } else {
        members.push_back(m.entity);
      }
    }
    fact["object"] = {{"kind", object_kind_name(f.object.kind)}, {"members", members}};
    if (f.importance.get_den() == 1) {
      fact["importance"] = f.importance.get_num().get_si();
    } else {
      fact["importance"] = to_string(f.importance);
    }
    fact["section"] = f.section;
    fact["order_key"] = f.order_key;
    facts.push_back(std::move(fact));
  }
  root["facts"] = std::move(facts);

  ordered_json plans = ordered_json::object();
  for (const auto& [relation, list] : base.plans) {
    ordered_json entries = ordered_json::array();
    for (const SentencePlan& plan : list) {
      ordered_json slots = ordered_json::array();
      for (const Slot& slot : plan.slots) {
        ordered_json s;
        s["kind"] = slot_kind_name(slot.kind);
        if (!slot.case_tag.empty()) s["case"] = slot.case_tag;
        s["surface"] = slot.surface;
        ordered_json features = ordered_json::object();
        for (const auto& [k, v] : slot.features) features[k] = v;
        s["features"] = std::move(features);
        slots.push_back(std::move(s));
      }
      entries.push_back({{"slots", std::move(slots)}});
    }
    plans[relation] = std::move(entries);
  }
  root["plans"] = std::move(plans);

  ordered_json names = ordered_json::array();
  for (const auto& [entity, list] : base.names) {
    for (const NLName& name : list) {
      ordered_json n;
      n["entity"] = name.entity;
      n["variant"] = variant_name(name.variant);
      if (!name.ancestor.empty()) n["ancestor"] = name.ancestor;
      n["surface"] = name.surface;
      n["expressed_facts"] = std::vector<int>(name.expressed_facts.begin(),
                                              name.expressed_facts.end());
      names.push_back(std::move(n));
    }
  }
  root["names"] = std::move(names);

  ordered_json anonymity = ordered_json::object();
  for (const auto& [entity, flag] : base.anonymity) anonymity[entity] = flag;
  root["anonymity"] = std::move(anonymity);
  return root.dump(2) + "\n";
}

bool is_ancestor_relation(std::string_view relation) {
  return relation == "isA" || relation == "instanceOf";
}

std::vector<NLName> subject_candidates(const FactBase& base) {
  std::vector<NLName> out;
  if (auto it = base.names.find(base.target); it != base.names.end()) out = it->second;
  if (!base.possibly_anonymous(base.target)) return out;

  auto declared = [&](NameVariant variant, const EntityId& ancestor) {
    return std::any_of(out.begin(), out.end(), [&](const NLName& n) {
      return n.variant == variant && n.ancestor == ancestor;
    });
  };
  if (!declared(NameVariant::kDemonstrative, "")) {
    NLName demonstrative;
    demonstrative.entity = base.target;
    demonstrative.name_id = static_cast<int>(out.size());
    demonstrative.variant = NameVariant::kDemonstrative;
    demonstrative.surface = {"this"};
    demonstrative.word_length = 1;
    demonstrative.synthetic = true;
    out.push_back(std::move(demonstrative));
  }
  for (const Fact& f : base.facts) {
    if (!is_ancestor_relation(f.relation) || !f.modifier.empty() ||
        f.object.kind != ObjectKind::kSingle || f.object.members.size() != 1 ||
        f.object.members[0].is_literal()) {
      continue;
    }
    const EntityId& ancestor = f.object.members[0].entity;
    const NLName* ancestor_name = shortest_plain_name(base, ancestor);
    if (ancestor_name == nullptr || declared(NameVariant::kDemonstrativeNp, ancestor)) continue;
    NLName np;
    np.entity = base.target;
    np.name_id = static_cast<int>(out.size());
    np.variant = NameVariant::kDemonstrativeNp;
    np.ancestor = ancestor;
    np.surface = {"this"};
    np.word_length = 1 + ancestor_name->word_length;
    np.expressed_facts = {f.id};
    np.synthetic = true;
    out.push_back(std::move(np));
  }
  return out;
}

}  // namespace compactgen
