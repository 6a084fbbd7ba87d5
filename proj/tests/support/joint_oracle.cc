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

#include "support/joint_oracle.h"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "compactgen/element_algebra.h"

namespace compactgen::testing {
namespace {

struct Option {
  int k = 0;
  // (canonical key, word length) of each distinct element.
  std::vector<std::pair<std::string, int>> elements;
};

struct Candidate {
  int fact_id = 0;
  Rational importance;
  std::string section;
  std::vector<Option> options;
};

struct BucketState {
  std::map<std::string, int> uses;
  int distinct = 0;
  int words = 0;
  std::string section;
  int facts = 0;
};

class Search {
 public:
  Search(const std::vector<Candidate>& candidates, int m, ModelKind kind, int cap)
      : candidates_(candidates), buckets_(m), kind_(kind), cap_(cap) {}

  // Calls `leaf` with (selected fact ids, total distinct elements, total
  // element words) for every feasible complete placement.
  template <typename Leaf>
  void run(Leaf&& leaf) {
    selected_.clear();
    recurse(0, leaf);
  }

  std::int64_t leaves() const { return leaves_; }

 private:
  template <typename Leaf>
  void recurse(size_t p, Leaf& leaf) {
    if (p == candidates_.size()) {
      ++leaves_;
      int distinct = 0;
      int words = 0;
      for (const BucketState& b : buckets_) {
        distinct += b.distinct;
        words += b.words;
      }
      leaf(selected_, distinct, words);
      return;
    }
    recurse(p + 1, leaf);
    const Candidate& c = candidates_[p];
    for (const Option& o : c.options) {
      for (BucketState& b : buckets_) {
        if (b.facts > 0 && b.section != c.section) continue;
        place(b, c, o, +1);
        const int load = kind_ == ModelKind::kFirst ? b.distinct : b.words;
        if (load <= cap_) {
          selected_.push_back(c.fact_id);
          recurse(p + 1, leaf);
          selected_.pop_back();
        }
        place(b, c, o, -1);
      }
    }
  }

  static void place(BucketState& b, const Candidate& c, const Option& o, int sign) {
    for (const auto& [key, len] : o.elements) {
      int& n = b.uses[key];
      if (sign > 0 && n++ == 0) {
        ++b.distinct;
        b.words += len;
      } else if (sign < 0 && --n == 0) {
        --b.distinct;
        b.words -= len;
      }
    }
    b.facts += sign;
    if (sign > 0) b.section = c.section;
  }

  const std::vector<Candidate>& candidates_;
  std::vector<BucketState> buckets_;
  ModelKind kind_;
  int cap_;
  std::vector<int> selected_;
  std::int64_t leaves_ = 0;
};

std::vector<Option> options_for(const Fact& fact, const FactBase& base) {
  std::vector<Option> out;
  const std::vector<SentencePlan>& plans = base.plans_for(fact);
  for (size_t k = 0; k < plans.size(); ++k) {
    Option o;
    o.k = static_cast<int>(k);
    for (const auto& [key, element] : extract_elements(plans[k], fact)) {
      o.elements.push_back({key, element_word_length(element, base)});
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace

OracleResult joint_optimum(const FactBase& base, const PlannerConfig& cfg, ModelKind kind) {
  Rational lambda1 = cfg.lambda1;
  lambda1.canonicalize();
  const Rational lambda2 = 1 - lambda1;
  std::vector<Candidate> all;
  int positive = 0;
  for (const Fact& f : base.facts) {
    if (f.importance <= 0) continue;
    ++positive;
    all.push_back({f.id, f.importance, f.section, options_for(f, base)});
  }

  // Element universe of the selectable facts, for the length normalizer.
  std::map<std::string, int> universe;
  for (const Candidate& c : all) {
    for (const Option& o : c.options) {
      for (const auto& [key, len] : o.elements) universe[key] = len;
    }
  }

  OracleResult result;
  bool have = false;
  auto offer = [&](const Rational& value) {
    if (!have || value > result.objective) result.objective = value;
    have = true;
  };

  if (kind == ModelKind::kFirst) {
    const Rational facts_den(positive);
    const Rational length_den(static_cast<long>(cfg.m) * static_cast<long>(universe.size()));
    Search search(all, cfg.m, kind, cfg.b_max);
    search.run([&](const std::vector<int>& selected, int distinct, int) {
      Rational reward;
      for (int i : selected) reward += base.fact(i).importance;
      Rational value;
      if (facts_den > 0) value += lambda1 * reward / facts_den;
      if (length_den > 0) value -= lambda2 * distinct / length_den;
      offer(value);
    });
    result.leaves = search.leaves();
    return result;
  }

  const std::vector<NLName> names = subject_candidates(base);
  long element_words = 0;
  for (const auto& [key, len] : universe) element_words += len;
  long name_words = 0;
  for (const NLName& n : names) name_words += n.word_length;
  const Rational facts_den(base.num_facts());
  const Rational length_den(static_cast<long>(cfg.m) * element_words + name_words);

  for (const NLName& name : names) {
    std::vector<Candidate> open;
    for (const Candidate& c : all) {
      if (!name.expressed_facts.count(c.fact_id)) open.push_back(c);
    }
    Rational name_reward;
    for (int i : name.expressed_facts) name_reward += base.fact(i).importance;
    Search search(open, cfg.m, kind, cfg.w_max);
    search.run([&](const std::vector<int>& selected, int, int words) {
      Rational reward = name_reward;
      for (int i : selected) reward += base.fact(i).importance;
      Rational value;
      if (facts_den > 0) value += lambda1 * reward / facts_den;
      if (length_den > 0) value -= lambda2 * (words + name.word_length) / length_den;
      offer(value);
    });
    result.leaves += search.leaves();
  }
  return result;
}

Rational score_plan(const TextPlan& plan, const FactBase& base, const PlannerConfig& cfg,
                    ModelKind kind) {
  Rational lambda1 = cfg.lambda1;
  lambda1.canonicalize();
  const Rational lambda2 = 1 - lambda1;
  std::map<std::string, int> universe;
  int positive = 0;
  for (const Fact& f : base.facts) {
    if (f.importance <= 0) continue;
    ++positive;
    for (const Option& o : options_for(f, base)) {
      for (const auto& [key, len] : o.elements) universe[key] = len;
    }
  }
  int distinct = 0;
  int words = 0;
  Rational reward;
  for (const Bucket& bucket : plan.buckets) {
    std::map<std::string, int> used;
    for (const PlannedFact& pf : bucket) {
      const Fact& f = base.fact(pf.fact_id);
      reward += f.importance;
      for (const auto& [key, e] : extract_elements(base.plans_for(f).at(pf.plan_id), f)) {
        used[key] = element_word_length(e, base);
      }
    }
    distinct += static_cast<int>(used.size());
    for (const auto& [key, len] : used) words += len;
  }

  Rational value;
  if (kind == ModelKind::kFirst) {
    const Rational length_den(static_cast<long>(cfg.m) * static_cast<long>(universe.size()));
    if (positive > 0) value += lambda1 * reward / positive;
    if (length_den > 0) value -= lambda2 * distinct / length_den;
    return value;
  }
  long element_words = 0;
  for (const auto& [key, len] : universe) element_words += len;
  long name_words = 0;
  for (const NLName& n : subject_candidates(base)) name_words += n.word_length;
  const Rational length_den(static_cast<long>(cfg.m) * element_words + name_words);
  for (int i : plan.name_expressed) reward += base.fact(i).importance;
  if (plan.subject_name) words += plan.subject_name->word_length;
  if (base.num_facts() > 0) value += lambda1 * reward / base.num_facts();
  if (length_den > 0) value -= lambda2 * words / length_den;
  return value;
}

namespace {

Slot owner() { return {SlotKind::kOwnerRef, "nom", {}, {}}; }
Slot filler() { return {SlotKind::kFillerRef, "acc", {}, {}}; }
Slot verb(std::vector<std::string> s) { return {SlotKind::kVerb, "", std::move(s), {}}; }
Slot prep(std::string s) { return {SlotKind::kPreposition, "", {std::move(s)}, {}}; }
Slot noun(std::string s) { return {SlotKind::kNounOrAdjective, "", {std::move(s)}, {}}; }
Slot text(std::vector<std::string> s) { return {SlotKind::kFixedString, "", std::move(s), {}}; }

std::vector<std::vector<Slot>> plan_templates() {
  return {
      {owner(), verb({"is"}), filler()},
      {owner(), verb({"is", "made"}), prep("by"), filler()},
      {owner(), verb({"is", "made"}), prep("in"), filler()},
      {owner(), verb({"comes"}), prep("from"), filler()},
      {owner(), verb({"has"}), text({"a"}), noun("color"), prep("of"), filler()},
      {owner(), verb({"is"}), text({"a", "kind", "of"}), filler()},
      {text({"the"}), noun("origin"), prep("of"), owner(), verb({"is"}), filler()},
  };
}

const std::vector<std::string> kRelations = {"isA", "madeBy", "madeIn", "hasColor", "locatedIn"};
const std::vector<std::vector<std::string>> kWords = {
    {"red"}, {"Napa", "Valley"}, {"the", "old", "mill"}, {"Bancroft"},
    {"a", "small", "estate", "winery"}, {"dry"}};

}  // namespace

FactBase random_fact_base(std::uint64_t seed, const RandomBaseOptions& options) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 17);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto chance = [&](double p) { return std::bernoulli_distribution(p)(rng); };

  FactBase base;
  base.target = "T";
  const std::vector<EntityId> classes = {"C1", "C2"};
  const std::vector<EntityId> objects = {"O1", "O2", "O3", "O4"};
  auto add_name = [&](const EntityId& e, std::vector<std::string> surface) {
    std::vector<NLName>& list = base.names[e];
    NLName n;
    n.entity = e;
    n.name_id = static_cast<int>(list.size());
    n.surface = std::move(surface);
    list.push_back(std::move(n));
  };
  add_name("C1", {"Wine"});
  add_name("C2", {"White", "Wine"});
  for (const EntityId& o : objects) {
    add_name(o, kWords[uniform(0, static_cast<int>(kWords.size()) - 1)]);
    if (chance(0.3)) add_name(o, kWords[uniform(0, static_cast<int>(kWords.size()) - 1)]);
  }

  const int num_facts = uniform(1, options.max_facts);
  for (int id = 1; id <= num_facts; ++id) {
    Fact f;
    f.id = id;
    f.subject = base.target;
    f.relation = kRelations[uniform(0, static_cast<int>(kRelations.size()) - 1)];
    const bool is_class = f.relation == "isA";
    const int r = uniform(0, 99);
    if (!is_class && r < 20) {
      f.object.kind = ObjectKind::kConjunction;
      const int n = uniform(2, 3);
      for (int q = 0; q < n; ++q) f.object.members.push_back({objects[(id + q) % objects.size()], {}});
    } else if (!is_class && r < 30) {
      f.object.members.push_back({"", {std::to_string(uniform(5, 15)), "percent"}});
    } else {
      const auto& pool = is_class ? classes : objects;
      f.object.members.push_back({pool[uniform(0, static_cast<int>(pool.size()) - 1)], {}});
    }
    const int imp = uniform(0, 99);
    f.importance = imp < 15 ? Rational(0) : imp < 40 ? Rational(1, 2) : Rational(1);
    f.section = chance(0.5) ? "s1" : "s2";
    f.order_key = id;
    base.facts.push_back(std::move(f));
  }

  const std::vector<std::vector<Slot>> templates = plan_templates();
  for (const std::string& relation : kRelations) {
    std::vector<int> pick(templates.size());
    for (size_t q = 0; q < pick.size(); ++q) pick[q] = static_cast<int>(q);
    std::shuffle(pick.begin(), pick.end(), rng);
    const int n = uniform(1, options.max_plans);
    for (int k = 0; k < n; ++k) {
      base.plans[relation].push_back({relation, k, templates[pick[k]]});
    }
  }

  const int target_names = uniform(1, options.max_target_names);
  for (int q = 0; q < target_names; ++q) {
    add_name(base.target, kWords[uniform(0, static_cast<int>(kWords.size()) - 1)]);
    for (const Fact& f : base.facts) {
      if (chance(0.3)) base.names[base.target].back().expressed_facts.insert(f.id);
    }
  }
  base.anonymity[base.target] = chance(0.5);
  finalize_name_lengths(base);
  if (base.anonymity[base.target] &&
      static_cast<int>(subject_candidates(base).size()) > options.max_target_names) {
    base.anonymity[base.target] = false;
  }

  const std::vector<Violation> violations = validate(base);
  if (!violations.empty()) {
    std::string message = "random_fact_base produced an invalid base:";
    for (const Violation& v : violations) message += " " + v.message + ";";
    throw std::logic_error(message);
  }
  return base;
}

}  // namespace compactgen::testing
