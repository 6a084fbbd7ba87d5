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

#include <gtest/gtest.h>

#include <cstdlib>

#include "compactgen/joint_planner.h"
#include "support/fixtures.h"
#include "support/joint_oracle.h"

namespace compactgen {
namespace {

NLName name_of(const FactBase& base, NameVariant variant, int name_id = 0) {
  for (const NLName& n : subject_candidates(base)) {
    if (n.variant == variant && (variant != NameVariant::kName || n.name_id == name_id)) return n;
  }
  throw std::logic_error("no such candidate");
}

int plan_with_token(const FactBase& base, int fact_id, const std::string& token) {
  const std::vector<SentencePlan>& plans = base.plans_for(base.fact(fact_id));
  for (size_t k = 0; k < plans.size(); ++k) {
    for (const Slot& s : plans[k].slots) {
      if (std::find(s.surface.begin(), s.surface.end(), token) != s.surface.end()) {
        return static_cast<int>(k);
      }
    }
  }
  throw std::logic_error("no plan with " + token);
}

TEST(RealizeTest, EmptyPlan) {
  const RealizedText t = realize(TextPlan{}, testing::load_fixture("mini_wine"));
  EXPECT_EQ(t.text, "");
  EXPECT_EQ(t.words, 0);
  EXPECT_TRUE(t.sentences.empty());
}

TEST(RealizeTest, SingleFactWithDemonstrative) {
  const FactBase base = testing::load_fixture("mini_wine");
  TextPlan p;
  p.subject_name = name_of(base, NameVariant::kDemonstrative);
  p.buckets = {{{1, plan_with_token(base, 1, "kind")}}};
  const RealizedText t = realize(p, base);
  EXPECT_EQ(t.text, "This is a kind of Riesling.");
  EXPECT_EQ(t.words, 6);
}

TEST(RealizeTest, DemonstrativeNounPhrase) {
  const FactBase base = testing::load_fixture("mini_wine");
  EXPECT_EQ(name_tokens(name_of(base, NameVariant::kDemonstrativeNp), base),
            (std::vector<std::string>{"this", "Riesling"}));
}

TEST(AggregateTest, SharedVerbMergesComplements) {
  const FactBase base = testing::load_fixture("bancroft_made");
  TextPlan p;
  p.subject_name = base.names.at(base.target)[0];
  p.buckets = {{{1, 0}, {2, 0}}};
  EXPECT_EQ(realize(p, base).text, "Bancroft Chardonnay is made by Mountadam in Bancroft.");
  EXPECT_EQ(aggregate(p.buckets[0], base, "it").rule, AggregationRule::kSharedVerb);
}

TEST(AggregateTest, DifferentVerbsJoinVerbPhrases) {
  const FactBase base = testing::load_fixture("bancroft_produced");
  TextPlan p;
  p.subject_name = base.names.at(base.target)[0];
  p.buckets = {{{1, 0}, {2, 0}}};
  EXPECT_EQ(realize(p, base).text,
            "Bancroft Chardonnay is produced by Mountadam and made in Bancroft.");
  EXPECT_EQ(aggregate(p.buckets[0], base, "it").rule, AggregationRule::kSharedSubject);
}

TEST(AggregateTest, SingletonIsTheSimpleSentence) {
  const FactBase base = testing::load_fixture("bancroft_made");
  const AggregatedSentence s = aggregate({{2, 0}}, base, "it");
  EXPECT_EQ(s.rule, AggregationRule::kSingle);
  EXPECT_TRUE(s.subject_first);
  EXPECT_EQ(s.predicate, (std::vector<std::string>{"is", "made", "in", "Bancroft"}));
}

TEST(AggregateTest, ConjunctionObjectUsesCommasAndAnd) {
  const FactBase base = testing::load_fixture("disease");
  const AggregatedSentence s = aggregate({{4, 0}}, base, "it");
  EXPECT_EQ(s.predicate,
            (std::vector<std::string>{"causes", "fatigue,", "muscle", "aches", "and", "dizziness"}));
}

TEST(AggregateTest, SentenceNotStartingWithSubjectBecomesAClause) {
  const FactBase base = testing::random_fact_base(3);
  // A plan that opens with "the origin of": the subject is inside the clause.
  FactBase edited = base;
  Slot the{SlotKind::kFixedString, "", {"the"}, {}};
  Slot origin{SlotKind::kNounOrAdjective, "", {"origin"}, {}};
  Slot of{SlotKind::kPreposition, "", {"of"}, {}};
  Slot owner{SlotKind::kOwnerRef, "nom", {}, {}};
  Slot is{SlotKind::kVerb, "", {"is"}, {}};
  Slot filler{SlotKind::kFillerRef, "acc", {}, {}};
  const Fact& f = edited.fact(1);
  edited.plans[f.plan_key()] = {{f.plan_key(), 0, {the, origin, of, owner, is, filler}}};
  const AggregatedSentence s = aggregate({{1, 0}}, edited, "it");
  EXPECT_FALSE(s.subject_first);
  EXPECT_EQ(s.predicate[3], kSubjectPlaceholder);

  TextPlan p;
  p.subject_name = edited.names.at(edited.target)[0];
  p.buckets = {{{1, 0}}};
  const std::string text = realize(p, edited).text;
  EXPECT_EQ(text.rfind("The origin of ", 0), 0u) << text;
}

TEST(OrderTest, SectionsInFactOrder) {
  const FactBase base = testing::load_fixture("mini_wine");
  TextPlan p;
  // taste bucket first, identity bucket second, facts out of order.
  p.buckets = {{{5, 0}, {4, 0}}, {{3, 0}, {1, 0}}};
  const TextPlan o = order(p, base);
  ASSERT_EQ(o.buckets.size(), 2u);
  EXPECT_EQ(o.buckets[0], (Bucket{{1, 0}, {3, 0}}));
  EXPECT_EQ(o.buckets[1], (Bucket{{4, 0}, {5, 0}}));
  EXPECT_EQ(order(TextPlan{}, base).buckets.size(), 0u);
  TextPlan single;
  single.buckets = {{{1, 0}}};
  EXPECT_EQ(order(single, base).buckets, single.buckets);
}

TEST(RealizeTest, NameOnceThenPronoun) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const FactBase base = testing::random_fact_base(seed);
    PlannerConfig cfg;
    cfg.lambda1 = Rational(4, 5);
    cfg.m = 3;
    const TextPlan p = plan(base, cfg, ModelKind::kExtended);
    const RealizedText t = realize(p, base);
    ASSERT_EQ(t.sentences.size(), p.buckets.size()) << "seed " << seed;
    EXPECT_EQ(realize(p, base).text, t.text);
    if (p.buckets.empty()) continue;
    std::string name;
    for (const std::string& w : name_tokens(*p.subject_name, base)) name += (name.empty() ? "" : " ") + w;
    name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    if (t.sentences[0].find("The origin of") != 0) {
      EXPECT_EQ(t.sentences[0].rfind(name + " ", 0), 0u) << t.sentences[0];
    }
    for (size_t s = 1; s < t.sentences.size(); ++s) {
      if (t.sentences[s].find("The origin of") == 0) continue;
      EXPECT_EQ(t.sentences[s].rfind("It ", 0), 0u) << t.sentences[s];
    }
  }
}

TEST(RealizeTest, WordCountNearTheEstimate) {
  for (const std::string& fixture : testing::fixture_names()) {
    const FactBase base = testing::load_fixture(fixture);
    for (int tenth = 1; tenth <= 9; ++tenth) {
      PlannerConfig cfg;
      cfg.lambda1 = Rational(tenth, 10);
      cfg.lambda1.canonicalize();
      cfg.m = 3;
      const TextPlan p = plan(base, cfg, ModelKind::kExtended);
      const int estimate = estimate_length(p, base, LengthMetric::kWords);
      const int words = realize(p, base).words;
      if (p.buckets.empty()) continue;
      EXPECT_LE(std::abs(words - estimate), 3)
          << fixture << " lambda1=" << tenth << "/10: " << realize(p, base).text;
    }
  }
}

TEST(CountWordsTest, Whitespace) {
  EXPECT_EQ(count_words(""), 0);
  EXPECT_EQ(count_words("  a  b\tc\n"), 3);
  EXPECT_EQ(count_words("It is red, dry and sweet."), 6);
}

}  // namespace
}  // namespace compactgen
