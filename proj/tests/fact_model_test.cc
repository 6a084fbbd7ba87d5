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

#include <gtest/gtest.h>

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "support/fixtures.h"
#include "support/joint_oracle.h"

namespace compactgen {
namespace {

using nlohmann::json;

json fixture_json(const std::string& name) {
  std::ifstream in(testing::fixture_path(name));
  return json::parse(in);
}

std::vector<ViolationCode> codes_of(const json& doc) {
  try {
    load_fact_base(doc.dump());
  } catch (const ValidationError& e) {
    std::vector<ViolationCode> out;
    for (const Violation& v : e.violations()) out.push_back(v.code);
    return out;
  }
  return {};
}

bool has_code(const json& doc, ViolationCode code) {
  const std::vector<ViolationCode> codes = codes_of(doc);
  return std::find(codes.begin(), codes.end(), code) != codes.end();
}

TEST(LoadTest, EveryFixtureLoads) {
  for (const std::string& name : testing::fixture_names()) {
    EXPECT_NO_THROW(testing::load_fixture(name)) << name;
  }
}

TEST(LoadTest, MiniWineShape) {
  const FactBase base = testing::load_fixture("mini_wine");
  EXPECT_EQ(base.target, "MountadamRiesling");
  EXPECT_EQ(base.num_facts(), 5);
  EXPECT_EQ(base.fact(2).importance, Rational(1, 2));
  EXPECT_TRUE(base.possibly_anonymous(base.target));
  EXPECT_EQ(base.names.at(base.target).size(), 3u);
  EXPECT_EQ(base.names.at(base.target)[2].word_length, 4);
}

TEST(LoadTest, SerializeRoundTrips) {
  for (const std::string& name : testing::fixture_names()) {
    const FactBase base = testing::load_fixture(name);
    EXPECT_EQ(load_fact_base(serialize_fact_base(base)), base) << name;
  }
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const FactBase base = testing::random_fact_base(seed);
    EXPECT_EQ(load_fact_base(serialize_fact_base(base)), base) << "seed " << seed;
  }
}

TEST(LoadTest, MalformedJsonIsAParseError) {
  EXPECT_THROW(load_fact_base("{\"target\": "), ParseError);
  EXPECT_THROW(load_fact_base("[]"), ParseError);
}

TEST(LoadTest, UnknownKeyIsAParseError) {
  json doc = fixture_json("mini_wine");
  doc["colour"] = "red";
  EXPECT_THROW(load_fact_base(doc.dump()), ParseError);
}

TEST(LoadTest, MissingFileThrows) {
  EXPECT_ANY_THROW(load_fact_base_file("/nonexistent/base.json"));
}

TEST(ValidateTest, ImportanceOutsideUnitInterval) {
  json doc = fixture_json("mini_wine");
  doc["facts"][0]["importance"] = 1.5;
  EXPECT_TRUE(has_code(doc, ViolationCode::kImportanceOutOfRange));
}

TEST(ValidateTest, FactIdsMustBeSequential) {
  json doc = fixture_json("mini_wine");
  doc["facts"][1]["id"] = 7;
  EXPECT_TRUE(has_code(doc, ViolationCode::kFactIdSequence));
}

TEST(ValidateTest, FactWithoutPlan) {
  json doc = fixture_json("mini_wine");
  doc["plans"].erase("hasSugar");
  EXPECT_TRUE(has_code(doc, ViolationCode::kMissingPlan));
}

TEST(ValidateTest, PlanNeedsExactlyOneOwnerReference) {
  json doc = fixture_json("bancroft_made");
  doc["plans"]["madeBy"][0]["slots"].push_back(doc["plans"]["madeBy"][0]["slots"][0]);
  EXPECT_TRUE(has_code(doc, ViolationCode::kOwnerRefCount));
}

TEST(ValidateTest, SubjectMustBeTheTarget) {
  json doc = fixture_json("mini_wine");
  doc["facts"][0]["subject"] = "Riesling";
  EXPECT_TRUE(has_code(doc, ViolationCode::kSubjectMismatch));
}

TEST(ValidateTest, ExpressedFactMustExist) {
  json doc = fixture_json("bancroft_names");
  doc["names"][0]["expressed_facts"].push_back(42);
  EXPECT_TRUE(has_code(doc, ViolationCode::kDanglingExpressedFact));
}

TEST(ValidateTest, ObjectEntitiesNeedNames) {
  json doc = fixture_json("bancroft_made");
  doc["facts"][0]["object"]["members"][0] = "Nobody";
  EXPECT_TRUE(has_code(doc, ViolationCode::kMissingName));
}

TEST(ValidateTest, SingleObjectHasOneMember) {
  json doc = fixture_json("bancroft_made");
  doc["facts"][0]["object"]["members"].push_back("Bancroft");
  EXPECT_TRUE(has_code(doc, ViolationCode::kSingleArity));
}

TEST(ValidateTest, EmptyPronoun) {
  json doc = fixture_json("mini_wine");
  doc["pronoun"] = "";
  EXPECT_TRUE(has_code(doc, ViolationCode::kEmptyPronoun));
}

TEST(ValidateTest, RandomBasesAreValid) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    EXPECT_EQ(validate(testing::random_fact_base(seed)).size(), 0u) << "seed " << seed;
  }
}

TEST(CandidatesTest, AnonymousTargetGetsDemonstratives) {
  const FactBase base = testing::load_fixture("mini_wine");
  const std::vector<NLName> names = subject_candidates(base);
  ASSERT_GE(names.size(), 5u);
  int plain = 0;
  int np = 0;
  for (const NLName& n : names) {
    if (n.variant == NameVariant::kDemonstrative) {
      ++plain;
      EXPECT_TRUE(n.expressed_facts.empty());
      EXPECT_EQ(n.word_length, 1);
    }
    if (n.variant == NameVariant::kDemonstrativeNp) {
      ++np;
      EXPECT_EQ(n.ancestor, "Riesling");
      EXPECT_EQ(n.expressed_facts, (std::set<int>{1}));
      EXPECT_EQ(n.word_length, 2);
    }
  }
  EXPECT_EQ(plain, 1);
  EXPECT_EQ(np, 1);
}

TEST(CandidatesTest, NamedTargetKeepsDeclaredNames) {
  const FactBase base = testing::load_fixture("disease");
  const std::vector<NLName> names = subject_candidates(base);
  for (const NLName& n : names) EXPECT_EQ(n.variant, NameVariant::kName);
  EXPECT_EQ(names.size(), base.names.at(base.target).size());
}

TEST(PlanKeyTest, ModifierWrapsRelation) {
  Fact f;
  f.relation = "hasBattery";
  EXPECT_EQ(f.plan_key(), "hasBattery");
  f.modifier = "maxCardinality";
  EXPECT_EQ(f.plan_key(), "maxCardinality(hasBattery)");
}

TEST(AncestorTest, IsAAndInstanceOf) {
  EXPECT_TRUE(is_ancestor_relation("isA"));
  EXPECT_TRUE(is_ancestor_relation("instanceOf"));
  EXPECT_FALSE(is_ancestor_relation("madeBy"));
}

}  // namespace
}  // namespace compactgen
