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

#include "compactgen/pipeline_baselines.h"

#include <gtest/gtest.h>

#include "compactgen/plan_check.h"
#include "support/fixtures.h"
#include "support/joint_oracle.h"

namespace compactgen {
namespace {

constexpr BaselineKind kKinds[] = {BaselineKind::kPipeline, BaselineKind::kStoch,
                                   BaselineKind::kShort, BaselineKind::kShortStar,
                                   BaselineKind::kBeam};

BaselineConfig config(int M, int K, std::uint64_t seed) {
  BaselineConfig cfg;
  cfg.M = M;
  cfg.K = K;
  cfg.seed = seed;
  return cfg;
}

PlanLimits limits_for(BaselineKind kind, const BaselineConfig& cfg) {
  PlanLimits limits;
  if (baseline_metric(kind) == LengthMetric::kWords) {
    limits.w_max = cfg.w_max;
  } else {
    limits.b_max = cfg.b_max;
  }
  return limits;
}

bool same_text(const TextPlan& a, const TextPlan& b) {
  return a.buckets == b.buckets && a.subject_name == b.subject_name &&
         a.name_expressed == b.name_expressed && a.objective_value == b.objective_value;
}

TEST(BaselineTest, Names) {
  EXPECT_STREQ(baseline_name(BaselineKind::kPipeline), "pipeline");
  EXPECT_STREQ(baseline_name(BaselineKind::kShortStar), "pipeline-short-star");
  EXPECT_EQ(baseline_metric(BaselineKind::kShortStar), LengthMetric::kWords);
  EXPECT_EQ(baseline_metric(BaselineKind::kBeam), LengthMetric::kElements);
}

TEST(BaselineTest, ConfigValidation) {
  EXPECT_THROW(config(0, 2, 1).validate(), std::invalid_argument);
  EXPECT_THROW(config(3, 0, 1).validate(), std::invalid_argument);
  EXPECT_EQ(config(3, 3, 1).trials(), 81);
}

TEST(BaselineTest, DeterministicUnderSeed) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const FactBase base = testing::random_fact_base(seed);
    for (BaselineKind kind : kKinds) {
      const BaselineConfig cfg = config(3, 2, seed);
      EXPECT_TRUE(same_text(run_baseline(kind, base, cfg), run_baseline(kind, base, cfg)))
          << baseline_name(kind) << " seed " << seed;
    }
  }
}

TEST(BaselineTest, PlansPassIndependentChecks) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const FactBase base = testing::random_fact_base(seed);
    for (BaselineKind kind : kKinds) {
      BaselineConfig cfg = config(static_cast<int>(seed % 5) + 1, 2, seed);
      cfg.b_max = 6;
      cfg.w_max = 10;
      EXPECT_EQ(check_plan(run_baseline(kind, base, cfg), base, limits_for(kind, cfg)),
                std::vector<std::string>{})
          << baseline_name(kind) << " seed " << seed;
    }
  }
}

TEST(BaselineTest, ObjectiveIsTheEstimatedRatio) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const FactBase base = testing::random_fact_base(seed);
    for (BaselineKind kind : kKinds) {
      const TextPlan p = run_baseline(kind, base, config(3, 2, seed));
      const int length = estimate_length(p, base, baseline_metric(kind));
      const Rational expected =
          length == 0 ? Rational(0)
                      : Rational(static_cast<long>(reported_facts(p, base).size()), length);
      Rational canonical = expected;
      canonical.canonicalize();
      EXPECT_EQ(p.objective_value, canonical) << baseline_name(kind) << " seed " << seed;
    }
  }
}

TEST(BaselineTest, SelectsAtMostMFacts) {
  const FactBase base = testing::load_fixture("camera");
  for (BaselineKind kind : {BaselineKind::kPipeline, BaselineKind::kStoch, BaselineKind::kShort,
                            BaselineKind::kShortStar}) {
    for (int M = 1; M <= 9; ++M) {
      EXPECT_LE(sentence_facts(run_baseline(kind, base, config(M, 2, 5))).size(),
                static_cast<size_t>(M))
          << baseline_name(kind) << " M=" << M;
    }
  }
}

TEST(ShortTest, MostImportantFactsWithShortestPlans) {
  const FactBase base = testing::load_fixture("mini_wine");
  const TextPlan p = pipeline_short(base, config(4, 1, 0));
  // Fact 2 is the only one of importance 1/2.
  EXPECT_EQ(sentence_facts(p), (std::set<int>{1, 3, 4, 5}));
  for (const Bucket& b : p.buckets) {
    for (const PlannedFact& pf : b) {
      const Fact& f = base.fact(pf.fact_id);
      const auto& plans = base.plans_for(f);
      const size_t chosen = extract_elements(plans[pf.plan_id], f).size();
      for (const SentencePlan& other : plans) {
        EXPECT_LE(chosen, extract_elements(other, f).size());
      }
    }
  }
}

TEST(ShortStarTest, PicksTheNameExpressingMostFacts) {
  const FactBase base = testing::load_fixture("bancroft_names");
  const TextPlan p = pipeline_short_star(base, config(2, 1, 0));
  ASSERT_TRUE(p.subject_name.has_value());
  EXPECT_EQ(p.subject_name->name_id, 2);
  for (int i : p.name_expressed) EXPECT_FALSE(sentence_facts(p).count(i));
}

TEST(BeamTest, WidthOneIsTheShortText) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const FactBase base = testing::random_fact_base(seed);
    const BaselineConfig cfg = config(3, 1, seed);
    EXPECT_TRUE(same_text(pipeline_beam(base, cfg), pipeline_short(base, cfg))) << "seed " << seed;
  }
}

TEST(BeamTest, WiderBeamNeverScoresLower) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const FactBase base = testing::random_fact_base(seed);
    Rational previous = -1;
    for (int K = 1; K <= 4; ++K) {
      const Rational value = pipeline_beam(base, config(3, K, seed)).objective_value;
      EXPECT_GE(value, previous) << "seed " << seed << " K=" << K;
      previous = value;
    }
  }
}

TEST(PipelineTest, SeedChangesTheDraws) {
  const FactBase base = testing::load_fixture("camera");
  int differing = 0;
  const TextPlan first = pipeline(base, config(4, 1, 0));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    if (!same_text(first, pipeline(base, config(4, 1, seed)))) ++differing;
  }
  EXPECT_GT(differing, 0);
}

}  // namespace
}  // namespace compactgen
