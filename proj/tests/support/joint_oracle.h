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

// Brute-force reference for the joint planner, and a generator of small random
// fact bases to feed it.

#ifndef COMPACTGEN_TESTS_SUPPORT_JOINT_ORACLE_H_
#define COMPACTGEN_TESTS_SUPPORT_JOINT_ORACLE_H_

#include <cstdint>

#include "compactgen/fact_model.h"
#include "compactgen/joint_planner.h"
#include "compactgen/rational.h"
#include "compactgen/text_plan.h"

namespace compactgen::testing {

struct OracleResult {
  Rational objective;
  // Feasible complete (name, fact placement) combinations scored.
  std::int64_t leaves = 0;
};

// Best objective over every subject name, fact selection, plan choice and
// bucket assignment, scored directly from element sets. The first model
// ignores names (they never enter its objective).
OracleResult joint_optimum(const FactBase& base, const PlannerConfig& cfg, ModelKind kind);

// The model objective of a finished plan under `cfg`, scored from its element
// sets and subject name. Matches the planners' objective_value.
Rational score_plan(const TextPlan& plan, const FactBase& base, const PlannerConfig& cfg,
                    ModelKind kind);

struct RandomBaseOptions {
  int max_facts = 5;
  int max_plans = 3;
  int max_target_names = 3;
};

// Valid fact base with 1..max_facts facts over two sections, shared verbs
// and prepositions across relations, some zero-importance facts, several
// target names expressing random fact subsets and a possibly anonymous
// target.
FactBase random_fact_base(std::uint64_t seed, const RandomBaseOptions& options = {});

}  // namespace compactgen::testing

#endif  // COMPACTGEN_TESTS_SUPPORT_JOINT_ORACLE_H_
