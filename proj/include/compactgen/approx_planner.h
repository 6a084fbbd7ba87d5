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

// Bucket-at-a-time approximation of the joint planner: solve with a single
// bucket, remove the facts it expressed, repeat up to m times.

#ifndef COMPACTGEN_APPROX_PLANNER_H_
#define COMPACTGEN_APPROX_PLANNER_H_

#include "compactgen/joint_planner.h"

namespace compactgen {

// Stops early on an empty bucket or when no selectable fact is left. The
// objective denominators stay those of the full m-bucket model throughout,
// so objective_value is the full model's objective of the returned plan.
// The extended variant chooses the subject name in the first round and keeps
// it afterwards.
TextPlan plan_approx(const FactBase& base, const PlannerConfig& cfg, ModelKind kind,
                     const SolveOptions& options = {});

// Denominators of the full model for (base, cfg); the first model expects a
// single-name base.
Normalizers full_normalizers(const FactBase& base, const PlannerConfig& cfg, ModelKind kind);

}  // namespace compactgen

#endif  // COMPACTGEN_APPROX_PLANNER_H_
