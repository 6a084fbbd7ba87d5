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

// Joint content selection, lexicalization, aggregation and (in the extended
// model) subject-name choice as a single binary program.
//
// First model: maximize
//   lambda1 * sum_i a_i imp_i / |F|  -  (1 - lambda1) * sum_j sum_t b_tj / (m |B|)
// with one plan per selected fact, bucket element coverage, a per-bucket cap
// on distinct elements and section purity of every bucket.
//
// Extended model: the fact reward counts d_i (expressed in a sentence or by
// the chosen subject name) and the length term weighs elements and the name
// by their word lengths, with a per-bucket word cap.

#ifndef COMPACTGEN_JOINT_PLANNER_H_
#define COMPACTGEN_JOINT_PLANNER_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "compactgen/bilp.h"
#include "compactgen/element_algebra.h"
#include "compactgen/fact_model.h"
#include "compactgen/text_plan.h"

namespace compactgen {

struct PlannerConfig {
  Rational lambda1{1, 2};
  int m = 1;
  int b_max = 20;
  int w_max = 30;

  // Throws std::invalid_argument when lambda1 is outside [0,1] or a count is
  // not positive.
  void validate() const;
};

enum class ModelKind { kFirst, kExtended };

const char* model_kind_name(ModelKind kind);

enum class VarKind { kA, kL, kB, kD, kM };

// Indices of one variable. i is a fact id, k a plan id, j a bucket (0-based),
// t an element id of the model's catalog, r a subject-name candidate index.
struct VarKey {
  VarKind kind = VarKind::kA;
  int i = 0;
  int k = 0;
  int j = 0;
  int t = 0;
  int r = 0;

  auto tie() const { return std::tie(kind, i, k, j, t, r); }
  bool operator<(const VarKey& o) const { return tie() < o.tie(); }
  bool operator==(const VarKey& o) const { return tie() == o.tie(); }
};

std::string var_name(const VarKey& key);

// Bijection between VarKeys and solver columns.
class VariableIndex {
 public:
  int add(const VarKey& key);
  std::optional<int> find(const VarKey& key) const;
  int at(const VarKey& key) const;
  const VarKey& key(int var) const { return keys_.at(var); }
  int size() const { return static_cast<int>(keys_.size()); }

  int a(int i) const { return at({VarKind::kA, i}); }
  int l(int i, int k, int j) const { return at({VarKind::kL, i, k, j}); }
  int b(int t, int j) const { return at({VarKind::kB, 0, 0, j, t}); }
  int d(int i) const { return at({VarKind::kD, i}); }
  int m(int r) const { return at({VarKind::kM, 0, 0, 0, 0, r}); }

 private:
  std::vector<VarKey> keys_;
  std::map<VarKey, int> columns_;
};

// Denominators of the two objective terms.
struct Normalizers {
  // |F|.
  Rational fact_denominator;
  // m |B| (first model) or m sum_t length(e_t) + sum_r length(n_r).
  Rational length_denominator;
};

struct BuildOptions {
  // Restricts F to these fact ids.
  std::optional<std::set<int>> allowed_facts;
  // Overrides the computed denominators.
  std::optional<Normalizers> normalizers;
  // Adds a_i = 1 for these facts and a_i = 0 for every other fact of F.
  std::optional<std::set<int>> pinned_sentence_facts;
  // Extended model: forces m_r = 1 for this candidate index.
  std::optional<int> pinned_name;
};

struct BuiltModel {
  ModelKind kind = ModelKind::kFirst;
  BilpModel model;
  VariableIndex index;
  // F: facts that have a, d variables. selectable: facts of F with l variables.
  std::vector<int> fact_ids;
  std::vector<int> selectable;
  ElementCatalog catalog;
  // Subject-name candidates (extended model); the sole target name (first).
  std::vector<NLName> names;
  int m = 1;
  Normalizers normalizers;
};

// Throws std::invalid_argument when some entity has several names or the
// target is possibly anonymous; use single_name_projection first.
BuiltModel build_first_model(const FactBase& base, const PlannerConfig& cfg,
                             const BuildOptions& options = {});

// Subject-name candidates come from subject_candidates(base). Throws
// std::invalid_argument when there is none.
BuiltModel build_extended_model(const FactBase& base, const PlannerConfig& cfg,
                                const BuildOptions& options = {});

// Throws std::logic_error when the assignment is inconsistent with the model
// (a_i against its plan choices, b_tj against the bucket element unions,
// d_i against a_i and the chosen name).
TextPlan decode(const BilpSolution& solution, const BuiltModel& built, const FactBase& base);

// Keeps one name per entity: the shortest, ties to the lowest name_id. For a
// possibly-anonymous target the demonstrative candidates compete too, and the
// anonymity flag is cleared.
FactBase single_name_projection(const FactBase& base);

// build -> solve -> decode. The first model runs on single_name_projection
// of the base.
TextPlan plan(const FactBase& base, const PlannerConfig& cfg, ModelKind kind,
              const SolveOptions& options = {});

}  // namespace compactgen

#endif  // COMPACTGEN_JOINT_PLANNER_H_
