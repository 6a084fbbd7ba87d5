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

#include "compactgen/approx_planner.h"

#include <algorithm>

namespace compactgen {

Normalizers full_normalizers(const FactBase& base, const PlannerConfig& cfg, ModelKind kind) {
  std::vector<int> selectable;
  long num_facts = 0;
  for (const Fact& f : base.facts) {
    if (f.importance > 0) selectable.push_back(f.id);
    if (kind == ModelKind::kExtended || f.importance > 0) ++num_facts;
  }
  const ElementCatalog catalog(base, selectable);
  if (kind == ModelKind::kFirst) {
    return {Rational(num_facts), Rational(static_cast<long>(cfg.m) * catalog.num_elements())};
  }
  long element_words = 0;
  for (int t = 0; t < catalog.num_elements(); ++t) element_words += catalog.word_length(t);
  long name_words = 0;
  for (const NLName& n : subject_candidates(base)) name_words += n.word_length;
  return {Rational(num_facts), Rational(cfg.m * element_words + name_words)};
}

TextPlan plan_approx(const FactBase& input, const PlannerConfig& cfg, ModelKind kind,
                     const SolveOptions& options) {
  cfg.validate();
  const FactBase base = kind == ModelKind::kFirst ? single_name_projection(input) : input;
  const Normalizers frozen = full_normalizers(base, cfg, kind);
  PlannerConfig single = cfg;
  single.m = 1;

  std::set<int> remaining;
  for (const Fact& f : base.facts) remaining.insert(f.id);
  auto selectable_left = [&] {
    return std::any_of(remaining.begin(), remaining.end(),
                       [&](int id) { return base.fact(id).importance > 0; });
  };

  TextPlan out;
  std::optional<int> name_index;
  for (int round = 0; round < cfg.m; ++round) {
    BuildOptions build;
    build.allowed_facts = remaining;
    build.normalizers = frozen;
    build.pinned_name = name_index;
    const BuiltModel built = kind == ModelKind::kFirst
                                 ? build_first_model(base, single, build)
                                 : build_extended_model(base, single, build);
    const BilpSolution solution = solve(built.model, options);
    const TextPlan step = decode(solution, built, base);
    out.stats.nodes += step.stats.nodes;
    out.stats.lp_solves += step.stats.lp_solves;
    out.stats.wall_ms += step.stats.wall_ms;
    if (step.status != SolveStatus::kOptimal) out.status = step.status;
    if (!solution.has_assignment) break;

    out.objective_value += step.objective_value;
    if (round == 0) {
      out.subject_name = step.subject_name;
      if (kind == ModelKind::kExtended) {
        out.name_expressed = step.name_expressed;
        for (int id : step.name_expressed) remaining.erase(id);
        for (size_t r = 0; r < built.names.size(); ++r) {
          if (solution.assignment[built.index.m(static_cast<int>(r))]) {
            name_index = static_cast<int>(r);
          }
        }
      }
    } else if (kind == ModelKind::kExtended && frozen.length_denominator > 0) {
      // Every round charges the pinned name; the text contains it once.
      Rational lambda2 = 1 - cfg.lambda1;
      lambda2.canonicalize();
      out.objective_value += lambda2 * out.subject_name->word_length / frozen.length_denominator;
    }
    if (step.buckets.empty()) break;
    for (const Bucket& bucket : step.buckets) {
      for (const PlannedFact& pf : bucket) remaining.erase(pf.fact_id);
      out.buckets.push_back(bucket);
    }
    if (!selectable_left()) break;
  }
  if (kind == ModelKind::kFirst && out.subject_name) {
    const std::set<int> in_sentences = sentence_facts(out);
    for (int id : out.subject_name->expressed_facts) {
      if (!in_sentences.contains(id)) out.name_expressed.insert(id);
    }
  }
  return out;
}

}  // namespace compactgen
