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

#include "compactgen/joint_planner.h"

#include <algorithm>
#include <stdexcept>

namespace compactgen {
namespace {

void add_row(BilpModel& model, std::vector<Term> terms, Comparator cmp, Rational rhs,
             std::string name) {
  model.constraints.push_back(Constraint{std::move(terms), cmp, std::move(rhs), std::move(name)});
}

int new_var(BuiltModel& out, const VarKey& key) {
  const int var = out.index.add(key);
  out.model.add_var(var_name(key));
  return var;
}

std::vector<int> facts_in_scope(const FactBase& base, const BuildOptions& options) {
  std::vector<int> ids;
  for (const Fact& f : base.facts) {
    if (options.allowed_facts && !options.allowed_facts->contains(f.id)) continue;
    ids.push_back(f.id);
  }
  return ids;
}

// Variables and rows shared by both models: a_i for every fact of F, l_ikj
// for every selectable fact, b_tj for every element; plan choice, element
// coverage and section purity rows.
void add_selection_core(BuiltModel& out, const FactBase& base) {
  const ElementCatalog& catalog = out.catalog;
  for (int i : out.fact_ids) new_var(out, {VarKind::kA, i});
  for (int i : out.selectable) {
    for (int k = 0; k < catalog.num_plans(i); ++k) {
      for (int j = 0; j < out.m; ++j) new_var(out, {VarKind::kL, i, k, j});
    }
  }
  for (int t = 0; t < catalog.num_elements(); ++t) {
    for (int j = 0; j < out.m; ++j) new_var(out, {VarKind::kB, 0, 0, j, t});
  }

  // a_i equals the number of (plan, bucket) choices of fact i.
  for (int i : out.fact_ids) {
    std::vector<Term> terms = {{out.index.a(i), 1}};
    if (std::binary_search(out.selectable.begin(), out.selectable.end(), i)) {
      for (int k = 0; k < catalog.num_plans(i); ++k) {
        for (int j = 0; j < out.m; ++j) terms.push_back({out.index.l(i, k, j), -1});
      }
    }
    add_row(out.model, std::move(terms), Comparator::kEqual, 0, "one_plan_" + std::to_string(i));
  }
  // A chosen plan brings all of its elements into the bucket.
  for (int i : out.selectable) {
    for (int k = 0; k < catalog.num_plans(i); ++k) {
      const std::vector<int>& elems = catalog.plan_elements(i, k);
      for (int j = 0; j < out.m; ++j) {
        std::vector<Term> terms;
        for (int t : elems) terms.push_back({out.index.b(t, j), 1});
        terms.push_back({out.index.l(i, k, j), -static_cast<int>(elems.size())});
        add_row(out.model, std::move(terms), Comparator::kGreaterEqual, 0,
                "cover_" + std::to_string(i) + "_" + std::to_string(k) + "_" +
                    std::to_string(j));
      }
    }
  }
  // An element is present only if some chosen plan in the bucket has it.
  for (int t = 0; t < catalog.num_elements(); ++t) {
    for (int j = 0; j < out.m; ++j) {
      std::vector<Term> terms;
      for (const auto& [i, k] : catalog.plans_with(t)) terms.push_back({out.index.l(i, k, j), 1});
      terms.push_back({out.index.b(t, j), -1});
      add_row(out.model, std::move(terms), Comparator::kGreaterEqual, 0,
              "support_" + std::to_string(t) + "_" + std::to_string(j));
    }
  }
  // Facts of different sections never share a bucket.
  for (size_t p = 0; p < out.selectable.size(); ++p) {
    for (size_t q = p + 1; q < out.selectable.size(); ++q) {
      const int i = out.selectable[p];
      const int i2 = out.selectable[q];
      if (base.fact(i).section == base.fact(i2).section) continue;
      for (int j = 0; j < out.m; ++j) {
        std::vector<Term> terms;
        for (int k = 0; k < catalog.num_plans(i); ++k) terms.push_back({out.index.l(i, k, j), 1});
        for (int k = 0; k < catalog.num_plans(i2); ++k) {
          terms.push_back({out.index.l(i2, k, j), 1});
        }
        add_row(out.model, std::move(terms), Comparator::kLessEqual, 1,
                "section_" + std::to_string(i) + "_" + std::to_string(i2) + "_" +
                    std::to_string(j));
      }
    }
  }
}

void add_pins(BuiltModel& out, const BuildOptions& options) {
  if (options.pinned_sentence_facts) {
    for (int i : out.fact_ids) {
      const int value = options.pinned_sentence_facts->contains(i) ? 1 : 0;
      add_row(out.model, {{out.index.a(i), 1}}, Comparator::kEqual, value,
              "pin_a_" + std::to_string(i));
    }
  }
}

void add_objective_term(BilpModel& model, int var, const Rational& coef) {
  if (coef != 0) model.objective.push_back({var, coef});
}

}  // namespace

void PlannerConfig::validate() const {
  if (lambda1 < 0 || lambda1 > 1) throw std::invalid_argument("lambda1 must lie in [0,1]");
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (b_max < 1) throw std::invalid_argument("b_max must be positive");
  if (w_max < 1) throw std::invalid_argument("w_max must be positive");
}

const char* model_kind_name(ModelKind kind) {
  return kind == ModelKind::kFirst ? "first" : "extended";
}

std::string var_name(const VarKey& key) {
  auto s = [](int v) { return std::to_string(v); };
  switch (key.kind) {
    case VarKind::kA: return "a_" + s(key.i);
    case VarKind::kL: return "l_" + s(key.i) + "_" + s(key.k) + "_" + s(key.j);
    case VarKind::kB: return "b_" + s(key.t) + "_" + s(key.j);
    case VarKind::kD: return "d_" + s(key.i);
    case VarKind::kM: return "m_" + s(key.r);
  }
  return "?";
}

int VariableIndex::add(const VarKey& key) {
  const int var = size();
  if (!columns_.emplace(key, var).second) {
    throw std::logic_error("duplicate variable " + var_name(key));
  }
  keys_.push_back(key);
  return var;
}

std::optional<int> VariableIndex::find(const VarKey& key) const {
  auto it = columns_.find(key);
  if (it == columns_.end()) return std::nullopt;
  return it->second;
}

int VariableIndex::at(const VarKey& key) const {
  auto it = columns_.find(key);
  if (it == columns_.end()) throw std::out_of_range("no variable " + var_name(key));
  return it->second;
}

BuiltModel build_first_model(const FactBase& base, const PlannerConfig& cfg,
                             const BuildOptions& options) {
  cfg.validate();
  for (const auto& [entity, names] : base.names) {
    if (names.size() > 1) {
      throw std::invalid_argument("entity \"" + entity +
                                  "\" has several names; the first model needs exactly one "
                                  "(use the extended model or single_name_projection)");
    }
  }
  if (base.possibly_anonymous(base.target)) {
    throw std::invalid_argument("possibly-anonymous target needs the extended model");
  }
  auto target_names = base.names.find(base.target);
  if (target_names == base.names.end() || target_names->second.empty()) {
    throw std::invalid_argument("target \"" + base.target + "\" has no name");
  }

  BuiltModel out;
  out.kind = ModelKind::kFirst;
  out.m = cfg.m;
  out.names = target_names->second;
  for (int i : facts_in_scope(base, options)) {
    if (base.fact(i).importance > 0) out.fact_ids.push_back(i);
  }
  out.selectable = out.fact_ids;
  out.catalog = ElementCatalog(base, out.selectable);
  add_selection_core(out, base);

  const ElementCatalog& catalog = out.catalog;
  out.normalizers = options.normalizers.value_or(
      Normalizers{Rational(static_cast<long>(out.fact_ids.size())),
                  Rational(static_cast<long>(cfg.m) * catalog.num_elements())});
  Rational lambda1 = cfg.lambda1;
  lambda1.canonicalize();
  const Rational lambda2 = 1 - lambda1;
  if (out.normalizers.fact_denominator > 0) {
    for (int i : out.fact_ids) {
      add_objective_term(out.model, out.index.a(i),
                         lambda1 * base.fact(i).importance / out.normalizers.fact_denominator);
    }
  }
  if (out.normalizers.length_denominator > 0) {
    const Rational per_element = -lambda2 / out.normalizers.length_denominator;
    for (int t = 0; t < catalog.num_elements(); ++t) {
      for (int j = 0; j < out.m; ++j) add_objective_term(out.model, out.index.b(t, j), per_element);
    }
  }
  for (int j = 0; j < out.m; ++j) {
    std::vector<Term> terms;
    for (int t = 0; t < catalog.num_elements(); ++t) terms.push_back({out.index.b(t, j), 1});
    add_row(out.model, std::move(terms), Comparator::kLessEqual, cfg.b_max,
            "element_cap_" + std::to_string(j));
  }
  add_pins(out, options);
  return out;
}

BuiltModel build_extended_model(const FactBase& base, const PlannerConfig& cfg,
                                const BuildOptions& options) {
  cfg.validate();
  BuiltModel out;
  out.kind = ModelKind::kExtended;
  out.m = cfg.m;
  out.names = subject_candidates(base);
  if (out.names.empty()) throw std::invalid_argument("target has no name candidates");
  out.fact_ids = facts_in_scope(base, options);
  for (int i : out.fact_ids) {
    if (base.fact(i).importance > 0) out.selectable.push_back(i);
  }
  out.catalog = ElementCatalog(base, out.selectable);
  add_selection_core(out, base);
  const ElementCatalog& catalog = out.catalog;

  for (int i : out.fact_ids) new_var(out, {VarKind::kD, i});
  for (size_t r = 0; r < out.names.size(); ++r) {
    new_var(out, {VarKind::kM, 0, 0, 0, 0, static_cast<int>(r)});
  }

  if (options.normalizers) {
    out.normalizers = *options.normalizers;
  } else {
    long element_words = 0;
    for (int t = 0; t < catalog.num_elements(); ++t) element_words += catalog.word_length(t);
    long name_words = 0;
    for (const NLName& n : out.names) name_words += n.word_length;
    out.normalizers = Normalizers{Rational(static_cast<long>(out.fact_ids.size())),
                                  Rational(cfg.m * element_words + name_words)};
  }
  Rational lambda1 = cfg.lambda1;
  lambda1.canonicalize();
  const Rational lambda2 = 1 - lambda1;
  if (out.normalizers.fact_denominator > 0) {
    for (int i : out.fact_ids) {
      add_objective_term(out.model, out.index.d(i),
                         lambda1 * base.fact(i).importance / out.normalizers.fact_denominator);
    }
  }
  if (out.normalizers.length_denominator > 0) {
    const Rational per_word = -lambda2 / out.normalizers.length_denominator;
    for (int t = 0; t < catalog.num_elements(); ++t) {
      for (int j = 0; j < out.m; ++j) {
        add_objective_term(out.model, out.index.b(t, j), per_word * catalog.word_length(t));
      }
    }
    for (size_t r = 0; r < out.names.size(); ++r) {
      add_objective_term(out.model, out.index.m(static_cast<int>(r)),
                         per_word * out.names[r].word_length);
    }
  }

  for (int j = 0; j < out.m; ++j) {
    std::vector<Term> terms;
    for (int t = 0; t < catalog.num_elements(); ++t) {
      terms.push_back({out.index.b(t, j), catalog.word_length(t)});
    }
    add_row(out.model, std::move(terms), Comparator::kLessEqual, cfg.w_max,
            "word_cap_" + std::to_string(j));
  }
  {
    std::vector<Term> terms;
    for (size_t r = 0; r < out.names.size(); ++r) {
      terms.push_back({out.index.m(static_cast<int>(r)), 1});
    }
    add_row(out.model, std::move(terms), Comparator::kEqual, 1, "one_name");
  }
  // d_i = a_i + sum of m_r over names that express fact i.
  for (int i : out.fact_ids) {
    std::vector<Term> terms = {{out.index.d(i), 1}, {out.index.a(i), -1}};
    for (size_t r = 0; r < out.names.size(); ++r) {
      if (out.names[r].expressed_facts.contains(i)) {
        terms.push_back({out.index.m(static_cast<int>(r)), -1});
      }
    }
    add_row(out.model, std::move(terms), Comparator::kEqual, 0, "expressed_" + std::to_string(i));
  }
  if (options.pinned_name) {
    add_row(out.model, {{out.index.m(*options.pinned_name), 1}}, Comparator::kEqual, 1,
            "pin_name");
  }
  add_pins(out, options);
  return out;
}

TextPlan decode(const BilpSolution& solution, const BuiltModel& built,
                [[maybe_unused]] const FactBase& base) {
  TextPlan out;
  out.status = solution.status;
  out.stats = solution.stats;
  if (built.kind == ModelKind::kFirst) out.subject_name = built.names.front();
  if (!solution.has_assignment) return out;
  out.objective_value = solution.objective_value;

  const Assignment& x = solution.assignment;
  const VariableIndex& index = built.index;
  const ElementCatalog& catalog = built.catalog;
  if (static_cast<int>(x.size()) != index.size()) {
    throw std::logic_error("assignment size does not match the model");
  }
  auto fail = [](const std::string& what) { throw std::logic_error("inconsistent assignment: " + what); };

  std::map<int, int> choices;
  for (int j = 0; j < built.m; ++j) {
    Bucket bucket;
    std::vector<bool> covered(catalog.num_elements(), false);
    for (int i : built.selectable) {
      for (int k = 0; k < catalog.num_plans(i); ++k) {
        if (!x[index.l(i, k, j)]) continue;
        bucket.push_back({i, k});
        ++choices[i];
        for (int t : catalog.plan_elements(i, k)) covered[t] = true;
      }
    }
    for (int t = 0; t < catalog.num_elements(); ++t) {
      if (static_cast<bool>(x[index.b(t, j)]) != covered[t]) {
        fail("b_" + std::to_string(t) + "_" + std::to_string(j) +
             " disagrees with the bucket's plans");
      }
    }
    if (!bucket.empty()) out.buckets.push_back(std::move(bucket));
  }
  for (int i : built.fact_ids) {
    const int expected = choices.contains(i) ? choices[i] : 0;
    if (x[index.a(i)] != expected) fail("a_" + std::to_string(i) + " disagrees with its plans");
  }

  const std::set<int> in_sentences = sentence_facts(out);
  auto expressed_by = [&](const NLName& name) {
    std::set<int> facts;
    for (int id : name.expressed_facts) {
      if (!in_sentences.contains(id)) facts.insert(id);
    }
    return facts;
  };

  if (built.kind == ModelKind::kFirst) {
    out.name_expressed = expressed_by(*out.subject_name);
    return out;
  }

  int chosen = -1;
  for (size_t r = 0; r < built.names.size(); ++r) {
    if (!x[index.m(static_cast<int>(r))]) continue;
    if (chosen >= 0) fail("several names chosen");
    chosen = static_cast<int>(r);
  }
  if (chosen < 0) fail("no name chosen");
  for (int i : built.fact_ids) {
    const int via_name = built.names[chosen].expressed_facts.contains(i) ? 1 : 0;
    if (x[index.d(i)] != x[index.a(i)] + via_name) {
      fail("d_" + std::to_string(i) + " disagrees with a_" + std::to_string(i) + " and the name");
    }
  }
  out.subject_name = built.names[chosen];
  out.name_expressed = expressed_by(*out.subject_name);
  return out;
}

FactBase single_name_projection(const FactBase& base) {
  FactBase out = base;
  auto pick = [](const std::vector<NLName>& names) {
    return *std::min_element(names.begin(), names.end(), [](const NLName& a, const NLName& b) {
      return std::tie(a.word_length, a.name_id) < std::tie(b.word_length, b.name_id);
    });
  };
  for (auto& [entity, names] : out.names) {
    if (entity == base.target || names.size() <= 1) continue;
    names = {pick(names)};
  }
  const std::vector<NLName> candidates = subject_candidates(base);
  if (!candidates.empty()) out.names[base.target] = {pick(candidates)};
  out.anonymity[base.target] = false;
  return out;
}

TextPlan plan(const FactBase& base, const PlannerConfig& cfg, ModelKind kind,
              const SolveOptions& options) {
  cfg.validate();
  if (kind == ModelKind::kFirst) {
    const FactBase projected = single_name_projection(base);
    const BuiltModel built = build_first_model(projected, cfg);
    return decode(solve(built.model, options), built, projected);
  }
  const BuiltModel built = build_extended_model(base, cfg);
  return decode(solve(built.model, options), built, base);
}

}  // namespace compactgen
