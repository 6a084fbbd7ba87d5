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

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "compactgen/element_algebra.h"

namespace compactgen {
namespace {

// Plan id per selected fact.
using PlanChoice = std::map<int, int>;

class Context {
 public:
  Context(const FactBase& base, const BaselineConfig& cfg, LengthMetric metric)
      : base_(base), cfg_(cfg), metric_(metric), names_(subject_candidates(base)) {
    cfg.validate();
    cap_ = metric == LengthMetric::kWords ? cfg.w_max : cfg.b_max;
    for (const Fact& f : base.facts) {
      if (f.importance == 0) continue;
      nonzero_.push_back(f.id);
      std::vector<ElementSet>& sets = elements_[f.id];
      for (const SentencePlan& p : base.plans_for(f)) sets.push_back(extract_elements(p, f));
    }
  }

  const FactBase& base() const { return base_; }
  const BaselineConfig& cfg() const { return cfg_; }
  LengthMetric metric() const { return metric_; }
  int cap() const { return cap_; }
  const std::vector<NLName>& names() const { return names_; }
  const std::vector<int>& nonzero() const { return nonzero_; }

  const ElementSet& elements(int fact, int k) const { return elements_.at(fact).at(k); }
  int num_plans(int fact) const { return static_cast<int>(elements_.at(fact).size()); }

  int measure(const ElementSet& set) const {
    if (metric_ == LengthMetric::kElements) return static_cast<int>(set.size());
    int words = 0;
    for (const auto& [key, e] : set) words += element_word_length(e, base_);
    return words;
  }
  int plan_length(int fact, int k) const { return measure(elements(fact, k)); }

  // Shortest plan of a fact, ties to the lowest plan id.
  int shortest_plan(int fact) const {
    int best = 0;
    for (int k = 1; k < num_plans(fact); ++k) {
      if (plan_length(fact, k) < plan_length(fact, best)) best = k;
    }
    return best;
  }
  int shortest_length(int fact) const { return plan_length(fact, shortest_plan(fact)); }

  int order_key(int fact) const { return base_.fact(fact).order_key; }
  const std::string& section(int fact) const { return base_.fact(fact).section; }

 private:
  const FactBase& base_;
  const BaselineConfig& cfg_;
  LengthMetric metric_;
  int cap_ = 0;
  std::vector<NLName> names_;
  std::vector<int> nonzero_;
  std::map<int, std::vector<ElementSet>> elements_;
};

// Facts grouped by topical section; sections ordered by their smallest
// order key, facts within a section by order key.
std::vector<std::vector<int>> by_section(const Context& ctx, std::vector<int> facts) {
  std::sort(facts.begin(), facts.end(), [&](int a, int b) {
    return std::pair(ctx.order_key(a), a) < std::pair(ctx.order_key(b), b);
  });
  std::vector<std::vector<int>> groups;
  std::map<std::string, size_t> slot;
  for (int f : facts) {
    auto [it, inserted] = slot.emplace(ctx.section(f), groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(f);
  }
  return groups;
}

ElementSet bucket_elements(const Context& ctx, const Bucket& bucket) {
  ElementSet out;
  for (const PlannedFact& pf : bucket) {
    const ElementSet& s = ctx.elements(pf.fact_id, pf.plan_id);
    out.insert(s.begin(), s.end());
  }
  return out;
}

// Consecutive facts of a section share a bucket while the bucket has fewer
// than max_merge facts and stays within the cap. A fact over the cap on its
// own is dropped.
std::vector<Bucket> greedy_buckets(const Context& ctx, const std::vector<int>& facts,
                                   const PlanChoice& plans) {
  std::vector<Bucket> out;
  for (const std::vector<int>& section : by_section(ctx, facts)) {
    Bucket current;
    ElementSet current_set;
    for (int f : section) {
      const int k = plans.at(f);
      const ElementSet& s = ctx.elements(f, k);
      if (ctx.measure(s) > ctx.cap()) continue;
      ElementSet merged = distinct_union(current_set, s);
      if (!current.empty() && (static_cast<int>(current.size()) >= ctx.cfg().max_merge ||
                               ctx.measure(merged) > ctx.cap())) {
        out.push_back(std::move(current));
        current.clear();
        merged = s;
      }
      current.push_back({f, k});
      current_set = std::move(merged);
    }
    if (!current.empty()) out.push_back(std::move(current));
  }
  return out;
}

TextPlan make_plan(const Context& ctx, std::vector<Bucket> buckets, int name) {
  TextPlan plan;
  plan.buckets = std::move(buckets);
  if (name >= 0) {
    plan.subject_name = ctx.names().at(name);
    const std::set<int> in_sentences = sentence_facts(plan);
    for (int id : plan.subject_name->expressed_facts) {
      if (!in_sentences.contains(id)) plan.name_expressed.insert(id);
    }
  }
  const int length = estimate_length(plan, ctx.base(), ctx.metric());
  const auto reported = static_cast<long>(reported_facts(plan, ctx.base()).size());
  plan.objective_value = length == 0 ? Rational(0) : Rational(reported, length);
  plan.objective_value.canonicalize();
  return plan;
}

class BestOf {
 public:
  void offer(TextPlan plan) {
    if (!best_ || plan.objective_value > best_->objective_value) best_ = std::move(plan);
  }
  TextPlan take() { return best_ ? std::move(*best_) : TextPlan{}; }

 private:
  std::optional<TextPlan> best_;
};

std::vector<int> take_first(std::vector<int> facts, int m) {
  if (static_cast<int>(facts.size()) > m) facts.resize(m);
  return facts;
}

int shortest_name(const Context& ctx) {
  int best = -1;
  for (size_t r = 0; r < ctx.names().size(); ++r) {
    if (best < 0 || ctx.names()[r].word_length < ctx.names()[best].word_length) {
      best = static_cast<int>(r);
    }
  }
  return best;
}

int uniform_index(std::mt19937_64& rng, size_t n) {
  return std::uniform_int_distribution<int>(0, static_cast<int>(n) - 1)(rng);
}

int weighted_index(std::mt19937_64& rng, const std::vector<double>& weights) {
  return std::discrete_distribution<int>(weights.begin(), weights.end())(rng);
}

// Ranking by importance, then shortest plan, then id.
std::vector<int> rank_short(const Context& ctx, std::vector<int> facts) {
  std::sort(facts.begin(), facts.end(), [&](int a, int b) {
    const Rational& ia = ctx.base().fact(a).importance;
    const Rational& ib = ctx.base().fact(b).importance;
    if (ia != ib) return ia > ib;
    if (ctx.shortest_length(a) != ctx.shortest_length(b)) {
      return ctx.shortest_length(a) < ctx.shortest_length(b);
    }
    return a < b;
  });
  return facts;
}

PlanChoice shortest_plans(const Context& ctx) {
  PlanChoice plans;
  for (int f : ctx.nonzero()) plans[f] = ctx.shortest_plan(f);
  return plans;
}

TextPlan short_text(const Context& ctx, const std::vector<int>& facts, const PlanChoice& plans,
                    int name) {
  return make_plan(ctx, greedy_buckets(ctx, facts, plans), name);
}

// Moves one bucketed fact to another bucket of its section or to a new
// bucket. Returns false when the result breaks max_merge or the cap.
bool apply_move(const Context& ctx, std::vector<Bucket>& buckets, double u_fact,
                double u_target) {
  std::vector<std::pair<int, int>> positions;
  for (size_t b = 0; b < buckets.size(); ++b) {
    for (size_t p = 0; p < buckets[b].size(); ++p) {
      positions.emplace_back(static_cast<int>(b), static_cast<int>(p));
    }
  }
  if (positions.empty()) return true;
  const auto [from, pos] =
      positions[std::min(positions.size() - 1, static_cast<size_t>(u_fact * positions.size()))];
  const PlannedFact moved = buckets[from][pos];
  std::vector<int> options;
  for (size_t b = 0; b < buckets.size(); ++b) {
    if (ctx.section(buckets[b].front().fact_id) == ctx.section(moved.fact_id)) {
      options.push_back(static_cast<int>(b));
    }
  }
  options.push_back(-1);
  const int target =
      options[std::min(options.size() - 1, static_cast<size_t>(u_target * options.size()))];
  if (target == from) return true;
  if (target == -1 && buckets[from].size() == 1) return true;

  buckets[from].erase(buckets[from].begin() + pos);
  if (target == -1) {
    buckets.push_back({moved});
  } else {
    buckets[target].push_back(moved);
    if (static_cast<int>(buckets[target].size()) > ctx.cfg().max_merge ||
        ctx.measure(bucket_elements(ctx, buckets[target])) > ctx.cap()) {
      return false;
    }
  }
  std::erase_if(buckets, [](const Bucket& b) { return b.empty(); });
  return true;
}

std::mt19937_64 axis_rng(std::uint64_t seed, int axis, int variant) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(axis), static_cast<std::uint32_t>(variant)};
  return std::mt19937_64(seq);
}

}  // namespace

void BaselineConfig::validate() const {
  if (M < 1) throw std::invalid_argument("M must be positive");
  if (K < 1) throw std::invalid_argument("K must be positive");
  if (b_max < 1 || w_max < 1) throw std::invalid_argument("caps must be positive");
  if (max_merge < 1) throw std::invalid_argument("max_merge must be positive");
}

const char* baseline_name(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::kPipeline: return "pipeline";
    case BaselineKind::kStoch: return "pipeline-stoch";
    case BaselineKind::kShort: return "pipeline-short";
    case BaselineKind::kShortStar: return "pipeline-short-star";
    case BaselineKind::kBeam: return "pipeline-beam";
  }
  return "unknown";
}

LengthMetric baseline_metric(BaselineKind kind) {
  return kind == BaselineKind::kShortStar ? LengthMetric::kWords : LengthMetric::kElements;
}

TextPlan pipeline(const FactBase& base, const BaselineConfig& cfg) {
  const Context ctx(base, cfg, LengthMetric::kElements);
  std::vector<int> ranked = ctx.nonzero();
  std::mt19937_64 selection_rng(cfg.seed);
  std::shuffle(ranked.begin(), ranked.end(), selection_rng);
  std::stable_sort(ranked.begin(), ranked.end(), [&](int a, int b) {
    return base.fact(a).importance > base.fact(b).importance;
  });
  const std::vector<int> selected = take_first(ranked, cfg.M);
  std::map<std::string, std::vector<int>> by_relation;
  for (int f : selected) by_relation[base.fact(f).plan_key()].push_back(f);

  BestOf best;
  for (int trial = 0; trial < cfg.trials(); ++trial) {
    std::mt19937_64 rng(cfg.seed ^ static_cast<std::uint64_t>(trial));
    PlanChoice plans;
    for (const auto& [relation, facts] : by_relation) {
      const int k = uniform_index(rng, ctx.num_plans(facts.front()));
      for (int f : facts) plans[f] = k;
    }
    const int name = ctx.names().empty() ? -1 : uniform_index(rng, ctx.names().size());
    best.offer(make_plan(ctx, greedy_buckets(ctx, selected, plans), name));
  }
  return best.take();
}

TextPlan pipeline_stoch(const FactBase& base, const BaselineConfig& cfg) {
  const Context ctx(base, cfg, LengthMetric::kElements);
  BestOf best;
  for (int trial = 0; trial < cfg.trials(); ++trial) {
    std::mt19937_64 rng(cfg.seed ^ static_cast<std::uint64_t>(trial));

    std::vector<int> pool = ctx.nonzero();
    std::vector<int> selected;
    while (!pool.empty() && static_cast<int>(selected.size()) < cfg.M) {
      std::vector<double> weights;
      for (int f : pool) weights.push_back(1.0 / ctx.shortest_length(f));
      const int pick = weighted_index(rng, weights);
      selected.push_back(pool[pick]);
      pool.erase(pool.begin() + pick);
    }
    std::sort(selected.begin(), selected.end());

    PlanChoice plans;
    std::map<std::string, int> relation_plan;
    for (int f : selected) {
      auto [it, inserted] = relation_plan.emplace(base.fact(f).plan_key(), 0);
      if (inserted) {
        std::vector<double> weights;
        for (int k = 0; k < ctx.num_plans(f); ++k) weights.push_back(1.0 / ctx.plan_length(f, k));
        it->second = weighted_index(rng, weights);
      }
      plans[f] = it->second;
    }
    int name = -1;
    if (!ctx.names().empty()) {
      std::vector<double> weights;
      for (const NLName& n : ctx.names()) weights.push_back(1.0 / n.word_length);
      name = weighted_index(rng, weights);
    }

    std::vector<Bucket> buckets;
    for (std::vector<int> section : by_section(ctx, selected)) {
      std::erase_if(section, [&](int f) { return ctx.plan_length(f, plans[f]) > ctx.cap(); });
      const size_t num_buckets =
          (section.size() + ctx.cfg().max_merge - 1) / ctx.cfg().max_merge;
      std::vector<Bucket> local;
      for (size_t b = 0; b < num_buckets; ++b) {
        std::vector<double> weights;
        for (int f : section) weights.push_back(1.0 / ctx.plan_length(f, plans[f]));
        const int pick = weighted_index(rng, weights);
        local.push_back({{section[pick], plans[section[pick]]}});
        section.erase(section.begin() + pick);
      }
      for (int f : section) {
        const ElementSet& s = ctx.elements(f, plans[f]);
        std::vector<int> fits;
        std::vector<double> weights;
        for (size_t b = 0; b < local.size(); ++b) {
          if (static_cast<int>(local[b].size()) >= ctx.cfg().max_merge) continue;
          const ElementSet current = bucket_elements(ctx, local[b]);
          if (ctx.measure(distinct_union(current, s)) > ctx.cap()) continue;
          int shared = 0;
          for (const auto& [key, e] : s) shared += current.contains(key) ? 1 : 0;
          fits.push_back(static_cast<int>(b));
          weights.push_back(1.0 + shared);
        }
        if (fits.empty()) {
          local.push_back({{f, plans[f]}});
        } else {
          local[fits[weighted_index(rng, weights)]].push_back({f, plans[f]});
        }
      }
      for (Bucket& b : local) buckets.push_back(std::move(b));
    }
    best.offer(make_plan(ctx, std::move(buckets), name));
  }
  return best.take();
}

TextPlan pipeline_short(const FactBase& base, const BaselineConfig& cfg) {
  const Context ctx(base, cfg, LengthMetric::kElements);
  const std::vector<int> selected = take_first(rank_short(ctx, ctx.nonzero()), cfg.M);
  return short_text(ctx, selected, shortest_plans(ctx), shortest_name(ctx));
}

TextPlan pipeline_short_star(const FactBase& base, const BaselineConfig& cfg) {
  const Context ctx(base, cfg, LengthMetric::kWords);
  auto available = [&](const NLName& n) {
    int count = 0;
    for (int id : n.expressed_facts) count += base.fact(id).importance > 0 ? 1 : 0;
    return count;
  };
  int name = -1;
  for (size_t r = 0; r < ctx.names().size(); ++r) {
    const NLName& n = ctx.names()[r];
    if (name < 0) {
      name = static_cast<int>(r);
      continue;
    }
    const NLName& b = ctx.names()[name];
    if (available(n) > available(b) ||
        (available(n) == available(b) && n.word_length < b.word_length)) {
      name = static_cast<int>(r);
    }
  }
  std::vector<int> pool;
  for (int f : ctx.nonzero()) {
    if (name < 0 || !ctx.names()[name].expressed_facts.contains(f)) pool.push_back(f);
  }
  const std::vector<int> selected = take_first(rank_short(ctx, pool), cfg.M);
  return short_text(ctx, selected, shortest_plans(ctx), name);
}

TextPlan pipeline_beam(const FactBase& base, const BaselineConfig& cfg) {
  const Context ctx(base, cfg, LengthMetric::kElements);
  const std::vector<int> start_facts = take_first(rank_short(ctx, ctx.nonzero()), cfg.M);
  const PlanChoice start_plans = shortest_plans(ctx);
  const int start_name = shortest_name(ctx);

  std::vector<std::vector<int>> fact_variants = {start_facts};
  std::vector<PlanChoice> plan_variants = {start_plans};
  std::vector<int> name_variants = {start_name};
  std::vector<std::pair<double, double>> moves = {{-1.0, -1.0}};
  for (int v = 1; v < cfg.K; ++v) {
    {
      std::mt19937_64 rng = axis_rng(cfg.seed, 0, v);
      std::vector<int> facts = start_facts;
      std::vector<int> outside;
      for (int f : ctx.nonzero()) {
        if (std::find(facts.begin(), facts.end(), f) == facts.end()) outside.push_back(f);
      }
      if (!facts.empty() && !outside.empty()) {
        std::vector<double> out_weights, in_weights;
        for (int f : facts) out_weights.push_back(ctx.shortest_length(f));
        for (int f : outside) in_weights.push_back(1.0 / ctx.shortest_length(f));
        const int drop = weighted_index(rng, out_weights);
        facts[drop] = outside[weighted_index(rng, in_weights)];
      }
      fact_variants.push_back(std::move(facts));
    }
    {
      std::mt19937_64 rng = axis_rng(cfg.seed, 1, v);
      PlanChoice plans = start_plans;
      std::vector<int> flexible;
      for (int f : ctx.nonzero()) {
        if (ctx.num_plans(f) > 1) flexible.push_back(f);
      }
      if (!flexible.empty()) {
        const int f = flexible[uniform_index(rng, flexible.size())];
        const int shift = 1 + uniform_index(rng, ctx.num_plans(f) - 1);
        plans[f] = (plans[f] + shift) % ctx.num_plans(f);
      }
      plan_variants.push_back(std::move(plans));
    }
    {
      std::mt19937_64 rng = axis_rng(cfg.seed, 2, v);
      int name = start_name;
      const int n = static_cast<int>(ctx.names().size());
      if (n > 1) name = (start_name + 1 + uniform_index(rng, n - 1)) % n;
      name_variants.push_back(name);
    }
    {
      std::mt19937_64 rng = axis_rng(cfg.seed, 3, v);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      const double u_fact = unit(rng);
      moves.emplace_back(u_fact, unit(rng));
    }
  }

  BestOf best;
  for (const std::vector<int>& facts : fact_variants) {
    for (const PlanChoice& plans : plan_variants) {
      const std::vector<Bucket> greedy = greedy_buckets(ctx, facts, plans);
      for (int name : name_variants) {
        for (const auto& [u_fact, u_target] : moves) {
          std::vector<Bucket> buckets = greedy;
          if (u_fact >= 0 && !apply_move(ctx, buckets, u_fact, u_target)) continue;
          best.offer(make_plan(ctx, std::move(buckets), name));
        }
      }
    }
  }
  return best.take();
}

TextPlan run_baseline(BaselineKind kind, const FactBase& base, const BaselineConfig& cfg) {
  switch (kind) {
    case BaselineKind::kPipeline: return pipeline(base, cfg);
    case BaselineKind::kStoch: return pipeline_stoch(base, cfg);
    case BaselineKind::kShort: return pipeline_short(base, cfg);
    case BaselineKind::kShortStar: return pipeline_short_star(base, cfg);
    case BaselineKind::kBeam: return pipeline_beam(base, cfg);
  }
  throw std::invalid_argument("unknown baseline");
}

}  // namespace compactgen
