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

#include "compactgen/harness.h"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "compactgen/approx_planner.h"
#include "compactgen/realization.h"
#include "compactgen/text_plan.h"

namespace compactgen {
namespace {

constexpr Mode kAllModes[] = {
    Mode::kIlp,           Mode::kIlpExtended,    Mode::kIlpApprox,
    Mode::kIlpApproxExtended, Mode::kPipeline,   Mode::kPipelineStoch,
    Mode::kPipelineShort, Mode::kPipelineShortStar, Mode::kPipelineBeam,
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

Rational grid_number(const std::string& token) {
  if (token.empty()) throw UsageError("empty grid value");
  try {
    return parse_rational(token);
  } catch (const std::exception&) {
    throw UsageError("malformed grid value '" + token + "'");
  }
}

BaselineKind baseline_kind(Mode mode) {
  switch (mode) {
    case Mode::kPipeline:
      return BaselineKind::kPipeline;
    case Mode::kPipelineStoch:
      return BaselineKind::kStoch;
    case Mode::kPipelineShort:
      return BaselineKind::kShort;
    case Mode::kPipelineShortStar:
      return BaselineKind::kShortStar;
    case Mode::kPipelineBeam:
      return BaselineKind::kBeam;
    default:
      throw std::logic_error("not a baseline mode");
  }
}

std::string file_safe(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    const bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-';
    if (!keep) c = '_';
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

// Builds the exact model the planner would solve, for --dump-lp.
std::string model_lp(Mode mode, const FactBase& base, const PlannerConfig& cfg) {
  if (mode == Mode::kIlp) {
    return to_lp_format(build_first_model(single_name_projection(base), cfg).model);
  }
  return to_lp_format(build_extended_model(base, cfg).model);
}

TextPlan generate(Mode mode, const FactBase& base, const RunConfig& cfg, const Rational& value) {
  if (is_planner_mode(mode)) {
    PlannerConfig pc;
    pc.lambda1 = value;
    pc.m = cfg.m;
    pc.b_max = cfg.b_max;
    pc.w_max = cfg.w_max;
    SolveOptions options;
    options.time_budget = std::chrono::milliseconds(cfg.timeout_ms);
    switch (mode) {
      case Mode::kIlp:
        return plan(base, pc, ModelKind::kFirst, options);
      case Mode::kIlpExtended:
        return plan(base, pc, ModelKind::kExtended, options);
      case Mode::kIlpApprox:
        return plan_approx(base, pc, ModelKind::kFirst, options);
      default:
        return plan_approx(base, pc, ModelKind::kExtended, options);
    }
  }
  if (value.get_den() != 1 || value < 1) throw UsageError("fact counts must be positive integers");
  BaselineConfig bc;
  bc.M = static_cast<int>(value.get_num().get_si());
  bc.K = cfg.beam;
  bc.seed = cfg.seed;
  bc.b_max = cfg.b_max;
  bc.w_max = cfg.w_max;
  return run_baseline(baseline_kind(mode), base, bc);
}

void add_groups(const std::string& system, bool keep_three, std::vector<const TextRecord*> texts,
                std::vector<FactGroup>& out) {
  // Best first; ties keep generation order.
  std::stable_sort(texts.begin(), texts.end(),
                   [](const TextRecord* a, const TextRecord* b) { return a->ratio > b->ratio; });
  std::map<int, std::vector<const TextRecord*>> by_facts;
  std::map<std::pair<int, std::string>, int> kept;
  for (const TextRecord* t : texts) {
    if (t->words == 0) continue;
    int& n = kept[{t->facts_reported, t->target}];
    if (n >= (keep_three ? 3 : 1)) continue;
    ++n;
    by_facts[t->facts_reported].push_back(t);
  }
  for (const auto& [facts, members] : by_facts) {
    FactGroup g;
    g.system = system;
    g.facts_reported = facts;
    g.texts = static_cast<int>(members.size());
    for (const TextRecord* t : members) g.avg_words += t->words;
    g.avg_words /= g.texts;
    g.ratio = facts / g.avg_words;
    out.push_back(g);
  }
}

}  // namespace

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::kIlp:
      return "ilp";
    case Mode::kIlpExtended:
      return "ilp-extended";
    case Mode::kIlpApprox:
      return "ilp-approx";
    case Mode::kIlpApproxExtended:
      return "ilp-approx-extended";
    case Mode::kPipeline:
      return "pipeline";
    case Mode::kPipelineStoch:
      return "pipeline-stoch";
    case Mode::kPipelineShort:
      return "pipeline-short";
    case Mode::kPipelineShortStar:
      return "pipeline-short-star";
    case Mode::kPipelineBeam:
      return "pipeline-beam";
  }
  return "?";
}

bool is_planner_mode(Mode mode) {
  return mode == Mode::kIlp || mode == Mode::kIlpExtended || mode == Mode::kIlpApprox ||
         mode == Mode::kIlpApproxExtended;
}

std::vector<Mode> parse_modes(const std::string& text) {
  std::vector<Mode> out;
  for (const std::string& raw : split(text, ',')) {
    const std::string name = trim(raw);
    const auto it = std::find_if(std::begin(kAllModes), std::end(kAllModes),
                                 [&](Mode m) { return name == mode_name(m); });
    if (it == std::end(kAllModes)) throw UsageError("unknown mode '" + name + "'");
    out.push_back(*it);
  }
  if (out.empty()) throw UsageError("no mode given");
  return out;
}

std::vector<GridValue> parse_grid(const std::string& text) {
  std::vector<GridValue> out;
  const std::vector<std::string> range = split(text, ':');
  if (range.size() == 3) {
    const Rational start = grid_number(trim(range[0]));
    const Rational stop = grid_number(trim(range[1]));
    const Rational step = grid_number(trim(range[2]));
    if (step <= 0) throw UsageError("grid step must be positive");
    for (Rational v = start; v <= stop; v += step) {
      out.push_back({fixed(to_double(v), 6), v});
      if (out.size() > 100000) throw UsageError("grid too large");
    }
    // Trim trailing zeros so that "0.100000" reads "0.1".
    for (GridValue& g : out) {
      std::string& s = g.label;
      while (s.back() == '0') s.pop_back();
      if (s.back() == '.') s.pop_back();
    }
  } else if (range.size() == 1) {
    for (const std::string& raw : split(text, ',')) {
      const std::string token = trim(raw);
      out.push_back({token, grid_number(token)});
    }
  } else {
    throw UsageError("malformed grid '" + text + "'");
  }
  if (out.empty()) throw UsageError("empty grid");
  return out;
}

Report run(const RunConfig& cfg, const std::vector<NamedBase>& bases) {
  Report report;
  for (Mode mode : cfg.modes) {
    const std::vector<GridValue>& grid = is_planner_mode(mode) ? cfg.lambda1 : cfg.facts;
    for (const GridValue& g : grid) {
      GridAggregate agg;
      agg.system = mode_name(mode);
      agg.param = g.label;
      for (const NamedBase& nb : bases) {
        TextRecord rec;
        rec.system = mode_name(mode);
        rec.param = g.label;
        rec.target = nb.label;
        const auto start = std::chrono::steady_clock::now();
        rec.plan = generate(mode, nb.base, cfg, g.value);
        rec.solve_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        rec.status = rec.plan.status;
        const RealizedText text = realize(rec.plan, nb.base);
        rec.text = text.text;
        rec.words = text.words;
        // A plan without sentences never utters the subject name either.
        rec.facts_reported = rec.plan.buckets.empty()
                                 ? 0
                                 : static_cast<int>(reported_facts(rec.plan, nb.base).size());
        rec.ratio = rec.words > 0 ? static_cast<double>(rec.facts_reported) / rec.words : 0.0;

        if (cfg.dump_lp_dir && (mode == Mode::kIlp || mode == Mode::kIlpExtended)) {
          PlannerConfig pc;
          pc.lambda1 = g.value;
          pc.m = cfg.m;
          pc.b_max = cfg.b_max;
          pc.w_max = cfg.w_max;
          write_file(std::filesystem::path(*cfg.dump_lp_dir) /
                         file_safe(rec.system + "_" + rec.param + "_" + rec.target + ".lp"),
                     model_lp(mode, nb.base, pc));
        }
        if (cfg.text_out_dir) {
          write_file(std::filesystem::path(*cfg.text_out_dir) /
                         file_safe(rec.system + "_" + rec.param + "_" + rec.target + ".txt"),
                     rec.text + "\n");
        }

        agg.avg_facts += rec.facts_reported;
        agg.avg_words += rec.words;
        agg.avg_ms += rec.solve_ms;
        agg.worst_ms = std::max(agg.worst_ms, rec.solve_ms);
        if (rec.status == SolveStatus::kTimeout) {
          agg.status = SolveStatus::kTimeout;
          report.degraded = true;
        }
        report.texts.push_back(std::move(rec));
      }
      if (!bases.empty()) {
        const double n = static_cast<double>(bases.size());
        agg.avg_facts /= n;
        agg.avg_words /= n;
        agg.avg_ms /= n;
      }
      agg.ratio = agg.avg_words > 0 ? agg.avg_facts / agg.avg_words : 0.0;
      report.aggregates.push_back(agg);
    }
  }

  for (Mode mode : cfg.modes) {
    std::vector<const TextRecord*> texts;
    for (const TextRecord& t : report.texts) {
      if (t.system == mode_name(mode)) texts.push_back(&t);
    }
    add_groups(mode_name(mode), mode == Mode::kPipeline, texts, report.groups);
  }
  return report;
}

std::string report_csv(const Report& report, bool timing) {
  std::ostringstream out;
  out << "system,param,target,facts_reported,words,ratio,solve_ms,status\n";
  size_t next = 0;
  for (const GridAggregate& agg : report.aggregates) {
    for (; next < report.texts.size() && report.texts[next].system == agg.system &&
           report.texts[next].param == agg.param;
         ++next) {
      const TextRecord& t = report.texts[next];
      out << t.system << ',' << t.param << ',' << t.target << ',' << t.facts_reported << ','
          << t.words << ',' << fixed(t.ratio, 6) << ',' << fixed(timing ? t.solve_ms : 0.0, 3)
          << ',' << solve_status_name(t.status) << '\n';
    }
    out << agg.system << ',' << agg.param << ",*," << fixed(agg.avg_facts, 6) << ','
        << fixed(agg.avg_words, 6) << ',' << fixed(agg.ratio, 6) << ','
        << fixed(timing ? agg.avg_ms : 0.0, 3) << ',' << solve_status_name(agg.status) << '\n';
  }
  return out.str();
}

std::string grouped_csv(const Report& report) {
  std::ostringstream out;
  out << "system,facts_reported,texts,avg_words,ratio\n";
  for (const FactGroup& g : report.groups) {
    out << g.system << ',' << g.facts_reported << ',' << g.texts << ',' << fixed(g.avg_words, 6)
        << ',' << fixed(g.ratio, 6) << '\n';
  }
  return out.str();
}

}  // namespace compactgen
