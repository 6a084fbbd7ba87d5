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

#include "compactgen/bilp.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "compactgen/simplex.h"

namespace compactgen {
namespace {

// Relative inflation applied to every floating-point LP bound before it is
// compared against an exact incumbent.
constexpr double kBoundSlack = 1e-9;
constexpr double kIntegralityTol = 1e-9;
// Objective granularities finer than this are not used for pruning.
constexpr double kMinGranularity = 1e-9;

using Clock = std::chrono::steady_clock;

bool holds(const Rational& lhs, Comparator cmp, const Rational& rhs) {
  switch (cmp) {
    case Comparator::kLessEqual: return lhs <= rhs;
    case Comparator::kEqual: return lhs == rhs;
    case Comparator::kGreaterEqual: return lhs >= rhs;
  }
  return false;
}

// Row in the form sum(a_j x_j) <= rhs, with a tolerance that dominates the
// rounding error of the double conversion.
struct LeRow {
  std::vector<std::pair<int, double>> terms;
  double rhs = 0.0;
  double tol = 0.0;
};

LeRow make_le_row(const Constraint& c, double sign) {
  LeRow row;
  double magnitude = std::fabs(to_double(c.rhs));
  for (const Term& t : c.terms) {
    const double a = sign * to_double(t.coef);
    if (a == 0.0) continue;
    row.terms.emplace_back(t.var, a);
    magnitude += std::fabs(a);
  }
  row.rhs = sign * to_double(c.rhs);
  row.tol = 1e-9 * (1.0 + magnitude);
  return row;
}

struct Relaxation {
  bool feasible = false;
  // Inflated upper bound.
  double bound = 0.0;
  // Full-length LP point; empty when the simplex hit its iteration limit.
  std::vector<double> x;
};

class Engine {
 public:
  explicit Engine(const BilpModel& model) : model_(model), cost_(model.num_vars, 0.0) {
    for (const Term& t : model.objective) cost_[t.var] += to_double(t.coef);
    for (const Constraint& c : model.constraints) {
      if (c.cmp != Comparator::kGreaterEqual) le_rows_.push_back(make_le_row(c, 1.0));
      if (c.cmp != Comparator::kLessEqual) le_rows_.push_back(make_le_row(c, -1.0));
    }
  }

  // Bound propagation to a fixpoint. Returns false when some row cannot be
  // satisfied by any completion. Only fixes values that are forced.
  bool propagate(PartialAssignment& fix) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const LeRow& row : le_rows_) {
        double min_activity = 0.0;
        for (const auto& [j, a] : row.terms) {
          if (fix[j] == 1 || (fix[j] == -1 && a < 0)) min_activity += a;
        }
        if (min_activity > row.rhs + row.tol) return false;
        for (const auto& [j, a] : row.terms) {
          if (fix[j] != -1) continue;
          if (min_activity + std::fabs(a) > row.rhs + row.tol) {
            // Fixing to the value already counted in min_activity leaves it
            // unchanged.
            fix[j] = a > 0 ? 0 : 1;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  Relaxation relax(const PartialAssignment& fix) const {
    Relaxation out;
    const int n = model_.num_vars;
    std::vector<int> column(n, -1);
    std::vector<int> free_vars;
    double constant = 0.0;
    for (int j = 0; j < n; ++j) {
      if (fix[j] == -1) {
        column[j] = static_cast<int>(free_vars.size());
        free_vars.push_back(j);
      } else if (fix[j] == 1) {
        constant += cost_[j];
      }
    }
    double scale = 0.0;
    for (int j : free_vars) scale = std::max(scale, std::fabs(cost_[j]));
    if (scale == 0.0) scale = 1.0;

    lp::Problem lp;
    lp.num_cols = static_cast<int>(free_vars.size());
    lp.upper.assign(lp.num_cols, 1.0);
    lp.objective.resize(lp.num_cols);
    for (int c = 0; c < lp.num_cols; ++c) lp.objective[c] = cost_[free_vars[c]] / scale;

    for (const Constraint& con : model_.constraints) {
      lp::Row row;
      double rhs = to_double(con.rhs);
      double min_act = 0.0, max_act = 0.0, magnitude = std::fabs(rhs);
      for (const Term& t : con.terms) {
        const double a = to_double(t.coef);
        magnitude += std::fabs(a);
        if (fix[t.var] == -1) {
          if (a == 0.0) continue;
          row.terms.emplace_back(column[t.var], a);
          (a > 0 ? max_act : min_act) += a;
        } else if (fix[t.var] == 1) {
          rhs -= a;
        }
      }
      const double tol = 1e-9 * (1.0 + magnitude);
      const bool le_ok = max_act <= rhs + tol;
      const bool ge_ok = min_act >= rhs - tol;
      const bool le_dead = min_act > rhs + tol;
      const bool ge_dead = max_act < rhs - tol;
      switch (con.cmp) {
        case Comparator::kLessEqual:
          if (le_dead) return out;
          if (le_ok) continue;
          row.sense = lp::RowSense::kLessEqual;
          break;
        case Comparator::kGreaterEqual:
          if (ge_dead) return out;
          if (ge_ok) continue;
          row.sense = lp::RowSense::kGreaterEqual;
          break;
        case Comparator::kEqual:
          if (le_dead || ge_dead) return out;
          if (row.terms.empty()) continue;
          row.sense = lp::RowSense::kEqual;
          break;
      }
      row.rhs = rhs;
      lp.rows.push_back(std::move(row));
    }

    const lp::Result result = lp::maximize(lp);
    double value;
    if (result.status == lp::Status::kInfeasible) return out;
    if (result.status == lp::Status::kOptimal) {
      value = constant;
      out.x.assign(n, 0.0);
      for (int j = 0; j < n; ++j) {
        if (fix[j] == 1) out.x[j] = 1.0;
      }
      for (int c = 0; c < lp.num_cols; ++c) {
        out.x[free_vars[c]] = result.x[c];
        value += cost_[free_vars[c]] * result.x[c];
      }
    } else {
      // Iteration limit: fall back to the box bound.
      value = constant;
      for (int j : free_vars) value += std::max(0.0, cost_[j]);
    }
    out.feasible = true;
    out.bound = value + kBoundSlack * std::max(1.0, std::fabs(value));
    return out;
  }

  int num_vars() const { return model_.num_vars; }

 private:
  const BilpModel& model_;
  std::vector<double> cost_;
  std::vector<LeRow> le_rows_;
};

// Largest g such that every binary objective value is a multiple of g.
double objective_granularity(const BilpModel& model) {
  mpz_class lcm = 1;
  for (const Term& t : model.objective) {
    if (t.coef == 0) continue;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  mpz_class g = 0;
  for (const Term& t : model.objective) {
    if (t.coef == 0) continue;
    mpz_class scaled = t.coef.get_num() * (lcm / t.coef.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
  }
  if (g == 0) return 0.0;
  const Rational granularity(g, lcm);
  return to_double(Rational(granularity));
}

class Search {
 public:
  Search(const BilpModel& model, const SolveOptions& options)
      : model_(model), engine_(model), options_(options), start_(Clock::now()) {
    const double g = objective_granularity(model);
    granularity_ = g >= kMinGranularity ? g : 0.0;
  }

  BilpSolution run() {
    BilpSolution solution;
    std::vector<PartialAssignment> stack;
    stack.emplace_back(model_.num_vars, -1);
    bool timed_out = false;
    bool root = true;
    while (!stack.empty()) {
      if (Clock::now() - start_ > options_.time_budget) {
        timed_out = true;
        break;
      }
      PartialAssignment fix = std::move(stack.back());
      stack.pop_back();
      ++stats_.nodes;
      const bool was_root = root;
      root = false;

      if (!engine_.propagate(fix)) continue;
      int first_free = -1;
      for (int j = 0; j < model_.num_vars; ++j) {
        if (fix[j] == -1) {
          first_free = j;
          break;
        }
      }
      if (first_free < 0) {
        offer(to_assignment(fix));
        continue;
      }

      ++stats_.lp_solves;
      const Relaxation rel = engine_.relax(fix);
      if (!rel.feasible || prunable(rel.bound)) continue;
      if (was_root && !rel.x.empty()) {
        dive(fix, rel.x);
        if (prunable(rel.bound)) continue;
      }

      int branch = first_free;
      if (!rel.x.empty()) {
        double best_fraction = kIntegralityTol;
        int most_fractional = -1;
        for (int j = 0; j < model_.num_vars; ++j) {
          if (fix[j] != -1) continue;
          const double f = std::min(rel.x[j], 1.0 - rel.x[j]);
          if (f > best_fraction) {
            best_fraction = f;
            most_fractional = j;
          }
        }
        if (most_fractional >= 0) {
          branch = most_fractional;
        } else {
          PartialAssignment rounded = fix;
          for (int j = 0; j < model_.num_vars; ++j) {
            if (rounded[j] == -1) rounded[j] = rel.x[j] >= 0.5 ? 1 : 0;
          }
          offer(to_assignment(rounded));
          if (prunable(rel.bound)) continue;
        }
      }

      PartialAssignment zero = fix;
      zero[branch] = 0;
      fix[branch] = 1;
      stack.push_back(std::move(zero));
      stack.push_back(std::move(fix));
    }

    stats_.wall_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    solution.stats = stats_;
    solution.has_assignment = have_incumbent_;
    if (have_incumbent_) {
      solution.assignment = incumbent_;
      solution.objective_value = incumbent_value_;
      solution.objective_value.canonicalize();
    } else {
      solution.assignment.assign(model_.num_vars, 0);
    }
    if (timed_out) {
      solution.status = SolveStatus::kTimeout;
    } else {
      solution.status = have_incumbent_ ? SolveStatus::kOptimal : SolveStatus::kInfeasible;
    }
    return solution;
  }

 private:
  static Assignment to_assignment(const PartialAssignment& fix) {
    Assignment a(fix.size());
    for (size_t j = 0; j < fix.size(); ++j) a[j] = fix[j] == 1 ? 1 : 0;
    return a;
  }

  void offer(const Assignment& candidate) {
    if (!check(model_, candidate)) return;
    Rational value = objective_of(model_, candidate);
    if (have_incumbent_ && value <= incumbent_value_) return;
    have_incumbent_ = true;
    incumbent_ = candidate;
    incumbent_value_ = std::move(value);
    incumbent_double_ = to_double(incumbent_value_);
  }

  // True when no completion under this bound can strictly beat the incumbent.
  bool prunable(double bound) const {
    if (!have_incumbent_) return false;
    if (granularity_ > 0.0) return bound < incumbent_double_ + 0.5 * granularity_;
    return bound <= incumbent_double_;
  }

  // Rounds the LP point variable by variable, most confident first, keeping
  // the partial assignment propagation-consistent; flips a value when the
  // preferred one is refuted.
  void dive(const PartialAssignment& start, const std::vector<double>& x) {
    std::vector<int> order;
    for (int j = 0; j < model_.num_vars; ++j) {
      if (start[j] == -1) order.push_back(j);
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return std::fabs(x[a] - 0.5) > std::fabs(x[b] - 0.5);
    });
    PartialAssignment fix = start;
    for (int j : order) {
      if (fix[j] != -1) continue;
      const std::int8_t preferred = x[j] >= 0.5 ? 1 : 0;
      PartialAssignment trial = fix;
      trial[j] = preferred;
      if (!engine_.propagate(trial)) {
        trial = fix;
        trial[j] = static_cast<std::int8_t>(1 - preferred);
        if (!engine_.propagate(trial)) return;
      }
      fix = std::move(trial);
    }
    offer(to_assignment(fix));
  }

  const BilpModel& model_;
  Engine engine_;
  SolveOptions options_;
  Clock::time_point start_;
  double granularity_ = 0.0;
  SolveStats stats_;
  bool have_incumbent_ = false;
  Assignment incumbent_;
  Rational incumbent_value_;
  double incumbent_double_ = 0.0;
};

std::string format_decimal(const Rational& value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", to_double(value));
  return buf;
}

std::string lp_var_name(const BilpModel& model, int j) {
  if (!model.var_names.empty() && !model.var_names[j].empty()) return model.var_names[j];
  return "x" + std::to_string(j);
}

void append_linear(std::string& out, const BilpModel& model, const std::vector<Term>& terms) {
  if (terms.empty()) {
    out += " 0";
    return;
  }
  for (const Term& t : terms) {
    out += t.coef < 0 ? " - " : " + ";
    out += format_decimal(abs(t.coef));
    out += ' ';
    out += lp_var_name(model, t.var);
  }
}

}  // namespace

int BilpModel::add_var(std::string name) {
  var_names.push_back(std::move(name));
  return num_vars++;
}

void BilpModel::validate() const {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
  if (!var_names.empty() && static_cast<int>(var_names.size()) != num_vars) {
    throw std::invalid_argument("var_names size does not match num_vars");
  }
  auto check_terms = [&](const std::vector<Term>& terms, const std::string& where) {
    std::set<int> seen;
    for (const Term& t : terms) {
      if (t.var < 0 || t.var >= num_vars) {
        throw std::invalid_argument(where + ": variable index " + std::to_string(t.var) +
                                    " out of range");
      }
      if (!seen.insert(t.var).second) {
        throw std::invalid_argument(where + ": duplicate variable index " +
                                    std::to_string(t.var));
      }
    }
  };
  check_terms(objective, "objective");
  for (size_t i = 0; i < constraints.size(); ++i) {
    check_terms(constraints[i].terms, "constraint " + std::to_string(i));
  }
}

const char* solve_status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kTimeout: return "timeout";
  }
  return "unknown";
}

BilpSolution solve(const BilpModel& model, const SolveOptions& options) {
  model.validate();
  Search search(model, options);
  return search.run();
}

LpBound lp_bound(const BilpModel& model, const PartialAssignment& fixed) {
  if (static_cast<int>(fixed.size()) != model.num_vars) {
    throw std::invalid_argument("partial assignment length does not match num_vars");
  }
  LpBound out;
  if (std::none_of(fixed.begin(), fixed.end(), [](std::int8_t v) { return v == -1; })) {
    Assignment a(fixed.begin(), fixed.end());
    out.feasible = check(model, a);
    if (out.feasible) out.value = objective_of(model, a);
    return out;
  }
  Engine engine(model);
  const Relaxation rel = engine.relax(fixed);
  out.feasible = rel.feasible;
  if (rel.feasible) out.value = rational_from_double(rel.bound);
  return out;
}

bool check(const BilpModel& model, const Assignment& assignment) {
  if (static_cast<int>(assignment.size()) != model.num_vars) {
    throw std::invalid_argument("assignment length does not match num_vars");
  }
  for (const Constraint& c : model.constraints) {
    Rational lhs = 0;
    for (const Term& t : c.terms) {
      if (assignment[t.var]) lhs += t.coef;
    }
    if (!holds(lhs, c.cmp, c.rhs)) return false;
  }
  return true;
}

Rational objective_of(const BilpModel& model, const Assignment& assignment) {
  Rational value = 0;
  for (const Term& t : model.objective) {
    if (assignment.at(t.var)) value += t.coef;
  }
  value.canonicalize();
  return value;
}

std::string to_lp_format(const BilpModel& model) {
  std::string out = "Maximize\n obj:";
  append_linear(out, model, model.objective);
  out += "\nSubject To\n";
  for (size_t i = 0; i < model.constraints.size(); ++i) {
    const Constraint& c = model.constraints[i];
    out += ' ';
    out += c.name.empty() ? "c" + std::to_string(i) : c.name;
    out += ':';
    append_linear(out, model, c.terms);
    switch (c.cmp) {
      case Comparator::kLessEqual: out += " <= "; break;
      case Comparator::kEqual: out += " = "; break;
      case Comparator::kGreaterEqual: out += " >= "; break;
    }
    out += format_decimal(c.rhs);
    out += '\n';
  }
  out += "Binary\n";
  for (int j = 0; j < model.num_vars; ++j) {
    out += ' ';
    out += lp_var_name(model, j);
    out += '\n';
  }
  out += "End\n";
  return out;
}

}  // namespace compactgen
