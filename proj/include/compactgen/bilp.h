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

// Binary (0-1) integer linear programs with exact rational coefficients and
// an exact depth-first branch-and-bound solver. LP relaxations are solved in
// floating point; every bound used for pruning is inflated so that pruning
// stays sound, and every incumbent is verified in rational arithmetic.

#ifndef COMPACTGEN_BILP_H_
#define COMPACTGEN_BILP_H_

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "compactgen/rational.h"

namespace compactgen {

enum class Comparator { kLessEqual, kEqual, kGreaterEqual };

struct Term {
  int var = 0;
  Rational coef;
};

struct Constraint {
  std::vector<Term> terms;
  Comparator cmp = Comparator::kLessEqual;
  Rational rhs;
  // Optional label, used only in LP dumps.
  std::string name;
};

// maximize objective . x  subject to constraints, x in {0,1}^num_vars.
struct BilpModel {
  int num_vars = 0;
  std::vector<Term> objective;
  std::vector<Constraint> constraints;
  // Optional; empty or one name per variable.
  std::vector<std::string> var_names;

  int add_var(std::string name);
  // Throws std::invalid_argument on out-of-range indices, duplicate indices
  // within one row, or a var_names size mismatch.
  void validate() const;
};

using Assignment = std::vector<std::uint8_t>;
// -1 free, 0 or 1 fixed.
using PartialAssignment = std::vector<std::int8_t>;

enum class SolveStatus { kOptimal, kInfeasible, kTimeout };

const char* solve_status_name(SolveStatus status);

struct SolveStats {
  std::int64_t nodes = 0;
  std::int64_t lp_solves = 0;
  double wall_ms = 0.0;
};

struct BilpSolution {
  SolveStatus status = SolveStatus::kInfeasible;
  // False only when the search ended without any feasible point.
  bool has_assignment = false;
  Assignment assignment;
  Rational objective_value;
  SolveStats stats;
};

struct SolveOptions {
  std::chrono::milliseconds time_budget{60000};
};

// Exact optimum, or the best incumbent on timeout. Deterministic for a given
// model when the search completes: branches on the most fractional variable
// (ties to the lowest index), 1-branch first.
BilpSolution solve(const BilpModel& model, const SolveOptions& options = {});

struct LpBound {
  bool feasible = false;
  // Upper bound on every binary completion of the partial assignment. Exact
  // objective when everything is fixed.
  Rational value;
};

// LP relaxation bound with 0 <= x <= 1 and fixed variables pinned. Throws
// std::invalid_argument on a length mismatch.
LpBound lp_bound(const BilpModel& model, const PartialAssignment& fixed);

// Exact feasibility. Throws std::invalid_argument on a length mismatch.
bool check(const BilpModel& model, const Assignment& assignment);

Rational objective_of(const BilpModel& model, const Assignment& assignment);

// CPLEX LP text (maximize, subject to, binary). Coefficients as decimals.
std::string to_lp_format(const BilpModel& model);

}  // namespace compactgen

#endif  // COMPACTGEN_BILP_H_
