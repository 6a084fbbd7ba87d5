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

// Dense bounded-variable primal simplex for small linear programs
//   maximize c'x  s.t.  rows,  0 <= x_j <= upper_j.
// Two phases with artificial variables; Dantzig pricing that falls back to
// Bland's rule after a run of degenerate pivots.

#ifndef COMPACTGEN_SIMPLEX_H_
#define COMPACTGEN_SIMPLEX_H_

#include <limits>
#include <utility>
#include <vector>

namespace compactgen::lp {

enum class RowSense { kLessEqual, kEqual, kGreaterEqual };

struct Row {
  std::vector<std::pair<int, double>> terms;
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
};

struct Problem {
  int num_cols = 0;
  std::vector<double> objective;
  // Upper bounds; +infinity allowed.
  std::vector<double> upper;
  std::vector<Row> rows;
};

enum class Status { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct Result {
  Status status = Status::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
  int iterations = 0;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

Result maximize(const Problem& problem);

}  // namespace compactgen::lp

#endif  // COMPACTGEN_SIMPLEX_H_
