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

#include "compactgen/simplex.h"

#include <cmath>

namespace compactgen::lp {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-11;
constexpr double kFeasTol = 1e-7;
constexpr int kDegenerateRunBeforeBland = 50;

class Tableau {
 public:
  Tableau(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  double& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  double at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  double* row(int r) { return &a_[static_cast<size_t>(r) * cols_]; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  int rows_;
  int cols_;
  std::vector<double> a_;
};

class BoundedSimplex {
 public:
  BoundedSimplex(const Problem& p) : num_struct_(p.num_cols) {
    const int m = static_cast<int>(p.rows.size());
    // Column layout: structural | one slack per inequality | artificials.
    int num_slack = 0;
    for (const Row& row : p.rows) num_slack += row.sense != RowSense::kEqual;
    std::vector<int> slack_col(m, -1);
    int next = num_struct_;
    for (int i = 0; i < m; ++i) {
      if (p.rows[i].sense != RowSense::kEqual) slack_col[i] = next++;
    }
    // Decide which rows need an artificial: after sign normalisation the row
    // must have a +1 slack to start basic.
    std::vector<double> sign(m, 1.0);
    std::vector<bool> needs_artificial(m, false);
    int num_art = 0;
    for (int i = 0; i < m; ++i) {
      const Row& row = p.rows[i];
      if (row.rhs < 0) sign[i] = -1.0;
      double slack_coef = row.sense == RowSense::kLessEqual      ? 1.0
                          : row.sense == RowSense::kGreaterEqual ? -1.0
                                                                 : 0.0;
      if (slack_coef * sign[i] != 1.0) {
        needs_artificial[i] = true;
        ++num_art;
      }
    }
    num_cols_ = num_struct_ + num_slack + num_art;
    first_art_ = num_struct_ + num_slack;
    tab_ = Tableau(m, num_cols_);
    upper_.assign(num_cols_, kInfinity);
    cost_.assign(num_cols_, 0.0);
    for (int j = 0; j < num_struct_; ++j) {
      upper_[j] = p.upper[j];
      cost_[j] = p.objective[j];
    }
    at_upper_.assign(num_cols_, false);
    basis_.assign(m, -1);
    beta_.assign(m, 0.0);
    int art = first_art_;
    for (int i = 0; i < m; ++i) {
      const Row& row = p.rows[i];
      for (const auto& [col, coef] : row.terms) tab_.at(i, col) += sign[i] * coef;
      if (slack_col[i] >= 0) {
        double slack_coef = row.sense == RowSense::kLessEqual ? 1.0 : -1.0;
        tab_.at(i, slack_col[i]) = sign[i] * slack_coef;
        if (!needs_artificial[i]) basis_[i] = slack_col[i];
      }
      if (needs_artificial[i]) {
        tab_.at(i, art) = 1.0;
        basis_[i] = art++;
      }
      beta_[i] = sign[i] * row.rhs;
    }
  }

  Result run() {
    Result result;
    const int m = tab_.rows();
    // Phase 1: maximize -(sum of artificials).
    if (first_art_ < num_cols_) {
      std::vector<double> phase1(num_cols_, 0.0);
      for (int j = first_art_; j < num_cols_; ++j) phase1[j] = -1.0;
      Status s = iterate(phase1, result.iterations);
      if (s == Status::kIterationLimit) {
        result.status = s;
        return result;
      }
      double infeasibility = 0.0;
      for (int i = 0; i < m; ++i) {
        if (basis_[i] >= first_art_) infeasibility += beta_[i];
      }
      if (infeasibility > kFeasTol) {
        result.status = Status::kInfeasible;
        return result;
      }
      for (int j = first_art_; j < num_cols_; ++j) {
        upper_[j] = 0.0;
        at_upper_[j] = false;
      }
      for (int i = 0; i < m; ++i) {
        if (basis_[i] >= first_art_) beta_[i] = 0.0;
      }
    }
    Status s = iterate(cost_, result.iterations);
    result.status = s;
    if (s != Status::kOptimal) return result;

    std::vector<double> values(num_cols_, 0.0);
    for (int j = 0; j < num_cols_; ++j) values[j] = at_upper_[j] ? upper_[j] : 0.0;
    for (int i = 0; i < m; ++i) values[basis_[i]] = beta_[i];
    result.x.assign(values.begin(), values.begin() + num_struct_);
    for (int j = 0; j < num_struct_; ++j) {
      if (result.x[j] < 0) result.x[j] = 0;
      if (result.x[j] > upper_[j]) result.x[j] = upper_[j];
      result.objective += cost_[j] * result.x[j];
    }
    return result;
  }

 private:
  Status iterate(const std::vector<double>& cost, int& iterations) {
    const int m = tab_.rows();
    const int n = num_cols_;
    std::vector<bool> is_basic(n, false);
    for (int i = 0; i < m; ++i) is_basic[basis_[i]] = true;

    // Reduced costs d_j = c_j - c_B' T_j.
    std::vector<double> d(cost);
    for (int i = 0; i < m; ++i) {
      const double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      const double* row = tab_.row(i);
      for (int j = 0; j < n; ++j) d[j] -= cb * row[j];
    }

    const int limit = 50 * (m + n) + 1000;
    int degenerate_run = 0;
    bool bland = false;
    while (true) {
      if (iterations >= limit) return Status::kIterationLimit;
      ++iterations;

      int enter = -1;
      double best = 0.0;
      for (int j = 0; j < n; ++j) {
        if (is_basic[j] || upper_[j] == 0.0) continue;
        const double gain = at_upper_[j] ? -d[j] : d[j];
        if (gain <= kCostTol) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (gain > best) {
          best = gain;
          enter = j;
        }
      }
      if (enter < 0) return Status::kOptimal;

      const double dir = at_upper_[enter] ? -1.0 : 1.0;
      double theta = upper_[enter];
      int leave = -1;
      bool leave_to_upper = false;
      double leave_alpha = 0.0;
      for (int i = 0; i < m; ++i) {
        const double alpha = dir * tab_.at(i, enter);
        double limit_i;
        bool to_upper;
        if (alpha > kPivotTol) {
          limit_i = std::max(beta_[i], 0.0) / alpha;
          to_upper = false;
        } else if (alpha < -kPivotTol && std::isfinite(upper_[basis_[i]])) {
          limit_i = std::max(upper_[basis_[i]] - beta_[i], 0.0) / -alpha;
          to_upper = true;
        } else {
          continue;
        }
        bool take = false;
        if (limit_i < theta - 1e-12) {
          take = true;
        } else if (leave >= 0 && limit_i <= theta + 1e-12) {
          take = bland ? basis_[i] < basis_[leave] : std::fabs(alpha) > std::fabs(leave_alpha);
        }
        if (take) {
          theta = limit_i;
          leave = i;
          leave_to_upper = to_upper;
          leave_alpha = alpha;
        }
      }
      if (!std::isfinite(theta)) return Status::kUnbounded;

      if (theta < 1e-12) {
        if (++degenerate_run > kDegenerateRunBeforeBland) bland = true;
      } else {
        degenerate_run = 0;
      }

      for (int i = 0; i < m; ++i) beta_[i] -= dir * tab_.at(i, enter) * theta;

      if (leave < 0) {
        at_upper_[enter] = !at_upper_[enter];
        continue;
      }

      const double entering_value = at_upper_[enter] ? upper_[enter] - theta : theta;
      const int leaving = basis_[leave];
      at_upper_[leaving] = leave_to_upper;
      is_basic[leaving] = false;
      at_upper_[enter] = false;
      is_basic[enter] = true;
      basis_[leave] = enter;
      beta_[leave] = entering_value;

      double* pivot_row = tab_.row(leave);
      const double pivot = pivot_row[enter];
      for (int j = 0; j < n; ++j) pivot_row[j] /= pivot;
      pivot_row[enter] = 1.0;
      for (int i = 0; i < m; ++i) {
        if (i == leave) continue;
        double* row = tab_.row(i);
        const double factor = row[enter];
        if (factor == 0.0) continue;
        for (int j = 0; j < n; ++j) row[j] -= factor * pivot_row[j];
        row[enter] = 0.0;
      }
      const double dfactor = d[enter];
      for (int j = 0; j < n; ++j) d[j] -= dfactor * pivot_row[j];
      d[enter] = 0.0;
    }
  }

  int num_struct_;
  int num_cols_ = 0;
  int first_art_ = 0;
  Tableau tab_{0, 0};
  std::vector<double> upper_;
  std::vector<double> cost_;
  std::vector<bool> at_upper_;
  std::vector<int> basis_;
  std::vector<double> beta_;
};

}  // namespace

Result maximize(const Problem& problem) {
  BoundedSimplex simplex(problem);
  return simplex.run();
}

}  // namespace compactgen::lp
