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

#include "support/bilp_oracle.h"

#include <random>
#include <stdexcept>

namespace compactgen::testing {

std::optional<Rational> enumerate_optimum(const BilpModel& model,
                                          const PartialAssignment& fixed) {
  const int n = model.num_vars;
  if (n > 24) throw std::invalid_argument("too many variables to enumerate");
  std::optional<Rational> best;
  Assignment a(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool consistent = true;
    for (int j = 0; j < n; ++j) {
      a[j] = (mask >> j) & 1;
      if (fixed[j] != -1 && fixed[j] != a[j]) consistent = false;
    }
    if (!consistent || !check(model, a)) continue;
    Rational value = objective_of(model, a);
    if (!best || value > *best) best = value;
  }
  return best;
}

std::optional<Rational> enumerate_optimum(const BilpModel& model) {
  return enumerate_optimum(model, PartialAssignment(model.num_vars, -1));
}

BilpModel random_bilp(std::uint64_t seed, int max_vars) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto coefficient = [&](int lo, int hi) {
    Rational c(uniform(lo, hi));
    if (uniform(0, 3) == 0) c /= uniform(2, 7);
    c.canonicalize();
    return c;
  };

  BilpModel model;
  model.num_vars = uniform(1, max_vars);
  for (int j = 0; j < model.num_vars; ++j) {
    if (uniform(0, 5) == 0) continue;
    model.objective.push_back({j, coefficient(-6, 9)});
  }
  const int rows = uniform(0, model.num_vars + 2);
  for (int r = 0; r < rows; ++r) {
    Constraint c;
    Rational positive_sum = 0;
    for (int j = 0; j < model.num_vars; ++j) {
      if (uniform(0, 2) == 0) continue;
      Rational coef = coefficient(-3, 6);
      if (coef == 0) continue;
      if (coef > 0) positive_sum += coef;
      c.terms.push_back({j, coef});
    }
    const int kind = uniform(0, 9);
    c.cmp = kind < 7 ? Comparator::kLessEqual
                     : (kind < 9 ? Comparator::kGreaterEqual : Comparator::kEqual);
    if (c.cmp == Comparator::kLessEqual) {
      c.rhs = Rational(uniform(0, 10)) * positive_sum / 10;
      c.rhs = Rational(mpz_class(c.rhs.get_num() / c.rhs.get_den()));
    } else if (c.cmp == Comparator::kGreaterEqual) {
      c.rhs = uniform(-1, 3);
    } else {
      // Pick a random assignment and make it satisfy the row.
      Rational lhs = 0;
      for (const Term& t : c.terms) {
        if (uniform(0, 1)) lhs += t.coef;
      }
      c.rhs = lhs;
    }
    model.constraints.push_back(std::move(c));
  }
  return model;
}

}  // namespace compactgen::testing
