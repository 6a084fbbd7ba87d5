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

// Exact rational arithmetic used for model coefficients and objective values.

#ifndef COMPACTGEN_RATIONAL_H_
#define COMPACTGEN_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace compactgen {

using Rational = mpq_class;

// Parses "3", "-2/7", "0.125" or "1e-3" exactly. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Converts a double through its shortest round-trip decimal form, so 0.3
// becomes 3/10 rather than the binary expansion.
Rational rational_from_double(double value);

// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace compactgen

#endif  // COMPACTGEN_RATIONAL_H_
