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

// Access to the fact-base fixtures under data/fixtures.

#ifndef COMPACTGEN_TESTS_SUPPORT_FIXTURES_H_
#define COMPACTGEN_TESTS_SUPPORT_FIXTURES_H_

#include <string>
#include <vector>

#include "compactgen/fact_model.h"

namespace compactgen::testing {

std::string fixture_path(const std::string& name);
FactBase load_fixture(const std::string& name);

// Every fixture, sorted.
std::vector<std::string> fixture_names();

}  // namespace compactgen::testing

#endif  // COMPACTGEN_TESTS_SUPPORT_FIXTURES_H_
