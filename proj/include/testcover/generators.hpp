// Copyright 2026 The Authors.
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

#ifndef TESTCOVER_GENERATORS_HPP_
#define TESTCOVER_GENERATORS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "testcover/instance.hpp"

namespace testcover {

// Reproducible instance recipes. `random` draws t tests with independent
// per-item inclusion probability p; `barcode` derives tests from the
// distinct substrings of a sequence family.
struct GenSpec {
  enum class Kind { kRandom, kBarcode };
  Kind kind = Kind::kRandom;
  int n = 0;
  int t = 0;
  double p = 0.5;
  int r = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> sequences;
  int min_len = 1;
  int max_len = 1;
};

GenSpec parse_genspec(const std::string& json_text);
std::string genspec_to_json(const GenSpec& spec, int indent = -1);

// Seeded random instance; identical spec -> byte-identical instance, on any
// platform. Feasibility is not guaranteed; callers check is_feasible.
Instance gen_random(const GenSpec& spec);

// Each candidate test is the set of sequences containing some substring of
// length in [min_len, max_len]. Candidates are visited by (length, lex),
// tests that hit nothing or everything are dropped, and duplicates by item
// set keep their first occurrence. Throws InvalidArgument on fewer than 2
// sequences. Indistinguishable sequence families simply come out infeasible.
Instance gen_barcode(const GenSpec& spec);

// Dispatch on spec.kind.
Instance generate(const GenSpec& spec);

}  // namespace testcover

#endif  // TESTCOVER_GENERATORS_HPP_
