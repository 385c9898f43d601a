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

#ifndef TESTCOVER_MULTICOVER_HPP_
#define TESTCOVER_MULTICOVER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "testcover/instance.hpp"

namespace testcover {

// Constrained set multicover instance over the pair universe: element e
// belongs to subset j iff test j differentiates pair e. Each subset may be
// used at most once; every element must be covered at least `coverage`
// times.
struct MulticoverInstance {
  std::int64_t universe_size;  // n(n-1)/2 canonical pair ids
  int coverage;                // r
  std::vector<std::vector<std::int64_t>> subsets;  // one per source test
};

// The natural reduction: subset j = { pair(i, k) : i in test_j, k outside }.
MulticoverInstance reduce(const Instance& instance);

// Greedy multicover: pick the subset adding the most residual coverage,
// lowest index on ties. Implemented against MulticoverInstance only, with
// no code shared with run_sga, so the two solvers can cross-check each
// other. Throws InfeasibleError when demand remains but nothing covers it.
Solution greedy_multicover(const MulticoverInstance& mc);

// True iff run_sga and greedy_multicover(reduce(...)) select the same test
// indices in the same order.
bool verify_equivalence(const Instance& instance);

// {"N": ..., "r": ..., "subsets": [[element ids], ...]}
std::string multicover_to_json(const MulticoverInstance& mc, int indent = -1);

}  // namespace testcover

#endif  // TESTCOVER_MULTICOVER_HPP_
