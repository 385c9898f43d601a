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

#ifndef TESTCOVER_SGA_HPP_
#define TESTCOVER_SGA_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "testcover/differentiation.hpp"
#include "testcover/instance.hpp"

namespace testcover {

struct SgaStep {
  int test;
  std::int64_t measure_before;
  std::int64_t measure_after;
  std::int64_t delta() const { return measure_before - measure_after; }
};

// Full iteration history of one greedy run. measure_after of step t equals
// measure_before of step t+1; the last step ends at measure 0.
struct SgaTrace {
  std::vector<SgaStep> steps;
  Solution solution;
};

enum class TieBreak {
  kLowestIndex,   // deterministic, shared with the multicover solver
  kSeededRandom,  // uniform over the argmax set, for ratio experiments
};

struct SgaOptions {
  TieBreak tie_break = TieBreak::kLowestIndex;
  std::uint64_t seed = 0;  // only read in kSeededRandom mode
};

// Marginal progress of an unapplied test: the number of pairs it
// differentiates whose count is still below r.
std::int64_t greedy_delta(const DifferentiationState& state, int test);

// Set-cover greedy: repeatedly applies the test with the largest residual
// delta until the measure hits zero. Throws InfeasibleError when measure is
// positive but no remaining test makes progress (never loops forever).
SgaTrace run_sga(const Instance& instance, const SgaOptions& options = {});

// {"picks": [...], "steps": [{"test", "measure_before", "measure_after"}..]}
std::string trace_to_json(const SgaTrace& trace, int indent = -1);

}  // namespace testcover

#endif  // TESTCOVER_SGA_HPP_
