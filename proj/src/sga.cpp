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

#include "testcover/sga.hpp"

#include <queue>
#include <random>
#include <utility>

#include "json.hpp"
#include "testcover/errors.hpp"

namespace testcover {

namespace {

// Residual delta of a test given its precomputed pair list.
std::int64_t delta_over(const std::vector<std::int64_t>& pair_ids,
                        const DifferentiationState& state) {
  const int r = state.instance().redundancy();
  std::int64_t d = 0;
  for (std::int64_t id : pair_ids) {
    if (state.count(id) < r) ++d;
  }
  return d;
}

// Max-heap entry ordering: larger delta first, lower index on ties.
struct Candidate {
  std::int64_t delta;
  int test;
  bool operator<(const Candidate& other) const {
    if (delta != other.delta) return delta < other.delta;
    return test > other.test;
  }
};

[[noreturn]] void throw_infeasible(std::int64_t measure) {
  throw InfeasibleError(
      "no remaining test makes progress; residual measure " +
      std::to_string(measure));
}

}  // namespace

std::int64_t greedy_delta(const DifferentiationState& state, int test) {
  if (state.applied(test)) {
    throw InvalidArgument("greedy_delta: test " + std::to_string(test) +
                          " already applied");
  }
  return delta_over(differentiated_pair_ids(state.instance(), test), state);
}

SgaTrace run_sga(const Instance& instance, const SgaOptions& options) {
  const int t = instance.test_count();
  DifferentiationState state(instance);

  std::vector<std::vector<std::int64_t>> cover;
  cover.reserve(t);
  for (int j = 0; j < t; ++j) {
    cover.push_back(differentiated_pair_ids(instance, j));
  }

  SgaTrace trace;
  if (options.tie_break == TieBreak::kLowestIndex) {
    // Lazy greedy: heap entries hold stale deltas, which are upper bounds
    // because a test's delta never grows as picks accumulate. Re-evaluate
    // the top until its value is current; the heap order then makes it the
    // max-delta test of lowest index.
    std::priority_queue<Candidate> heap;
    for (int j = 0; j < t; ++j) {
      heap.push({static_cast<std::int64_t>(cover[j].size()), j});
    }
    while (state.measure() > 0) {
      int chosen = -1;
      std::int64_t chosen_delta = 0;
      while (!heap.empty()) {
        const Candidate top = heap.top();
        heap.pop();
        const std::int64_t now = delta_over(cover[top.test], state);
        if (now == top.delta) {
          chosen = top.test;
          chosen_delta = now;
          break;
        }
        heap.push({now, top.test});
      }
      if (chosen < 0 || chosen_delta == 0) throw_infeasible(state.measure());
      const std::int64_t before = state.measure();
      state.apply_test(chosen);
      trace.steps.push_back({chosen, before, state.measure()});
    }
  } else {
    // Randomized ties: full scan per step, uniform pick over the argmax set.
    std::mt19937_64 rng(options.seed);
    while (state.measure() > 0) {
      std::int64_t best = 0;
      std::vector<int> argmax;
      for (int j = 0; j < t; ++j) {
        if (state.applied(j)) continue;
        const std::int64_t d = delta_over(cover[j], state);
        if (d > best) {
          best = d;
          argmax.assign(1, j);
        } else if (d == best && d > 0) {
          argmax.push_back(j);
        }
      }
      if (argmax.empty()) throw_infeasible(state.measure());
      const int chosen = argmax[rng() % argmax.size()];
      const std::int64_t before = state.measure();
      state.apply_test(chosen);
      trace.steps.push_back({chosen, before, state.measure()});
    }
  }

  trace.solution.picks = state.applied_order();
  return trace;
}

std::string trace_to_json(const SgaTrace& trace, int indent) {
  nlohmann::json j;
  j["picks"] = trace.solution.picks;
  nlohmann::json steps = nlohmann::json::array();
  for (const SgaStep& s : trace.steps) {
    steps.push_back({{"test", s.test},
                     {"measure_before", s.measure_before},
                     {"measure_after", s.measure_after}});
  }
  j["steps"] = std::move(steps);
  return j.dump(indent);
}

}  // namespace testcover
