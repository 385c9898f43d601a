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

// Test-only reference implementations: maximally dumb, recompute everything
// from scratch, share no state machinery with the code under test.

#ifndef TESTCOVER_TESTS_ORACLES_HPP_
#define TESTCOVER_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "testcover/instance.hpp"
#include "testcover/sga.hpp"

namespace testcover::oracle {

// Literal reading of the separation predicate over the raw item list.
inline bool separates(const Instance& inst, int test, int a, int b) {
  const auto& items = inst.test_items(test);
  const bool has_a = std::count(items.begin(), items.end(), a) > 0;
  const bool has_b = std::count(items.begin(), items.end(), b) > 0;
  return has_a != has_b;
}

inline int perp_by_enumeration(const Instance& inst,
                               const std::vector<int>& picks, int a, int b) {
  int count = 0;
  for (int t : picks) {
    if (separates(inst, t, a, b)) ++count;
  }
  return count;
}

inline std::int64_t measure_by_enumeration(const Instance& inst,
                                           const std::vector<int>& picks) {
  std::int64_t measure = 0;
  for (int a = 0; a < inst.item_count(); ++a) {
    for (int b = a + 1; b < inst.item_count(); ++b) {
      const int got = perp_by_enumeration(inst, picks, a, b);
      measure += std::max(inst.redundancy() - got, 0);
    }
  }
  return measure;
}

inline bool feasible_by_enumeration(const Instance& inst,
                                    const std::vector<int>& picks) {
  return measure_by_enumeration(inst, picks) == 0;
}

// Greedy with per-step full recomputation: every candidate's measure is
// evaluated from scratch, ties fall to the lowest index via strict >.
inline SgaTrace naive_sga(const Instance& inst) {
  std::vector<int> picked;
  SgaTrace trace;
  while (true) {
    const std::int64_t before = measure_by_enumeration(inst, picked);
    if (before == 0) break;
    std::int64_t best_delta = 0;
    int best = -1;
    for (int j = 0; j < inst.test_count(); ++j) {
      if (std::count(picked.begin(), picked.end(), j) > 0) continue;
      std::vector<int> with = picked;
      with.push_back(j);
      const std::int64_t delta = before - measure_by_enumeration(inst, with);
      if (delta > best_delta) {
        best_delta = delta;
        best = j;
      }
    }
    if (best < 0) throw std::runtime_error("naive_sga: instance infeasible");
    picked.push_back(best);
    trace.steps.push_back(
        {best, before, measure_by_enumeration(inst, picked)});
  }
  trace.solution.picks = picked;
  return trace;
}

// Advances `combo` to the next k-subset of {0..t-1} in lexicographic order;
// false once exhausted.
inline bool next_combination(std::vector<int>& combo, int t) {
  const int k = static_cast<int>(combo.size());
  for (int pos = k - 1; pos >= 0; --pos) {
    if (combo[pos] < t - (k - pos)) {
      ++combo[pos];
      for (int rest = pos + 1; rest < k; ++rest) {
        combo[rest] = combo[rest - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

// Plain exhaustive optimum: all index subsets in increasing size, lex order
// within each size. Returns the first feasible subset found.
inline std::optional<std::pair<int, std::vector<int>>> exact_by_enumeration(
    const Instance& inst) {
  const int t = inst.test_count();
  for (int k = 1; k <= t; ++k) {
    std::vector<int> combo(static_cast<std::size_t>(k));
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
      if (feasible_by_enumeration(inst, combo)) return {{k, combo}};
      if (!next_combination(combo, t)) break;
    }
  }
  return std::nullopt;
}

inline std::vector<std::vector<int>> all_optima_by_enumeration(
    const Instance& inst, int m_star) {
  std::vector<std::vector<int>> out;
  const int t = inst.test_count();
  if (m_star > t) return out;
  std::vector<int> combo(static_cast<std::size_t>(m_star));
  std::iota(combo.begin(), combo.end(), 0);
  while (true) {
    if (feasible_by_enumeration(inst, combo)) out.push_back(combo);
    if (!next_combination(combo, t)) break;
  }
  return out;
}

}  // namespace testcover::oracle

#endif  // TESTCOVER_TESTS_ORACLES_HPP_
