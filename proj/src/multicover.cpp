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

#include "testcover/multicover.hpp"

#include <algorithm>

#include "json.hpp"
#include "testcover/errors.hpp"
#include "testcover/sga.hpp"

namespace testcover {

MulticoverInstance reduce(const Instance& instance) {
  const int n = instance.item_count();
  MulticoverInstance mc;
  mc.universe_size = num_pairs(n);
  mc.coverage = instance.redundancy();
  mc.subsets.reserve(instance.test_count());
  for (int t = 0; t < instance.test_count(); ++t) {
    std::vector<std::int64_t> subset;
    for (int i : instance.test_items(t)) {
      for (int j = 0; j < n; ++j) {
        if (instance.test_contains(t, j)) continue;
        subset.push_back(pair_index(ItemPair(i, j), n));
      }
    }
    std::sort(subset.begin(), subset.end());
    mc.subsets.push_back(std::move(subset));
  }
  return mc;
}

Solution greedy_multicover(const MulticoverInstance& mc) {
  const int r = mc.coverage;
  std::vector<int> covered(static_cast<std::size_t>(mc.universe_size), 0);
  std::vector<char> used(mc.subsets.size(), 0);
  std::int64_t demand = mc.universe_size * static_cast<std::int64_t>(r);

  Solution sol;
  while (demand > 0) {
    int best = -1;
    std::int64_t best_gain = 0;
    for (std::size_t j = 0; j < mc.subsets.size(); ++j) {
      if (used[j]) continue;
      std::int64_t gain = 0;
      for (std::int64_t e : mc.subsets[j]) {
        if (covered[static_cast<std::size_t>(e)] < r) ++gain;
      }
      if (gain > best_gain) {  // strict: first (lowest) index wins ties
        best_gain = gain;
        best = static_cast<int>(j);
      }
    }
    if (best < 0) {
      throw InfeasibleError("multicover: uncoverable residual demand " +
                            std::to_string(demand));
    }
    for (std::int64_t e : mc.subsets[static_cast<std::size_t>(best)]) {
      auto& c = covered[static_cast<std::size_t>(e)];
      if (c < r) --demand;
      ++c;
    }
    used[static_cast<std::size_t>(best)] = 1;
    sol.picks.push_back(best);
  }
  return sol;
}

bool verify_equivalence(const Instance& instance) {
  const Solution via_sga = run_sga(instance).solution;
  const Solution via_multicover = greedy_multicover(reduce(instance));
  return via_sga == via_multicover;
}

std::string multicover_to_json(const MulticoverInstance& mc, int indent) {
  nlohmann::json j;
  j["N"] = mc.universe_size;
  j["r"] = mc.coverage;
  j["subsets"] = mc.subsets;
  return j.dump(indent);
}

}  // namespace testcover
