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

#include "testcover/differentiation.hpp"

#include <algorithm>

#include "testcover/errors.hpp"

namespace testcover {

bool differentiates(const std::vector<int>& test_items, ItemPair a) {
  const bool has_i =
      std::find(test_items.begin(), test_items.end(), a.i) != test_items.end();
  const bool has_j =
      std::find(test_items.begin(), test_items.end(), a.j) != test_items.end();
  return has_i != has_j;
}

bool differentiates(const Instance& instance, int test, ItemPair a) {
  return instance.test_contains(test, a.i) != instance.test_contains(test, a.j);
}

int perp_count(ItemPair a, const Solution& picks, const Instance& instance) {
  int count = 0;
  for (int t : picks.picks) {
    if (differentiates(instance, t, a)) ++count;
  }
  return count;
}

std::int64_t initial_measure(const Instance& instance) {
  return instance.redundancy() * num_pairs(instance.item_count());
}

std::vector<std::int64_t> differentiated_pair_ids(const Instance& instance,
                                                  int test) {
  const int n = instance.item_count();
  const auto& items = instance.test_items(test);
  std::vector<std::int64_t> ids;
  ids.reserve(items.size() * (n - items.size()));
  for (int i : items) {
    for (int j = 0; j < n; ++j) {
      if (instance.test_contains(test, j)) continue;
      ids.push_back(pair_index(ItemPair(i, j), n));
    }
  }
  return ids;
}

bool is_r_test_set(const Solution& picks, const Instance& instance) {
  const int n = instance.item_count();
  const int r = instance.redundancy();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (perp_count(ItemPair(i, j), picks, instance) < r) return false;
    }
  }
  return true;
}

bool is_feasible(const Instance& instance) {
  const int n = instance.item_count();
  const int r = instance.redundancy();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int count = 0;
      for (int t = 0; t < instance.test_count() && count < r; ++t) {
        if (differentiates(instance, t, ItemPair(i, j))) ++count;
      }
      if (count < r) return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> validate_no_complements(
    const Instance& instance) {
  std::vector<std::pair<int, int>> offenders;
  for (int j = 0; j < instance.test_count(); ++j) {
    for (int k = j + 1; k < instance.test_count(); ++k) {
      if (instance.test_mask(j).is_complement_of(instance.test_mask(k))) {
        offenders.emplace_back(j, k);
      }
    }
  }
  return offenders;
}

DifferentiationState::DifferentiationState(const Instance& instance)
    : instance_(&instance),
      counts_(static_cast<std::size_t>(num_pairs(instance.item_count())), 0),
      applied_(static_cast<std::size_t>(instance.test_count()), 0),
      measure_(initial_measure(instance)) {}

void DifferentiationState::apply_test(int test) {
  if (test < 0 || test >= instance_->test_count()) {
    throw InvalidArgument("apply_test: index " + std::to_string(test) +
                          " out of range");
  }
  if (applied_[test]) {
    throw InvalidArgument("apply_test: test " + std::to_string(test) +
                          " already applied");
  }
  const int r = instance_->redundancy();
  for (std::int64_t id : differentiated_pair_ids(*instance_, test)) {
    auto& c = counts_[static_cast<std::size_t>(id)];
    if (c < r) --measure_;  // this pair still had residual demand
    ++c;
  }
  applied_[test] = 1;
  order_.push_back(test);
}

}  // namespace testcover
