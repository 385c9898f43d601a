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

#ifndef TESTCOVER_DIFFERENTIATION_HPP_
#define TESTCOVER_DIFFERENTIATION_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "testcover/instance.hpp"

namespace testcover {

// A test separates a pair when it contains exactly one of its items.
bool differentiates(const std::vector<int>& test_items, ItemPair a);
bool differentiates(const Instance& instance, int test, ItemPair a);

// Number of picked tests that differentiate pair a.
int perp_count(ItemPair a, const Solution& picks, const Instance& instance);

// Initial residual demand: r * n * (n-1) / 2.
std::int64_t initial_measure(const Instance& instance);

// Flat pair ids (see pair_index) of every pair the test differentiates,
// i.e. {i, j} with i in the test and j outside it.
std::vector<std::int64_t> differentiated_pair_ids(const Instance& instance,
                                                  int test);

// True iff every pair is differentiated by at least r of the picked tests.
bool is_r_test_set(const Solution& picks, const Instance& instance);

// True iff picking every test would be an r-test set. Solvers reject
// instances where this fails.
bool is_feasible(const Instance& instance);

// All index pairs (j, k), j < k, whose tests are exact set complements of
// each other. An empty result means the usual modelling assumption holds;
// solvers still accept offending instances, but bound assertions are
// withheld on them.
std::vector<std::pair<int, int>> validate_no_complements(
    const Instance& instance);

// Per-pair differentiation counts plus the residual measure
//   measure = sum over pairs a of max(r - count(a), 0),
// maintained incrementally as tests are applied. Counts are kept uncapped;
// the cap at r only enters the measure. Single-owner mutable.
class DifferentiationState {
 public:
  explicit DifferentiationState(const Instance& instance);

  const Instance& instance() const { return *instance_; }
  std::int64_t measure() const { return measure_; }
  int count(std::int64_t pair_id) const {
    return counts_[static_cast<std::size_t>(pair_id)];
  }
  const std::vector<int>& counts() const { return counts_; }

  bool applied(int test) const { return applied_[test] != 0; }
  const std::vector<int>& applied_order() const { return order_; }

  // Applies one test: bumps the count of every pair it differentiates and
  // charges the measure for pairs that were still below r. Throws
  // InvalidArgument if the test is out of range or already applied.
  void apply_test(int test);

 private:
  const Instance* instance_;
  std::vector<int> counts_;
  std::vector<char> applied_;
  std::vector<int> order_;
  std::int64_t measure_;
};

}  // namespace testcover

#endif  // TESTCOVER_DIFFERENTIATION_HPP_
