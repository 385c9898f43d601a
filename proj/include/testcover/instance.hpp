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

#ifndef TESTCOVER_INSTANCE_HPP_
#define TESTCOVER_INSTANCE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "testcover/bitset.hpp"

namespace testcover {

// Unordered pair of distinct items, stored canonically as i < j.
struct ItemPair {
  int i;
  int j;
  ItemPair(int a, int b);  // normalizes order; throws InvalidArgument if a == b
  bool operator==(const ItemPair&) const = default;
};

// Number of item pairs over n items: n(n-1)/2.
std::int64_t num_pairs(int n);

// Flat id of pair (i, j), i < j, under the fixed linearization
//   id(i, j) = i*n - i*(i+1)/2 + (j - i - 1).
// Every module that addresses pairs as array slots uses this layout.
std::int64_t pair_index(ItemPair a, int n);
ItemPair pair_from_index(std::int64_t id, int n);

// An ordered selection of distinct test indices (selection order preserved).
struct Solution {
  std::vector<int> picks;
  bool operator==(const Solution&) const = default;
};

// Immutable problem instance: items 0..n-1, a list of tests (item subsets)
// with stable indices, and the coverage requirement r. Safe to share across
// threads once constructed.
class Instance {
 public:
  // Throws InvalidArgument unless n >= 2, r >= 1 and every item id is in
  // range. Items inside a test are deduplicated and kept sorted.
  Instance(int n, int r, std::vector<std::vector<int>> tests);

  int item_count() const { return n_; }
  int redundancy() const { return r_; }
  int test_count() const { return static_cast<int>(tests_.size()); }

  const std::vector<int>& test_items(int test) const { return tests_[test]; }
  bool test_contains(int test, int item) const {
    return masks_[test].test(static_cast<std::size_t>(item));
  }
  const DynamicBitset& test_mask(int test) const { return masks_[test]; }

 private:
  int n_;
  int r_;
  std::vector<std::vector<int>> tests_;
  std::vector<DynamicBitset> masks_;
};

// Instance text format: {"n": <int>, "r": <int>, "tests": [[<item ids>],..]}.
// Parse failures throw ParseError with field context.
Instance parse_instance(const std::string& json_text);
Instance load_instance(const std::string& path);
std::string instance_to_json(const Instance& instance, int indent = -1);

Solution parse_solution(const std::string& json_text);
std::string solution_to_json(const Solution& solution, int indent = -1);

}  // namespace testcover

#endif  // TESTCOVER_INSTANCE_HPP_
