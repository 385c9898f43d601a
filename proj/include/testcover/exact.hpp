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

#ifndef TESTCOVER_EXACT_HPP_
#define TESTCOVER_EXACT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "testcover/instance.hpp"

namespace testcover {

// Ground truth for one instance: the optimum size m*, the lexicographically
// smallest optimal pick set as witness, and hash_b = number of pairs the
// witness differentiates exactly r times.
struct OptimalCertificate {
  int m_star;
  Solution witness;
  std::int64_t hash_b;
};

inline constexpr std::uint64_t kNoNodeBudget = ~std::uint64_t{0};

// Outcome of the exact search. An exhausted node budget yields an honest
// "unknown" (no certificate) rather than a possibly wrong optimum.
struct ExactResult {
  std::optional<OptimalCertificate> certificate;
  std::uint64_t nodes = 0;
  bool certified() const { return certificate.has_value(); }
};

// Iterative deepening over the solution size, starting from
// max(ceil(log2 n), ceil(#0 / best single-test delta)), with depth-first
// search in lexicographic index order and branch-and-bound pruning
// (remaining measure vs. remaining picks times the best current delta).
// The first solution found is therefore the lexicographically smallest
// optimum. Intended for desk-scale instances (n <= 12, t <= 20 or so).
// Throws InfeasibleError on infeasible instances.
ExactResult solve_exact(const Instance& instance,
                        std::uint64_t node_budget = kNoNodeBudget);

// |{ pairs a : exactly r picked tests differentiate a }|. Only meaningful
// for feasible solutions; throws InvalidArgument otherwise.
std::int64_t count_exactly_r(const Solution& picks, const Instance& instance);

// Every optimal solution of size m_star, in lexicographic order. Exhaustive;
// only call on instances small enough to enumerate.
std::vector<Solution> enumerate_optima(const Instance& instance, int m_star);

// {"certified": ..., "m_star": ..., "witness": [...], "hash_b": ...,
//  "nodes": ...}; uncertified results carry only certified/nodes.
std::string certificate_to_json(const ExactResult& result, int indent = -1);

}  // namespace testcover

#endif  // TESTCOVER_EXACT_HPP_
