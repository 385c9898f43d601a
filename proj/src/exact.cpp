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

#include "testcover/exact.hpp"

#include <algorithm>
#include <bit>

#include "json.hpp"
#include "testcover/differentiation.hpp"
#include "testcover/errors.hpp"
#include "testcover/sga.hpp"

namespace testcover {

namespace {

struct BudgetExhausted {};  // internal unwinding signal, never escapes

// Depth-first search state shared across one solve. Enumerates index sets
// in lexicographic order, so the first completed solution at the minimal
// size is the lexicographically smallest optimum.
class Search {
 public:
  Search(const Instance& instance, std::uint64_t node_budget)
      : instance_(instance),
        r_(instance.redundancy()),
        budget_(node_budget),
        counts_(static_cast<std::size_t>(num_pairs(instance.item_count())),
                0),
        measure_(initial_measure(instance)) {
    cover_.reserve(instance.test_count());
    for (int j = 0; j < instance.test_count(); ++j) {
      cover_.push_back(differentiated_pair_ids(instance, j));
    }
  }

  std::uint64_t nodes() const { return nodes_; }

  // Finds one solution of size <= k (necessarily == k when the lower
  // bounds are sound), or reports that none exists.
  bool find(int k, std::vector<int>* out) {
    found_one_ = false;
    collect_all_ = false;
    dfs(0, k);
    if (found_one_) *out = first_;
    return found_one_;
  }

  // Collects every solution of exactly size k, in lexicographic order.
  std::vector<std::vector<int>> collect(int k) {
    found_one_ = false;
    collect_all_ = true;
    all_.clear();
    dfs(0, k);
    return std::move(all_);
  }

 private:
  std::int64_t delta(int j) const {
    std::int64_t d = 0;
    for (std::int64_t id : cover_[j]) {
      if (counts_[static_cast<std::size_t>(id)] < r_) ++d;
    }
    return d;
  }

  void apply(int j) {
    for (std::int64_t id : cover_[j]) {
      auto& c = counts_[static_cast<std::size_t>(id)];
      if (c < r_) --measure_;
      ++c;
    }
    picks_.push_back(j);
  }

  void undo(int j) {
    for (std::int64_t id : cover_[j]) {
      auto& c = counts_[static_cast<std::size_t>(id)];
      --c;
      if (c < r_) ++measure_;
    }
    picks_.pop_back();
  }

  // Returns true when the caller should stop exploring (single-solution
  // mode found its answer).
  bool dfs(int pos, int k) {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    if (measure_ == 0) {
      if (collect_all_) {
        all_.push_back(picks_);
        return false;
      }
      first_ = picks_;
      found_one_ = true;
      return true;
    }
    const int depth = static_cast<int>(picks_.size());
    if (depth == k) return false;
    const int t = instance_.test_count();
    if (t - pos < k - depth) return false;  // not enough tests left

    // Bound: even (k - depth) copies of the best remaining test cannot
    // retire the residual measure.
    std::vector<std::int64_t> deltas(static_cast<std::size_t>(t - pos));
    std::int64_t max_delta = 0;
    for (int j = pos; j < t; ++j) {
      deltas[static_cast<std::size_t>(j - pos)] = delta(j);
      max_delta = std::max(max_delta, deltas[static_cast<std::size_t>(j - pos)]);
    }
    if (max_delta == 0) return false;
    if (measure_ > static_cast<std::int64_t>(k - depth) * max_delta) {
      return false;
    }

    for (int j = pos; j < t; ++j) {
      // A zero-delta test stays redundant: every pair it separates is
      // already saturated, and later picks only add saturation, so any
      // solution through it would shrink to size k-1 without it.
      if (deltas[static_cast<std::size_t>(j - pos)] == 0) continue;
      apply(j);
      const bool done = dfs(j + 1, k);
      undo(j);
      if (done) return true;
    }
    return false;
  }

  const Instance& instance_;
  const int r_;
  const std::uint64_t budget_;
  std::vector<std::vector<std::int64_t>> cover_;
  std::vector<int> counts_;
  std::int64_t measure_;
  std::vector<int> picks_;
  std::uint64_t nodes_ = 0;
  bool collect_all_ = false;
  bool found_one_ = false;
  std::vector<int> first_;
  std::vector<std::vector<int>> all_;
};

int ceil_log2(int n) {
  return std::bit_width(static_cast<unsigned>(n - 1));
}

}  // namespace

ExactResult solve_exact(const Instance& instance, std::uint64_t node_budget) {
  if (!is_feasible(instance)) {
    throw InfeasibleError("solve_exact: instance admits no r-test set");
  }

  const std::int64_t hash_0 = initial_measure(instance);
  std::int64_t best_single = 0;
  for (int j = 0; j < instance.test_count(); ++j) {
    const auto& items = instance.test_items(j);
    const std::int64_t c = static_cast<std::int64_t>(items.size()) *
                           (instance.item_count() -
                            static_cast<std::int64_t>(items.size()));
    best_single = std::max(best_single, c);
  }
  // best_single >= 1 on feasible instances (some pair is differentiated).
  int lower = std::max<std::int64_t>(
      ceil_log2(instance.item_count()),
      (hash_0 + best_single - 1) / best_single);
  lower = std::max(lower, 1);

  // Greedy gives a feasible size, so deepening is capped.
  const int upper = static_cast<int>(run_sga(instance).solution.picks.size());

  Search search(instance, node_budget);
  try {
    for (int k = lower; k <= upper; ++k) {
      std::vector<int> witness;
      if (!search.find(k, &witness)) continue;
      OptimalCertificate cert;
      cert.m_star = static_cast<int>(witness.size());
      cert.witness.picks = std::move(witness);
      cert.hash_b = count_exactly_r(cert.witness, instance);
      return ExactResult{cert, search.nodes()};
    }
  } catch (const BudgetExhausted&) {
    return ExactResult{std::nullopt, search.nodes()};
  }
  // Unreachable: the greedy solution itself completes the k == upper pass.
  throw Error("solve_exact: search exhausted without finding the optimum");
}

std::int64_t count_exactly_r(const Solution& picks, const Instance& instance) {
  if (!is_r_test_set(picks, instance)) {
    throw InvalidArgument(
        "count_exactly_r: picks are not an r-test set; the statistic is "
        "undefined");
  }
  const int n = instance.item_count();
  const int r = instance.redundancy();
  std::int64_t exact = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (perp_count(ItemPair(i, j), picks, instance) == r) ++exact;
    }
  }
  return exact;
}

std::vector<Solution> enumerate_optima(const Instance& instance, int m_star) {
  Search search(instance, kNoNodeBudget);
  std::vector<Solution> out;
  for (auto& picks : search.collect(m_star)) {
    out.push_back(Solution{std::move(picks)});
  }
  return out;
}

std::string certificate_to_json(const ExactResult& result, int indent) {
  nlohmann::json j;
  j["certified"] = result.certified();
  j["nodes"] = result.nodes;
  if (result.certified()) {
    j["m_star"] = result.certificate->m_star;
    j["witness"] = result.certificate->witness.picks;
    j["hash_b"] = result.certificate->hash_b;
  }
  return j.dump(indent);
}

}  // namespace testcover
