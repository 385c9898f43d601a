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

#ifndef TESTCOVER_ANALYSIS_HPP_
#define TESTCOVER_ANALYSIS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "testcover/exact.hpp"
#include "testcover/instance.hpp"
#include "testcover/sga.hpp"

namespace testcover {

// Logarithmic greedy ratio bound: ln(hash_0) - ln(m_star) + 1.
double rho1(std::int64_t hash_0, int m_star);

// Repetition-aware ratio bound:
//   ln(hash_0) - 1/(r+1) * ln(hash_0 / hash_b) + r/(r+1) * ln(r+1) + 1.
// hash_b may be a real-valued cap rather than a measured count.
double rho2(double hash_0, double hash_b, int r);

// Cap on the number of pairs differentiated exactly r times by an optimal
// solution: 2 * n * log2(n) * m_star^(r-1).
double lemma1_bound(int n, int m_star, int r);

// Size bound for the greedy solution: rho2 * m_star + 1, with hash_b
// measured on an optimal witness. Throws InvalidArgument when hash_b == 0
// (the expression is undefined; no optimal witness can produce that value).
double lemma2_size_bound(std::int64_t hash_0, std::int64_t hash_b, int m_star,
                         int r);

// Step threshold separating the accelerated prefix of the greedy run:
//   k = r/(r+1) * ln((r+1) * hash_0 / hash_b) * m_star.
double k_threshold(std::int64_t hash_0, std::int64_t hash_b, int m_star,
                   int r);

// Discounted residual potential after `steps_taken` picks:
//   f = (measure - r/(r+1) * hash_b) * (1 - (r+1)/(r * m_star))^(k - steps).
// Throws DegenerateInstance when m_star <= (r+1)/r (base would be <= 0).
double potential(std::int64_t measure, std::int64_t hash_b, int m_star, int r,
                 double k, int steps_taken);

// Closed-form ratio summary for given (n, r). leading_part is the
// computable (2 - 1/(2r)) * ln n + 1.5 * ln r; an additive O(ln ln n) term
// with unspecified constant is excluded (see note). balanced_value is the
// exact max over integer m* in [1, r(n-1)] of min(rho1, rho2) with hash_b
// capped at lemma1_bound, located by crossover search; balanced_m_star is
// the smallest maximizer.
struct TheoremExpr {
  double leading_part;
  int balanced_m_star;
  double balanced_value;
  std::string note;
};
TheoremExpr theorem_ratio_expr(int n, int r);

// Potential values along one greedy run, with the prefix/threshold split:
// t1_size picks happen while the measure is still >= hash_b, step
// t_tilde_step (0-based) drops it below, t2_size picks remain. f_values[s]
// is the potential after s picks (so f_values.front() is the fresh state
// and there are steps+1 entries). The four `holds_*` flags record the
// inequalities this trace is expected to satisfy.
struct PotentialTrace {
  bool degenerate = false;  // m* <= (r+1)/r: nothing computed beyond this
  double k = 0.0;
  std::vector<double> f_values;
  int t1_size = 0;
  int t_tilde_step = 0;
  int t2_size = 0;
  bool holds_monotone = false;       // f never increases along the run
  bool holds_f0_below_cap = false;   // f(fresh) < hash_b / (r+1)
  bool holds_t1_below_k = false;     // t1_size < k
  bool holds_size_bound = false;     // total picks <= lemma2_size_bound
  bool all_hold() const {
    return holds_monotone && holds_f0_below_cap && holds_t1_below_k &&
           holds_size_bound;
  }
};

// Evaluates the potential along a completed greedy trace against a
// certified optimum. Degenerate m* yields a flagged, otherwise empty trace
// instead of an error.
PotentialTrace trace_potential(const SgaTrace& trace,
                               const OptimalCertificate& certificate,
                               const Instance& instance);

enum class Check { kPass, kFail, kSkip };

// One instance's worth of measured quantities and bound checks. Bound
// checks are skipped (not asserted) when the oracle is uncertified or when
// the instance carries complement test pairs, where the modelling
// assumption behind the bounds does not hold.
struct BoundsReport {
  int n = 0;
  int t = 0;
  int r = 0;
  std::int64_t hash_0 = 0;
  int sga_size = 0;
  bool oracle_certified = false;
  bool complements_present = false;
  int m_star = 0;                             // 0 when uncertified
  std::int64_t hash_b = -1;                   // -1 when uncertified
  std::optional<std::int64_t> hash_b_min;     // min over all optima, when
                                              // enumeration is affordable
  double rho1 = 0.0;
  double rho2 = 0.0;
  double lemma1_bound = 0.0;
  double lemma2_size_bound = 0.0;
  double theorem_expr = 0.0;  // leading_part for this (n, r)
  double ratio = 0.0;         // sga_size / m_star
  Check check_rho1 = Check::kSkip;        // sga_size <= rho1 * m_star
  Check check_lemma1 = Check::kSkip;      // hash_b <= lemma1_bound
  Check check_lemma2 = Check::kSkip;      // sga_size <= lemma2_size_bound,
                                          // also with hash_b_min when known
  Check check_size_facts = Check::kSkip;  // ceil(log2 n) <= m* <= r(n-1)
};

struct ReportOptions {
  std::uint64_t node_budget = kNoNodeBudget;
  bool skip_oracle = false;
};

// Runs SGA and the exact oracle, assembles every bound, and evaluates the
// checks. Throws InfeasibleError on infeasible instances.
BoundsReport full_report(const Instance& instance,
                         const ReportOptions& options = {});

std::string report_to_json(const BoundsReport& report, int indent = -1);
BoundsReport report_from_json(const std::string& json_text);

// CSV row schema shared by the bounds and sweep commands. seed_field is
// rendered verbatim (empty when no seed applies).
std::string report_csv_header();
std::string report_csv_row(const BoundsReport& report,
                           const std::string& seed_field);

std::string potential_trace_to_json(const PotentialTrace& trace,
                                    int indent = -1);
std::string theorem_expr_to_json(const TheoremExpr& expr, int indent = -1);

}  // namespace testcover

#endif  // TESTCOVER_ANALYSIS_HPP_
