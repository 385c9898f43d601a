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

#include "testcover/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>

#include "json.hpp"
#include "testcover/differentiation.hpp"
#include "testcover/errors.hpp"

namespace testcover {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Relative slack for float comparisons on quantities that are tight by
// construction (potential plateaus hit exact equality).
bool leq_with_slack(double a, double b) {
  return a <= b + 1e-9 * std::max(1.0, std::abs(b));
}

bool degenerate_m_star(int m_star, int r) {
  // m* <= (r+1)/r  <=>  r*m* <= r+1, where the potential base drops to <= 0.
  return static_cast<std::int64_t>(r) * m_star <= r + 1;
}

const char* check_name(Check c) {
  switch (c) {
    case Check::kPass:
      return "pass";
    case Check::kFail:
      return "fail";
    case Check::kSkip:
      return "skip";
  }
  return "skip";
}

Check check_from_name(const std::string& s) {
  if (s == "pass") return Check::kPass;
  if (s == "fail") return Check::kFail;
  return Check::kSkip;
}

// Number of k-subsets of t, saturating instead of overflowing.
double binomial(int t, int k) {
  if (k < 0 || k > t) return 0.0;
  double v = 1.0;
  for (int i = 1; i <= k; ++i) {
    v *= static_cast<double>(t - k + i) / i;
    if (v > 1e18) return 1e18;
  }
  return v;
}

}  // namespace

double rho1(std::int64_t hash_0, int m_star) {
  if (hash_0 < 1 || m_star < 1) {
    throw InvalidArgument("rho1 requires hash_0 >= 1 and m_star >= 1");
  }
  return std::log(static_cast<double>(hash_0)) -
         std::log(static_cast<double>(m_star)) + 1.0;
}

double rho2(double hash_0, double hash_b, int r) {
  if (hash_0 < 1.0 || hash_b <= 0.0) {
    throw InvalidArgument("rho2 requires hash_0 >= 1 and hash_b > 0");
  }
  const double rr = static_cast<double>(r);
  return std::log(hash_0) - std::log(hash_0 / hash_b) / (rr + 1.0) +
         rr / (rr + 1.0) * std::log(rr + 1.0) + 1.0;
}

double lemma1_bound(int n, int m_star, int r) {
  if (n < 2 || m_star < 1 || r < 1) {
    throw InvalidArgument("lemma1_bound requires n >= 2, m_star >= 1, r >= 1");
  }
  return 2.0 * n * std::log2(static_cast<double>(n)) *
         std::pow(static_cast<double>(m_star), r - 1);
}

double lemma2_size_bound(std::int64_t hash_0, std::int64_t hash_b, int m_star,
                         int r) {
  if (hash_b == 0) {
    throw InvalidArgument(
        "lemma2_size_bound undefined for hash_b == 0; no optimal witness "
        "produces that value");
  }
  if (hash_b < 0 || hash_b > hash_0 || m_star < 1) {
    throw InvalidArgument("lemma2_size_bound requires 1 <= hash_b <= hash_0");
  }
  return rho2(static_cast<double>(hash_0), static_cast<double>(hash_b), r) *
             m_star +
         1.0;
}

double k_threshold(std::int64_t hash_0, std::int64_t hash_b, int m_star,
                   int r) {
  if (hash_b == 0) {
    throw InvalidArgument("k_threshold undefined for hash_b == 0");
  }
  if (hash_b < 0 || hash_b > hash_0 || m_star < 1) {
    throw InvalidArgument("k_threshold requires 1 <= hash_b <= hash_0");
  }
  const double rr = static_cast<double>(r);
  return rr / (rr + 1.0) *
         std::log((rr + 1.0) * static_cast<double>(hash_0) /
                  static_cast<double>(hash_b)) *
         m_star;
}

double potential(std::int64_t measure, std::int64_t hash_b, int m_star, int r,
                 double k, int steps_taken) {
  if (degenerate_m_star(m_star, r)) {
    throw DegenerateInstance(
        "potential undefined: m_star <= (r+1)/r makes the base nonpositive");
  }
  const double rr = static_cast<double>(r);
  const double base = 1.0 - (rr + 1.0) / (rr * m_star);
  const double offset =
      static_cast<double>(measure) - rr / (rr + 1.0) * hash_b;
  return offset * std::pow(base, k - steps_taken);
}

TheoremExpr theorem_ratio_expr(int n, int r) {
  if (n < 3 || r < 1) {
    throw InvalidArgument("theorem_ratio_expr requires n >= 3 and r >= 1");
  }
  TheoremExpr out;
  const double rr = static_cast<double>(r);
  out.leading_part = (2.0 - 1.0 / (2.0 * rr)) * std::log(n) +
                     1.5 * std::log(rr);
  out.note =
      "leading part only; an additive O(ln ln n) term with unspecified "
      "constant is excluded";

  const std::int64_t hash_0 = static_cast<std::int64_t>(r) * num_pairs(n);
  const int m_max = r * (n - 1);
  const auto r1 = [&](int m) { return rho1(hash_0, m); };
  const auto r2 = [&](int m) {
    return rho2(static_cast<double>(hash_0), lemma1_bound(n, m, r), r);
  };

  // rho1 falls and rho2 rises with m*, so min(rho1, rho2) peaks around
  // their crossover. Locate the last m with rho2 <= rho1 by bisection and
  // compare the handful of candidate points.
  int lo = 1;
  int hi = m_max;
  int last_below = 0;  // largest m with rho2(m) <= rho1(m); 0 if none
  if (r2(1) <= r1(1)) {
    last_below = 1;
    while (lo < hi) {
      const int mid = lo + (hi - lo + 1) / 2;
      if (r2(mid) <= r1(mid)) {
        last_below = mid;
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
  }

  std::vector<int> candidates = {1, m_max};
  if (last_below >= 1) candidates.push_back(last_below);
  if (last_below + 1 <= m_max && last_below + 1 >= 1) {
    candidates.push_back(last_below + 1);
  }
  out.balanced_m_star = 0;
  out.balanced_value = -std::numeric_limits<double>::infinity();
  std::sort(candidates.begin(), candidates.end());
  for (int m : candidates) {
    const double v = std::min(r1(m), r2(m));
    if (v > out.balanced_value) {
      out.balanced_value = v;
      out.balanced_m_star = m;
    }
  }
  return out;
}

PotentialTrace trace_potential(const SgaTrace& trace,
                               const OptimalCertificate& certificate,
                               const Instance& instance) {
  const int r = instance.redundancy();
  const int m_star = certificate.m_star;
  const std::int64_t hash_b = certificate.hash_b;
  const std::int64_t hash_0 = initial_measure(instance);

  if (trace.steps.empty() || trace.steps.back().measure_after != 0) {
    throw InvalidArgument("trace_potential expects a completed greedy trace");
  }

  PotentialTrace out;
  if (degenerate_m_star(m_star, r)) {
    out.degenerate = true;
    return out;
  }

  out.k = k_threshold(hash_0, hash_b, m_star, r);
  out.f_values.reserve(trace.steps.size() + 1);
  out.f_values.push_back(potential(hash_0, hash_b, m_star, r, out.k, 0));
  for (std::size_t s = 0; s < trace.steps.size(); ++s) {
    out.f_values.push_back(potential(trace.steps[s].measure_after, hash_b,
                                     m_star, r, out.k,
                                     static_cast<int>(s) + 1));
  }

  // The split: picks made while the measure stays >= hash_b, the pick that
  // drops it below, and the tail. hash_b >= 1, so the final step qualifies.
  int drop = 0;
  while (trace.steps[static_cast<std::size_t>(drop)].measure_after >= hash_b) {
    ++drop;
  }
  out.t1_size = drop;
  out.t_tilde_step = drop;
  out.t2_size = static_cast<int>(trace.steps.size()) - drop - 1;

  out.holds_monotone = true;
  for (std::size_t s = 0; s + 1 < out.f_values.size(); ++s) {
    if (!leq_with_slack(out.f_values[s + 1], out.f_values[s])) {
      out.holds_monotone = false;
      break;
    }
  }
  out.holds_f0_below_cap =
      out.f_values.front() < static_cast<double>(hash_b) / (r + 1);
  out.holds_t1_below_k = static_cast<double>(out.t1_size) < out.k;
  out.holds_size_bound =
      leq_with_slack(static_cast<double>(trace.steps.size()),
                     lemma2_size_bound(hash_0, hash_b, m_star, r));
  return out;
}

BoundsReport full_report(const Instance& instance,
                         const ReportOptions& options) {
  BoundsReport rep;
  rep.n = instance.item_count();
  rep.t = instance.test_count();
  rep.r = instance.redundancy();
  rep.hash_0 = initial_measure(instance);
  rep.complements_present = !validate_no_complements(instance).empty();
  rep.theorem_expr =
      rep.n >= 3 ? theorem_ratio_expr(rep.n, rep.r).leading_part : kNan;

  const SgaTrace trace = run_sga(instance);
  rep.sga_size = static_cast<int>(trace.solution.picks.size());

  ExactResult oracle;
  if (!options.skip_oracle) {
    oracle = solve_exact(instance, options.node_budget);
  }
  rep.oracle_certified = oracle.certified();
  if (!rep.oracle_certified) {
    rep.rho1 = rep.rho2 = rep.lemma1_bound = rep.lemma2_size_bound = kNan;
    rep.ratio = kNan;
    return rep;  // every check stays kSkip
  }

  const OptimalCertificate& cert = *oracle.certificate;
  rep.m_star = cert.m_star;
  rep.hash_b = cert.hash_b;
  rep.rho1 = rho1(rep.hash_0, rep.m_star);
  rep.rho2 = rho2(static_cast<double>(rep.hash_0),
                  static_cast<double>(rep.hash_b), rep.r);
  rep.lemma1_bound = lemma1_bound(rep.n, rep.m_star, rep.r);
  rep.lemma2_size_bound =
      lemma2_size_bound(rep.hash_0, rep.hash_b, rep.m_star, rep.r);
  rep.ratio = static_cast<double>(rep.sga_size) / rep.m_star;

  // The tightest repetition statistic ranges over every optimal witness;
  // only computed when plain enumeration is clearly affordable.
  if (rep.t <= 16 && binomial(rep.t, rep.m_star) <= 250000.0) {
    std::int64_t lowest = cert.hash_b;
    for (const Solution& witness : enumerate_optima(instance, rep.m_star)) {
      lowest = std::min(lowest, count_exactly_r(witness, instance));
    }
    rep.hash_b_min = lowest;
  }

  if (rep.complements_present) {
    return rep;  // bounds are not asserted outside the modelling assumption
  }

  rep.check_rho1 = rep.sga_size <= rep.rho1 * rep.m_star ? Check::kPass
                                                         : Check::kFail;
  rep.check_lemma1 = static_cast<double>(rep.hash_b) <= rep.lemma1_bound
                         ? Check::kPass
                         : Check::kFail;
  bool lemma2_ok = rep.sga_size <= rep.lemma2_size_bound;
  if (rep.hash_b_min.has_value()) {
    lemma2_ok = lemma2_ok &&
                rep.sga_size <= lemma2_size_bound(rep.hash_0, *rep.hash_b_min,
                                                  rep.m_star, rep.r);
  }
  rep.check_lemma2 = lemma2_ok ? Check::kPass : Check::kFail;

  const int ceil_log2_n =
      static_cast<int>(std::bit_width(static_cast<unsigned>(rep.n - 1)));
  rep.check_size_facts = (rep.m_star >= ceil_log2_n &&
                          rep.m_star <= rep.r * (rep.n - 1))
                             ? Check::kPass
                             : Check::kFail;
  return rep;
}

namespace {

nlohmann::json number_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

double number_from(const nlohmann::json& j) {
  return j.is_null() ? kNan : j.get<double>();
}

}  // namespace

std::string report_to_json(const BoundsReport& report, int indent) {
  nlohmann::json j;
  j["n"] = report.n;
  j["t"] = report.t;
  j["r"] = report.r;
  j["hash_0"] = report.hash_0;
  j["sga_size"] = report.sga_size;
  j["oracle_certified"] = report.oracle_certified;
  j["complements_present"] = report.complements_present;
  j["theorem_expr"] = number_or_null(report.theorem_expr);
  if (report.oracle_certified) {
    j["m_star"] = report.m_star;
    j["hash_b"] = report.hash_b;
    if (report.hash_b_min.has_value()) j["hash_b_min"] = *report.hash_b_min;
    j["rho1"] = number_or_null(report.rho1);
    j["rho2"] = number_or_null(report.rho2);
    j["lemma1_bound"] = number_or_null(report.lemma1_bound);
    j["lemma2_size_bound"] = number_or_null(report.lemma2_size_bound);
    j["ratio"] = number_or_null(report.ratio);
  }
  j["checks"] = {{"rho1", check_name(report.check_rho1)},
                 {"lemma1", check_name(report.check_lemma1)},
                 {"lemma2", check_name(report.check_lemma2)},
                 {"size_facts", check_name(report.check_size_facts)}};
  return j.dump(indent);
}

BoundsReport report_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  BoundsReport rep;
  rep.n = j.at("n").get<int>();
  rep.t = j.at("t").get<int>();
  rep.r = j.at("r").get<int>();
  rep.hash_0 = j.at("hash_0").get<std::int64_t>();
  rep.sga_size = j.at("sga_size").get<int>();
  rep.oracle_certified = j.at("oracle_certified").get<bool>();
  rep.complements_present = j.at("complements_present").get<bool>();
  rep.theorem_expr = number_from(j.at("theorem_expr"));
  if (rep.oracle_certified) {
    rep.m_star = j.at("m_star").get<int>();
    rep.hash_b = j.at("hash_b").get<std::int64_t>();
    if (j.contains("hash_b_min")) {
      rep.hash_b_min = j["hash_b_min"].get<std::int64_t>();
    }
    rep.rho1 = number_from(j.at("rho1"));
    rep.rho2 = number_from(j.at("rho2"));
    rep.lemma1_bound = number_from(j.at("lemma1_bound"));
    rep.lemma2_size_bound = number_from(j.at("lemma2_size_bound"));
    rep.ratio = number_from(j.at("ratio"));
  } else {
    rep.rho1 = rep.rho2 = rep.lemma1_bound = rep.lemma2_size_bound = kNan;
    rep.ratio = kNan;
  }
  const auto& checks = j.at("checks");
  rep.check_rho1 = check_from_name(checks.at("rho1").get<std::string>());
  rep.check_lemma1 = check_from_name(checks.at("lemma1").get<std::string>());
  rep.check_lemma2 = check_from_name(checks.at("lemma2").get<std::string>());
  rep.check_size_facts =
      check_from_name(checks.at("size_facts").get<std::string>());
  return rep;
}

namespace {

std::string csv_number(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string report_csv_header() {
  return "n,t,r,seed,m_star,sga_size,ratio,rho1,hash_b,lemma1_bound,"
         "lemma2_size_bound,assertions_passed";
}

std::string report_csv_row(const BoundsReport& report,
                           const std::string& seed_field) {
  std::string flag;
  std::string failed;
  for (const auto& [name, check] :
       {std::pair<const char*, Check>{"rho1", report.check_rho1},
        {"lemma1", report.check_lemma1},
        {"lemma2", report.check_lemma2},
        {"size_facts", report.check_size_facts}}) {
    if (check == Check::kFail) {
      if (!failed.empty()) failed += '+';
      failed += name;
    }
  }
  if (!failed.empty()) {
    flag = "fail:" + failed;
  } else if (!report.oracle_certified || report.complements_present) {
    flag = "skip";
  } else {
    flag = "ok";
  }

  std::string row;
  row += std::to_string(report.n) + ',';
  row += std::to_string(report.t) + ',';
  row += std::to_string(report.r) + ',';
  row += seed_field + ',';
  row += (report.oracle_certified ? std::to_string(report.m_star) : "") + ',';
  row += std::to_string(report.sga_size) + ',';
  row += csv_number(report.ratio) + ',';
  row += csv_number(report.rho1) + ',';
  row += (report.oracle_certified ? std::to_string(report.hash_b) : "") + ',';
  row += csv_number(report.lemma1_bound) + ',';
  row += csv_number(report.lemma2_size_bound) + ',';
  row += flag;
  return row;
}

std::string potential_trace_to_json(const PotentialTrace& trace, int indent) {
  nlohmann::json j;
  j["degenerate"] = trace.degenerate;
  if (!trace.degenerate) {
    j["k"] = trace.k;
    j["f_values"] = trace.f_values;
    j["split"] = {{"t1_size", trace.t1_size},
                  {"t_tilde_step", trace.t_tilde_step},
                  {"t2_size", trace.t2_size}};
    j["checks"] = {{"monotone", trace.holds_monotone},
                   {"f0_below_cap", trace.holds_f0_below_cap},
                   {"t1_below_k", trace.holds_t1_below_k},
                   {"size_bound", trace.holds_size_bound}};
  }
  return j.dump(indent);
}

std::string theorem_expr_to_json(const TheoremExpr& expr, int indent) {
  nlohmann::json j;
  j["leading_part"] = expr.leading_part;
  j["balanced_m_star"] = expr.balanced_m_star;
  j["balanced_value"] = expr.balanced_value;
  j["note"] = expr.note;
  return j.dump(indent);
}

}  // namespace testcover
