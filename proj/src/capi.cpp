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

#include "testcover.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "json.hpp"
#include "testcover/analysis.hpp"
#include "testcover/differentiation.hpp"
#include "testcover/errors.hpp"
#include "testcover/exact.hpp"
#include "testcover/generators.hpp"
#include "testcover/instance.hpp"
#include "testcover/multicover.hpp"
#include "testcover/sga.hpp"

struct tc_instance {
  testcover::Instance impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, translating exceptions into status codes + tc_last_error.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return TC_OK;
  } catch (const testcover::ParseError& e) {
    g_last_error = e.what();
    return TC_ERR_PARSE;
  } catch (const testcover::InfeasibleError& e) {
    g_last_error = e.what();
    return TC_ERR_INFEASIBLE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TC_ERR;
  } catch (...) {
    g_last_error = "unknown error";
    return TC_ERR;
  }
}

std::uint64_t to_budget(long long node_budget) {
  if (node_budget < 0) return testcover::kNoNodeBudget;
  return static_cast<std::uint64_t>(node_budget);
}

}  // namespace

extern "C" {

const char* tc_status_name(int status) {
  switch (status) {
    case TC_OK:
      return "ok";
    case TC_ERR:
      return "error";
    case TC_ERR_INFEASIBLE:
      return "infeasible";
    case TC_ERR_PARSE:
      return "parse-error";
    case TC_ERR_BUDGET:
      return "budget-exhausted";
    default:
      return "unknown-status";
  }
}

const char* tc_last_error(void) { return g_last_error.c_str(); }

void tc_string_free(char* s) { std::free(s); }

int tc_instance_parse(const char* json_text, tc_instance** out) {
  return guarded([&] {
    if (json_text == nullptr || out == nullptr) {
      throw testcover::InvalidArgument("tc_instance_parse: null argument");
    }
    *out = new tc_instance{testcover::parse_instance(json_text)};
  });
}

int tc_instance_load(const char* path, tc_instance** out) {
  return guarded([&] {
    if (path == nullptr || out == nullptr) {
      throw testcover::InvalidArgument("tc_instance_load: null argument");
    }
    *out = new tc_instance{testcover::load_instance(path)};
  });
}

void tc_instance_free(tc_instance* instance) { delete instance; }

char* tc_instance_dump(const tc_instance* instance) {
  if (instance == nullptr) return nullptr;
  return dup_string(testcover::instance_to_json(instance->impl));
}

int tc_instance_items(const tc_instance* instance) {
  return instance == nullptr ? -1 : instance->impl.item_count();
}

int tc_instance_test_count(const tc_instance* instance) {
  return instance == nullptr ? -1 : instance->impl.test_count();
}

int tc_instance_redundancy(const tc_instance* instance) {
  return instance == nullptr ? -1 : instance->impl.redundancy();
}

int tc_instance_feasible(const tc_instance* instance) {
  if (instance == nullptr) return 0;
  return testcover::is_feasible(instance->impl) ? 1 : 0;
}

char* tc_instance_complement_pairs(const tc_instance* instance) {
  if (instance == nullptr) return nullptr;
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [a, b] : testcover::validate_no_complements(instance->impl)) {
    j.push_back({a, b});
  }
  return dup_string(j.dump());
}

int tc_solution_valid(const tc_instance* instance, const char* solution_json) {
  int valid = 0;
  const int rc = guarded([&] {
    if (instance == nullptr || solution_json == nullptr) {
      throw testcover::InvalidArgument("tc_solution_valid: null argument");
    }
    const testcover::Solution sol = testcover::parse_solution(solution_json);
    for (int pick : sol.picks) {
      if (pick < 0 || pick >= instance->impl.test_count()) {
        throw testcover::InvalidArgument(
            "tc_solution_valid: pick out of range");
      }
    }
    valid = testcover::is_r_test_set(sol, instance->impl) ? 1 : 0;
  });
  return rc == TC_OK ? valid : -rc;
}

int tc_solve_sga(const tc_instance* instance, int randomized_ties,
                 unsigned long long seed, char** out_json) {
  return guarded([&] {
    if (instance == nullptr || out_json == nullptr) {
      throw testcover::InvalidArgument("tc_solve_sga: null argument");
    }
    testcover::SgaOptions options;
    options.tie_break = randomized_ties != 0
                            ? testcover::TieBreak::kSeededRandom
                            : testcover::TieBreak::kLowestIndex;
    options.seed = seed;
    const testcover::SgaTrace trace =
        testcover::run_sga(instance->impl, options);
    *out_json = dup_string(testcover::trace_to_json(trace));
  });
}

char* tc_reduce_multicover(const tc_instance* instance) {
  if (instance == nullptr) return nullptr;
  return dup_string(
      testcover::multicover_to_json(testcover::reduce(instance->impl)));
}

int tc_verify_equivalence(const tc_instance* instance, int* agree) {
  return guarded([&] {
    if (instance == nullptr || agree == nullptr) {
      throw testcover::InvalidArgument("tc_verify_equivalence: null argument");
    }
    *agree = testcover::verify_equivalence(instance->impl) ? 1 : 0;
  });
}

int tc_solve_exact(const tc_instance* instance, long long node_budget,
                   char** out_json) {
  std::uint64_t budget = to_budget(node_budget);
  bool exhausted = false;
  const int rc = guarded([&] {
    if (instance == nullptr || out_json == nullptr) {
      throw testcover::InvalidArgument("tc_solve_exact: null argument");
    }
    const testcover::ExactResult result =
        testcover::solve_exact(instance->impl, budget);
    if (!result.certified()) {
      exhausted = true;
      g_last_error = "exact search budget exhausted after " +
                     std::to_string(result.nodes) + " nodes";
      return;
    }
    *out_json = dup_string(testcover::certificate_to_json(result));
  });
  if (rc != TC_OK) return rc;
  return exhausted ? TC_ERR_BUDGET : TC_OK;
}

int tc_bounds_report(const tc_instance* instance, long long node_budget,
                     int skip_oracle, char** out_json) {
  return guarded([&] {
    if (instance == nullptr || out_json == nullptr) {
      throw testcover::InvalidArgument("tc_bounds_report: null argument");
    }
    testcover::ReportOptions options;
    options.node_budget = to_budget(node_budget);
    options.skip_oracle = skip_oracle != 0;
    const testcover::BoundsReport report =
        testcover::full_report(instance->impl, options);
    *out_json = dup_string(testcover::report_to_json(report));
  });
}

char* tc_bounds_csv_header(void) {
  return dup_string(testcover::report_csv_header());
}

int tc_report_to_csv_row(const char* report_json, const char* seed_field,
                         char** out_row) {
  return guarded([&] {
    if (report_json == nullptr || out_row == nullptr) {
      throw testcover::InvalidArgument("tc_report_to_csv_row: null argument");
    }
    const testcover::BoundsReport report =
        testcover::report_from_json(report_json);
    *out_row = dup_string(testcover::report_csv_row(
        report, seed_field == nullptr ? "" : seed_field));
  });
}

int tc_potential_trace(const tc_instance* instance, long long node_budget,
                       char** out_json) {
  std::uint64_t budget = to_budget(node_budget);
  bool exhausted = false;
  const int rc = guarded([&] {
    if (instance == nullptr || out_json == nullptr) {
      throw testcover::InvalidArgument("tc_potential_trace: null argument");
    }
    const testcover::ExactResult oracle =
        testcover::solve_exact(instance->impl, budget);
    if (!oracle.certified()) {
      exhausted = true;
      g_last_error = "exact search budget exhausted; no certified optimum";
      return;
    }
    const testcover::SgaTrace trace = testcover::run_sga(instance->impl);
    const testcover::PotentialTrace potential = testcover::trace_potential(
        trace, *oracle.certificate, instance->impl);
    *out_json = dup_string(testcover::potential_trace_to_json(potential));
  });
  if (rc != TC_OK) return rc;
  return exhausted ? TC_ERR_BUDGET : TC_OK;
}

int tc_theorem_balance(int n, int r, char** out_json) {
  return guarded([&] {
    if (out_json == nullptr) {
      throw testcover::InvalidArgument("tc_theorem_balance: null argument");
    }
    *out_json = dup_string(
        testcover::theorem_expr_to_json(testcover::theorem_ratio_expr(n, r)));
  });
}

int tc_generate(const char* genspec_json, char** out_instance_json) {
  return guarded([&] {
    if (genspec_json == nullptr || out_instance_json == nullptr) {
      throw testcover::InvalidArgument("tc_generate: null argument");
    }
    const testcover::GenSpec spec = testcover::parse_genspec(genspec_json);
    *out_instance_json =
        dup_string(testcover::instance_to_json(testcover::generate(spec)));
  });
}

}  // extern "C"
