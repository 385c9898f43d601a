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

// Batch front end over the testcover C API. Exit codes follow tc_status:
// 0 ok, 1 generic error, 2 infeasible, 3 parse error, 4 oracle budget
// exhausted.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "testcover.h"

namespace {

using nlohmann::json;

// Owns one library-allocated string.
struct CStr {
  char* ptr = nullptr;
  ~CStr() { tc_string_free(ptr); }
  CStr() = default;
  CStr(const CStr&) = delete;
  CStr& operator=(const CStr&) = delete;
};

struct InstanceHandle {
  tc_instance* ptr = nullptr;
  ~InstanceHandle() { tc_instance_free(ptr); }
  InstanceHandle() = default;
  InstanceHandle(const InstanceHandle&) = delete;
  InstanceHandle& operator=(const InstanceHandle&) = delete;
};

int report_failure(int rc) {
  std::fprintf(stderr, "testcover: %s: %s\n", tc_status_name(rc),
               tc_last_error());
  return rc;
}

int read_file(const std::string& path, std::string* out) {
  std::ifstream in(path);
  if (!in) {
    std::fprintf(stderr, "testcover: parse-error: cannot open %s\n",
                 path.c_str());
    return TC_ERR_PARSE;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  *out = buf.str();
  return TC_OK;
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return TC_OK;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "testcover: error: cannot write %s\n", path.c_str());
    return TC_ERR;
  }
  out << text;
  return TC_OK;
}

std::string pretty(const std::string& compact_json) {
  return json::parse(compact_json).dump(2) + "\n";
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

struct CommonOptions {
  std::string input;
  std::string output;
  std::string format = "json";
  long long oracle_budget = -1;
  bool skip_oracle = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> r_override;
  std::string tie_break = "lowest";
};

int cmd_solve(const CommonOptions& opt) {
  InstanceHandle inst;
  int rc = tc_instance_load(opt.input.c_str(), &inst.ptr);
  if (rc != TC_OK) return report_failure(rc);
  const int randomized = opt.tie_break == "random" ? 1 : 0;
  CStr trace;
  rc = tc_solve_sga(inst.ptr, randomized, opt.seed.value_or(0), &trace.ptr);
  if (rc != TC_OK) return report_failure(rc);
  // Never ship a solution that does not re-validate.
  if (tc_solution_valid(inst.ptr, trace.ptr) != 1) {
    std::fprintf(stderr, "testcover: error: produced solution failed "
                         "re-validation\n");
    return TC_ERR;
  }
  return write_output(pretty(trace.ptr), opt.output);
}

int cmd_exact(const CommonOptions& opt) {
  InstanceHandle inst;
  int rc = tc_instance_load(opt.input.c_str(), &inst.ptr);
  if (rc != TC_OK) return report_failure(rc);
  CStr cert;
  rc = tc_solve_exact(inst.ptr, opt.oracle_budget, &cert.ptr);
  if (rc != TC_OK) return report_failure(rc);
  return write_output(pretty(cert.ptr), opt.output);
}

int cmd_bounds(const CommonOptions& opt) {
  InstanceHandle inst;
  int rc = tc_instance_load(opt.input.c_str(), &inst.ptr);
  if (rc != TC_OK) return report_failure(rc);
  CStr report;
  rc = tc_bounds_report(inst.ptr, opt.oracle_budget, opt.skip_oracle ? 1 : 0,
                        &report.ptr);
  if (rc != TC_OK) return report_failure(rc);
  if (opt.format == "csv") {
    CStr header;
    header.ptr = tc_bounds_csv_header();
    CStr row;
    rc = tc_report_to_csv_row(report.ptr, "", &row.ptr);
    if (rc != TC_OK) return report_failure(rc);
    return write_output(std::string(header.ptr) + "\n" + row.ptr + "\n",
                        opt.output);
  }
  return write_output(pretty(report.ptr), opt.output);
}

int cmd_trace(const CommonOptions& opt) {
  InstanceHandle inst;
  int rc = tc_instance_load(opt.input.c_str(), &inst.ptr);
  if (rc != TC_OK) return report_failure(rc);
  CStr trace;
  rc = tc_potential_trace(inst.ptr, opt.oracle_budget, &trace.ptr);
  if (rc != TC_OK) return report_failure(rc);
  return write_output(pretty(trace.ptr), opt.output);
}

int cmd_gen(const CommonOptions& opt) {
  std::string spec_text;
  int rc = read_file(opt.input, &spec_text);
  if (rc != TC_OK) return rc;
  if (opt.seed.has_value() || opt.r_override.has_value()) {
    json spec;
    try {
      spec = json::parse(spec_text);
    } catch (const json::parse_error& e) {
      std::fprintf(stderr, "testcover: parse-error: genspec: %s\n", e.what());
      return TC_ERR_PARSE;
    }
    if (opt.seed.has_value()) spec["seed"] = *opt.seed;
    if (opt.r_override.has_value()) spec["r"] = *opt.r_override;
    spec_text = spec.dump();
  }
  CStr instance;
  rc = tc_generate(spec_text.c_str(), &instance.ptr);
  if (rc != TC_OK) return report_failure(rc);
  return write_output(pretty(instance.ptr), opt.output);
}

struct SweepSpec {
  std::vector<int> ns;
  std::vector<int> rs;
  int t = 10;
  double p = 0.5;
  int seeds = 10;
  std::uint64_t base_seed = 1;
  int max_retries = 64;
};

int parse_sweep_spec(const std::string& text, SweepSpec* spec) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::fprintf(stderr, "testcover: parse-error: sweep spec: %s\n", e.what());
    return TC_ERR_PARSE;
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("r")) {
    std::fprintf(stderr, "testcover: parse-error: sweep spec needs arrays "
                         "\"n\" and \"r\"\n");
    return TC_ERR_PARSE;
  }
  try {
    spec->ns = j["n"].get<std::vector<int>>();
    spec->rs = j["r"].get<std::vector<int>>();
    spec->t = j.value("t", 10);
    spec->p = j.value("p", 0.5);
    spec->seeds = j.value("seeds", 10);
    spec->base_seed = j.value("base_seed", std::uint64_t{1});
    spec->max_retries = j.value("max_retries", 64);
  } catch (const json::exception& e) {
    std::fprintf(stderr, "testcover: parse-error: sweep spec: %s\n", e.what());
    return TC_ERR_PARSE;
  }
  return TC_OK;
}

// One sweep cell entry: n, r and the per-cell worst observed ratio.
struct CellSummary {
  int n;
  int r;
  double max_ratio = -1.0;
  bool any = false;
};

int cmd_sweep(const CommonOptions& opt) {
  std::string spec_text;
  int rc = read_file(opt.input, &spec_text);
  if (rc != TC_OK) return rc;
  SweepSpec spec;
  rc = parse_sweep_spec(spec_text, &spec);
  if (rc != TC_OK) return rc;
  if (opt.seed.has_value()) spec.base_seed = *opt.seed;

  std::vector<std::string> rows;
  std::vector<json> json_rows;
  std::vector<CellSummary> cells;

  for (int n : spec.ns) {
    for (int r : spec.rs) {
      CellSummary cell{n, r};
      for (int i = 0; i < spec.seeds; ++i) {
        // Derive one stream per (cell, index, attempt); retries walk the
        // attempt slot until the draw is feasible.
        InstanceHandle inst;
        std::uint64_t used_seed = 0;
        for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
          const std::uint64_t mixed =
              splitmix64(spec.base_seed ^
                         splitmix64((static_cast<std::uint64_t>(n) << 48) ^
                                    (static_cast<std::uint64_t>(r) << 40) ^
                                    (static_cast<std::uint64_t>(i) << 16) ^
                                    static_cast<std::uint64_t>(attempt)));
          json genspec = {{"kind", "random"}, {"n", n},         {"t", spec.t},
                          {"p", spec.p},     {"r", r},          {"seed", mixed}};
          const std::string genspec_text = genspec.dump();
          CStr instance_json;
          if (tc_generate(genspec_text.c_str(), &instance_json.ptr) != TC_OK) {
            continue;
          }
          tc_instance* candidate = nullptr;
          if (tc_instance_parse(instance_json.ptr, &candidate) != TC_OK) {
            continue;
          }
          if (tc_instance_feasible(candidate) == 1) {
            inst.ptr = candidate;
            used_seed = mixed;
            break;
          }
          tc_instance_free(candidate);
        }
        if (inst.ptr == nullptr) {
          rows.push_back(std::to_string(n) + ',' + std::to_string(spec.t) +
                         ',' + std::to_string(r) + ",,,,,,,,,infeasible");
          json_rows.push_back({{"n", n}, {"t", spec.t}, {"r", r},
                               {"status", "infeasible"}});
          continue;
        }
        CStr report;
        rc = tc_bounds_report(inst.ptr, opt.oracle_budget,
                              opt.skip_oracle ? 1 : 0, &report.ptr);
        if (rc != TC_OK) {
          rows.push_back(std::to_string(n) + ',' + std::to_string(spec.t) +
                         ',' + std::to_string(r) + ',' +
                         std::to_string(used_seed) + ",,,,,,,," +
                         tc_status_name(rc));
          json_rows.push_back({{"n", n}, {"t", spec.t}, {"r", r},
                               {"seed", used_seed},
                               {"status", tc_status_name(rc)}});
          continue;
        }
        CStr row;
        rc = tc_report_to_csv_row(report.ptr, std::to_string(used_seed).c_str(),
                                  &row.ptr);
        if (rc != TC_OK) return report_failure(rc);
        rows.emplace_back(row.ptr);
        json parsed = json::parse(std::string(report.ptr));
        parsed["seed"] = used_seed;
        if (parsed.contains("ratio") && parsed["ratio"].is_number()) {
          const double ratio = parsed["ratio"].get<double>();
          if (!cell.any || ratio > cell.max_ratio) {
            cell.max_ratio = ratio;
            cell.any = true;
          }
        }
        json_rows.push_back(std::move(parsed));
      }
      cells.push_back(cell);
    }
  }

  if (opt.format == "csv") {
    CStr header;
    header.ptr = tc_bounds_csv_header();
    std::string out = std::string(header.ptr) + "\n";
    for (const std::string& row : rows) out += row + "\n";
    for (const CellSummary& cell : cells) {
      if (!cell.any) continue;
      out += "# max_ratio n=" + std::to_string(cell.n) +
             " r=" + std::to_string(cell.r) + " " +
             format_double(cell.max_ratio) + "\n";
    }
    return write_output(out, opt.output);
  }
  json out;
  out["rows"] = json_rows;
  json summary = json::array();
  for (const CellSummary& cell : cells) {
    if (!cell.any) continue;
    summary.push_back(
        {{"n", cell.n}, {"r", cell.r}, {"max_ratio", cell.max_ratio}});
  }
  out["summary"] = std::move(summary);
  return write_output(out.dump(2) + "\n", opt.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvers and bound diagnostics for test cover with redundancy"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::uint64_t seed_value = 0;
  int r_value = 0;

  const auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--input,-i", opt.input, "input file");
    if (needs_input) in->required();
    sub->add_option("--output,-o", opt.output,
                    "output file (stdout when omitted)");
    return sub;
  };

  auto* solve = add_common(app.add_subcommand("solve", "run the greedy solver"),
                           true);
  solve->add_option("--tie-break", opt.tie_break, "lowest | random")
      ->check(CLI::IsMember({"lowest", "random"}));
  solve->add_option("--seed", seed_value, "seed for random tie-breaks");

  auto* exact = add_common(
      app.add_subcommand("exact", "certify the optimum by exhaustive search"),
      true);
  exact->add_option("--oracle-budget", opt.oracle_budget,
                    "node limit, negative = unlimited");

  auto* bounds = add_common(
      app.add_subcommand("bounds", "bound report for one instance"), true);
  bounds->add_option("--oracle-budget", opt.oracle_budget,
                     "node limit, negative = unlimited");
  bounds->add_flag("--skip-oracle", opt.skip_oracle, "skip the exact oracle");
  bounds->add_option("--format", opt.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* trace = add_common(
      app.add_subcommand("trace", "potential trace along the greedy run"),
      true);
  trace->add_option("--oracle-budget", opt.oracle_budget,
                    "node limit, negative = unlimited");

  auto* gen = add_common(
      app.add_subcommand("gen", "generate an instance from a genspec"), true);
  gen->add_option("--seed", seed_value, "override the genspec seed");
  gen->add_option("--r", r_value, "override the genspec redundancy");

  auto* sweep = add_common(
      app.add_subcommand("sweep", "batch report over generated instances"),
      true);
  sweep->add_option("--seed", seed_value, "override the sweep base seed");
  sweep->add_option("--oracle-budget", opt.oracle_budget,
                    "node limit per instance, negative = unlimited");
  sweep->add_flag("--skip-oracle", opt.skip_oracle, "skip the exact oracle");
  sweep->add_option("--format", opt.format, "csv | json")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) {
    if (solve->count("--seed")) opt.seed = seed_value;
    return cmd_solve(opt);
  }
  if (exact->parsed()) return cmd_exact(opt);
  if (bounds->parsed()) return cmd_bounds(opt);
  if (trace->parsed()) return cmd_trace(opt);
  if (gen->parsed()) {
    if (gen->count("--seed")) opt.seed = seed_value;
    if (gen->count("--r")) opt.r_override = r_value;
    return cmd_gen(opt);
  }
  if (sweep->parsed()) {
    if (sweep->count("--seed")) opt.seed = seed_value;
    if (sweep->count("--format") == 0) opt.format = "csv";
    return cmd_sweep(opt);
  }
  return TC_ERR;
}
