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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "testcover/analysis.hpp"
#include "testcover/differentiation.hpp"
#include "testcover/errors.hpp"
#include "testcover/exact.hpp"
#include "testcover/generators.hpp"
#include "testcover/multicover.hpp"
#include "testcover/sga.hpp"

namespace tc = testcover;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  double seconds = 0.0;
};

tc::Instance random_instance(int n, int t, int r, std::uint64_t seed,
                             double p = 0.5) {
  tc::GenSpec spec;
  spec.kind = tc::GenSpec::Kind::kRandom;
  spec.n = n;
  spec.t = t;
  spec.p = p;
  spec.r = r;
  spec.seed = seed;
  return tc::gen_random(spec);
}

// Retries seeds until the draw is feasible (and, when required, free of
// complement test pairs so the bound checks actually fire).
tc::Instance feasible_instance(int n, int t, int r, std::mt19937_64& rng,
                               bool complement_free,
                               std::uint64_t* seed_out = nullptr) {
  for (int attempt = 0; attempt < 4000; ++attempt) {
    const std::uint64_t seed = rng();
    tc::Instance inst = random_instance(n, t, r, seed);
    if (!tc::is_feasible(inst)) continue;
    if (complement_free && !tc::validate_no_complements(inst).empty()) {
      continue;
    }
    if (seed_out != nullptr) *seed_out = seed;
    return inst;
  }
  throw std::runtime_error("could not draw a feasible instance");
}

bool covered_r_times(const tc::MulticoverInstance& mc,
                     const std::vector<int>& chosen) {
  std::vector<int> covered(static_cast<std::size_t>(mc.universe_size), 0);
  for (int j : chosen) {
    for (std::int64_t e : mc.subsets[static_cast<std::size_t>(j)]) {
      ++covered[static_cast<std::size_t>(e)];
    }
  }
  for (int c : covered) {
    if (c < mc.coverage) return false;
  }
  return true;
}

// ---- criterion 1: the reduction preserves feasibility both ways --------

Outcome criterion_reduction_iff() {
  Outcome out;
  std::mt19937_64 rng(101);
  int agree = 0;
  const int samples = 1000;
  for (int s = 0; s < samples; ++s) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int t = 1 + static_cast<int>(rng() % 10);
    const int r = 1 + static_cast<int>(rng() % 3);
    const tc::Instance inst = random_instance(n, t, r, rng());
    const tc::MulticoverInstance mc = tc::reduce(inst);
    std::vector<int> chosen;
    for (int j = 0; j < inst.test_count(); ++j) {
      if (rng() % 2 == 0) chosen.push_back(j);
    }
    const bool lhs = tc::is_r_test_set(tc::Solution{chosen}, inst);
    const bool rhs = covered_r_times(mc, chosen);
    if (lhs == rhs) ++agree;
  }
  out.pass = agree == samples;
  out.detail = std::to_string(agree) + "/" + std::to_string(samples) +
               " samples agree";
  return out;
}

// ---- criterion 2: SGA equals the independent multicover greedy ---------

Outcome criterion_equivalence() {
  Outcome out;
  std::mt19937_64 rng(202);
  int agreed = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int r = 1 + static_cast<int>(rng() % 3);
    // t in [3r, 12] keeps every cell plausibly feasible.
    const int t = 3 * r + static_cast<int>(rng() % (13 - 3 * r));
    const tc::Instance inst = feasible_instance(n, t, r, rng, false);
    if (tc::verify_equivalence(inst)) ++agreed;
  }
  out.pass = agreed == 200;
  out.detail = std::to_string(agreed) + "/200 step-for-step matches";
  return out;
}

// ---- criterion 3: validity, exhaustively at n = 3 ----------------------

Outcome criterion_validity_exhaustive() {
  Outcome out;
  const std::vector<std::vector<int>> pool = {{0},    {1},    {2},
                                              {0, 1}, {0, 2}, {1, 2}};
  int feasible_cases = 0;
  int infeasible_cases = 0;
  for (int r = 1; r <= 2; ++r) {
    for (unsigned mask = 0; mask < 64u; ++mask) {
      std::vector<std::vector<int>> tests;
      for (int b = 0; b < 6; ++b) {
        if (mask >> b & 1u) tests.push_back(pool[static_cast<std::size_t>(b)]);
      }
      const tc::Instance inst(3, r, std::move(tests));
      if (tc::is_feasible(inst)) {
        ++feasible_cases;
        const tc::SgaTrace trace = tc::run_sga(inst);
        if (!tc::is_r_test_set(trace.solution, inst)) {
          out.pass = false;
          out.detail = "greedy output invalid at mask " + std::to_string(mask);
          return out;
        }
      } else {
        ++infeasible_cases;
        bool raised = false;
        try {
          tc::run_sga(inst);
        } catch (const tc::InfeasibleError&) {
          raised = true;
        }
        if (!raised) {
          out.pass = false;
          out.detail = "missing infeasibility error at mask " +
                       std::to_string(mask);
          return out;
        }
      }
    }
  }
  out.detail = std::to_string(feasible_cases) + " feasible / " +
               std::to_string(infeasible_cases) + " infeasible collections";
  return out;
}

// ---- criteria 4-8: the certified sweep ----------------------------------

struct SweepOutcome {
  Outcome rho1;         // criterion 4
  Outcome lemma2;       // criterion 5
  Outcome lemma1;       // criterion 6
  Outcome potential;    // criterion 7
  Outcome size_facts;   // criterion 8
};

void dump_counterexample(const tc::Instance& inst, const tc::Solution& witness,
                         double bound, std::int64_t measured,
                         std::string* detail) {
  static int counter = 0;
  const fs::path path = fs::temp_directory_path() /
                        ("testcover_counterexample_" +
                         std::to_string(counter++) + ".json");
  nlohmann::json j;
  j["instance"] = nlohmann::json::parse(tc::instance_to_json(inst));
  j["witness"] = witness.picks;
  j["bound"] = bound;
  j["measured"] = measured;
  std::ofstream outf(path);
  outf << j.dump(2) << "\n";
  *detail += " counterexample: " + path.string();
}

SweepOutcome criterion_sweep() {
  SweepOutcome out;
  std::mt19937_64 rng(404);
  int produced = 0;
  int potential_checked = 0;
  int potential_skipped = 0;
  int enumerated = 0;

  for (int n = 4; n <= 8 && produced < 500; ++n) {
    for (int r = 1; r <= 3 && produced < 500; ++r) {
      const int t = 8 + 2 * r;
      for (int i = 0; i < 34 && produced < 500; ++i) {
        const tc::Instance inst = feasible_instance(n, t, r, rng, true);
        ++produced;

        const tc::SgaTrace trace = tc::run_sga(inst);
        const int sga_size = static_cast<int>(trace.solution.picks.size());
        const tc::ExactResult oracle = tc::solve_exact(inst);
        if (!oracle.certified()) continue;  // unbounded budget: unreachable
        const tc::OptimalCertificate& cert = *oracle.certificate;
        const std::int64_t hash_0 = tc::initial_measure(inst);

        // 4: the logarithmic ratio bound, exact integer-vs-real comparison.
        if (sga_size > tc::rho1(hash_0, cert.m_star) * cert.m_star) {
          out.rho1.pass = false;
          out.rho1.detail += " violation at n=" + std::to_string(n) +
                             " r=" + std::to_string(r);
        }

        // 5: the repetition-aware size bound with the canonical witness.
        if (sga_size >
            tc::lemma2_size_bound(hash_0, cert.hash_b, cert.m_star, r)) {
          out.lemma2.pass = false;
          out.lemma2.detail += " violation at n=" + std::to_string(n) +
                               " r=" + std::to_string(r);
        }

        // 6: repetition cap, canonical witness plus every optimum when
        // enumeration is affordable.
        const double cap = tc::lemma1_bound(inst.item_count(), cert.m_star, r);
        if (static_cast<double>(cert.hash_b) > cap) {
          out.lemma1.pass = false;
          dump_counterexample(inst, cert.witness, cap, cert.hash_b,
                              &out.lemma1.detail);
        }
        if (n <= 5) {
          ++enumerated;
          for (const tc::Solution& witness :
               tc::enumerate_optima(inst, cert.m_star)) {
            const std::int64_t measured = tc::count_exactly_r(witness, inst);
            if (static_cast<double>(measured) > cap) {
              out.lemma1.pass = false;
              dump_counterexample(inst, witness, cap, measured,
                                  &out.lemma1.detail);
            }
          }
        }

        // 7: potential-function inequalities on non-degenerate optima.
        if (cert.m_star >= 2) {
          const tc::PotentialTrace pot =
              tc::trace_potential(trace, cert, inst);
          if (pot.degenerate) {
            ++potential_skipped;
          } else {
            ++potential_checked;
            if (!pot.holds_monotone || !pot.holds_f0_below_cap ||
                !pot.holds_t1_below_k) {
              out.potential.pass = false;
              out.potential.detail +=
                  " violation at n=" + std::to_string(n) +
                  " r=" + std::to_string(r);
            }
          }
        }

        // 8: optimum size facts.
        const int lo =
            static_cast<int>(std::bit_width(static_cast<unsigned>(n - 1)));
        if (cert.m_star < lo || cert.m_star > r * (n - 1)) {
          out.size_facts.pass = false;
          out.size_facts.detail += " violation at n=" + std::to_string(n) +
                                   " r=" + std::to_string(r);
        }
      }
    }
  }

  const std::string base = std::to_string(produced) + " certified instances";
  if (out.rho1.detail.empty()) out.rho1.detail = base + ", zero violations";
  if (out.lemma2.detail.empty()) {
    out.lemma2.detail = base + ", zero violations";
  }
  if (out.lemma1.detail.empty()) {
    out.lemma1.detail = base + " (" + std::to_string(enumerated) +
                        " with all optima enumerated), zero violations";
  }
  if (out.potential.detail.empty()) {
    out.potential.detail = std::to_string(potential_checked) + " traced, " +
                           std::to_string(potential_skipped) +
                           " degenerate skips, zero violations";
  }
  if (potential_checked < 100) {
    out.potential.pass = false;
    out.potential.detail += " (too few non-degenerate traces)";
  }
  if (out.size_facts.detail.empty()) {
    out.size_facts.detail = base + ", zero violations";
  }
  return out;
}

// ---- criterion 9: balancing search vs. dense grid scan ------------------

Outcome criterion_balancing() {
  Outcome out;
  for (int n : {16, 64, 256}) {
    for (int r : {1, 2, 3}) {
      const std::int64_t hash_0 =
          static_cast<std::int64_t>(r) * tc::num_pairs(n);
      const auto expr = tc::theorem_ratio_expr(n, r);
      double best = -1.0;
      double prev_rho1 = 0.0;
      double prev_rho2 = 0.0;
      for (int m = 1; m <= r * (n - 1); ++m) {
        const double v1 = tc::rho1(hash_0, m);
        const double v2 = tc::rho2(static_cast<double>(hash_0),
                                   tc::lemma1_bound(n, m, r), r);
        best = std::max(best, std::min(v1, v2));
        if (m > 1) {
          if (v1 > prev_rho1 + 1e-12 || v2 < prev_rho2 - 1e-12) {
            out.pass = false;
            out.detail = "monotonicity breaks at n=" + std::to_string(n) +
                         " r=" + std::to_string(r) +
                         " m=" + std::to_string(m);
            return out;
          }
        }
        prev_rho1 = v1;
        prev_rho2 = v2;
      }
      if (std::abs(best - expr.balanced_value) > 1e-9) {
        out.pass = false;
        out.detail = "search=" + std::to_string(expr.balanced_value) +
                     " grid=" + std::to_string(best) +
                     " at n=" + std::to_string(n) + " r=" + std::to_string(r);
        return out;
      }
    }
  }
  out.detail = "9 grid scans matched within 1e-9, monotone throughout";
  return out;
}

// ---- criterion 10: byte-identical sweep reruns --------------------------

Outcome criterion_determinism() {
  Outcome out;
  const fs::path dir = fs::temp_directory_path() / "testcover_acceptance";
  fs::create_directories(dir);
  const fs::path spec = dir / "sweep_spec.json";
  {
    std::ofstream f(spec);
    f << R"({"n":[4,5,6],"r":[1,2],"t":10,"p":0.5,"seeds":5,)"
      << R"("base_seed":20260810})";
  }
  const fs::path out_a = dir / "sweep_a.csv";
  const fs::path out_b = dir / "sweep_b.csv";
  for (const fs::path& target : {out_a, out_b}) {
    const std::string cmd = std::string(TESTCOVER_CLI_PATH) + " sweep -i " +
                            spec.string() + " -o " + target.string() +
                            " > /dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) {
      out.pass = false;
      out.detail = "sweep invocation failed";
      return out;
    }
  }
  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  const std::string a = slurp(out_a);
  const std::string b = slurp(out_b);
  out.pass = !a.empty() && a == b;
  out.detail = out.pass ? std::to_string(a.size()) + " bytes, identical"
                        : "reruns differ";
  return out;
}

int g_failures = 0;

void report(int index, const std::string& name, const Outcome& outcome,
            double seconds, double budget_seconds) {
  const bool in_budget = budget_seconds <= 0.0 || seconds < budget_seconds;
  const bool pass = outcome.pass && in_budget;
  if (!pass) ++g_failures;
  std::printf("[%s] %2d. %-28s %s (%.2fs%s)\n", pass ? "PASS" : "FAIL", index,
              name.c_str(), outcome.detail.c_str(), seconds,
              in_budget ? "" : ", over budget");
}

template <typename Fn>
std::pair<Outcome, double> timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out = fn();
  const auto stop = std::chrono::steady_clock::now();
  const double seconds =
      std::chrono::duration_cast<std::chrono::duration<double>>(stop - start)
          .count();
  return {std::move(out), seconds};
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  {
    auto [out, secs] = timed(criterion_reduction_iff);
    report(1, "reduction-iff", out, secs, 5.0);
  }
  {
    auto [out, secs] = timed(criterion_equivalence);
    report(2, "sga-equals-multicover", out, secs, 10.0);
  }
  {
    auto [out, secs] = timed(criterion_validity_exhaustive);
    report(3, "validity-exhaustive-n3", out, secs, 0.0);
  }
  {
    const auto start = std::chrono::steady_clock::now();
    const SweepOutcome sweep = criterion_sweep();
    const double secs =
        std::chrono::duration_cast<std::chrono::duration<double>>(
            std::chrono::steady_clock::now() - start)
            .count();
    report(4, "rho1-bound", sweep.rho1, secs, 120.0);
    report(5, "lemma2-size-bound", sweep.lemma2, secs, 0.0);
    report(6, "lemma1-repetition-cap", sweep.lemma1, secs, 0.0);
    report(7, "potential-function", sweep.potential, secs, 0.0);
    report(8, "size-facts", sweep.size_facts, secs, 0.0);
  }
  {
    auto [out, secs] = timed(criterion_balancing);
    report(9, "theorem-balancing", out, secs, 0.0);
  }
  {
    auto [out, secs] = timed(criterion_determinism);
    report(10, "sweep-determinism", out, secs, 0.0);
  }
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
