/* Copyright 2026 The Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the testcover shared library.
 *
 * Instances are opaque handles; every structured result crosses the
 * boundary as a JSON string owned by the library. Free strings with
 * tc_string_free and handles with tc_instance_free. Functions returning
 * int yield a tc_status; on failure tc_last_error() describes what went
 * wrong (the message is thread-local).
 */

#ifndef TESTCOVER_H_
#define TESTCOVER_H_

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TC_API __declspec(dllexport)
#else
#define TC_API __attribute__((visibility("default")))
#endif

typedef struct tc_instance tc_instance;

/* Values double as CLI exit codes. */
typedef enum tc_status {
  TC_OK = 0,
  TC_ERR = 1,            /* invalid argument or internal failure */
  TC_ERR_INFEASIBLE = 2, /* the instance admits no r-test set */
  TC_ERR_PARSE = 3,      /* malformed JSON or input file */
  TC_ERR_BUDGET = 4      /* exact-search node budget exhausted */
} tc_status;

TC_API const char* tc_status_name(int status);
TC_API const char* tc_last_error(void);
TC_API void tc_string_free(char* s);

/* --- instances ------------------------------------------------------- */

/* Instance JSON: {"n": <int>, "r": <int>, "tests": [[<item ids>], ...]}. */
TC_API int tc_instance_parse(const char* json_text, tc_instance** out);
TC_API int tc_instance_load(const char* path, tc_instance** out);
TC_API void tc_instance_free(tc_instance* instance);
TC_API char* tc_instance_dump(const tc_instance* instance);

TC_API int tc_instance_items(const tc_instance* instance);
TC_API int tc_instance_test_count(const tc_instance* instance);
TC_API int tc_instance_redundancy(const tc_instance* instance);

/* 1 when picking every test reaches coverage r on all pairs, else 0. */
TC_API int tc_instance_feasible(const tc_instance* instance);

/* JSON array of [j, k] index pairs whose tests are exact complements. */
TC_API char* tc_instance_complement_pairs(const tc_instance* instance);

/* 1 when the solution JSON ({"picks": [...]}) is an r-test set, else 0;
 * negative tc_status on malformed input. */
TC_API int tc_solution_valid(const tc_instance* instance,
                             const char* solution_json);

/* --- solvers ---------------------------------------------------------- */

/* Greedy run. randomized_ties != 0 breaks ties uniformly under `seed`
 * instead of by lowest index. Output JSON: {"picks": [...], "steps":
 * [{"test","measure_before","measure_after"}, ...]}. */
TC_API int tc_solve_sga(const tc_instance* instance, int randomized_ties,
                        unsigned long long seed, char** out_json);

/* Multicover view: {"N": ..., "r": ..., "subsets": [[element ids], ...]}. */
TC_API char* tc_reduce_multicover(const tc_instance* instance);

/* Sets *agree to 1 when the greedy run and the independent multicover
 * greedy select identical test sequences. */
TC_API int tc_verify_equivalence(const tc_instance* instance, int* agree);

/* Exact optimum. node_budget < 0 means unlimited; an exhausted budget
 * returns TC_ERR_BUDGET and no JSON. Output: {"certified": true, "m_star":
 * ..., "witness": [...], "hash_b": ..., "nodes": ...}. */
TC_API int tc_solve_exact(const tc_instance* instance, long long node_budget,
                          char** out_json);

/* --- analysis --------------------------------------------------------- */

/* Bound report with pass/fail/skip flags per check. An uncertified oracle
 * (budget, or skip_oracle != 0) yields TC_OK with the checks skipped. */
TC_API int tc_bounds_report(const tc_instance* instance, long long node_budget,
                            int skip_oracle, char** out_json);

/* Fixed CSV schema used by report rows. */
TC_API char* tc_bounds_csv_header(void);

/* Renders a report JSON document as one CSV row; seed_field is written
 * verbatim into the seed column. */
TC_API int tc_report_to_csv_row(const char* report_json,
                                const char* seed_field, char** out_row);

/* Potential-function trace along a greedy run against the certified
 * optimum. Degenerate optima yield {"degenerate": true}. */
TC_API int tc_potential_trace(const tc_instance* instance,
                              long long node_budget, char** out_json);

/* Closed-form ratio summary for (n, r): {"leading_part", "balanced_m_star",
 * "balanced_value", "note"}. */
TC_API int tc_theorem_balance(int n, int r, char** out_json);

/* --- generators ------------------------------------------------------- */

/* GenSpec JSON (kind "random": n, t, p, r, seed; kind "barcode":
 * sequences, min_len, max_len, r). Returns the instance JSON. */
TC_API int tc_generate(const char* genspec_json, char** out_instance_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TESTCOVER_H_ */
