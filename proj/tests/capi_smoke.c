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

/* Compiled as plain C: proves the public header needs no C++ compiler. */

#include <stdio.h>
#include <string.h>

#include "testcover.h"

int main(void) {
  tc_instance* inst = NULL;
  if (tc_instance_parse("{\"n\":4,\"r\":1,\"tests\":[[0],[1],[2],[3]]}",
                        &inst) != TC_OK) {
    fprintf(stderr, "parse failed: %s\n", tc_last_error());
    return 1;
  }
  if (tc_instance_items(inst) != 4 || tc_instance_feasible(inst) != 1) {
    fprintf(stderr, "accessor mismatch\n");
    return 1;
  }
  char* trace = NULL;
  if (tc_solve_sga(inst, 0, 0, &trace) != TC_OK) {
    fprintf(stderr, "solve failed: %s\n", tc_last_error());
    return 1;
  }
  if (strstr(trace, "\"picks\"") == NULL) {
    fprintf(stderr, "unexpected trace payload\n");
    return 1;
  }
  tc_string_free(trace);

  char* cert = NULL;
  if (tc_solve_exact(inst, -1, &cert) != TC_OK) {
    fprintf(stderr, "exact failed: %s\n", tc_last_error());
    return 1;
  }
  if (strstr(cert, "\"m_star\":3") == NULL) {
    fprintf(stderr, "unexpected certificate: %s\n", cert);
    return 1;
  }
  tc_string_free(cert);
  tc_instance_free(inst);
  printf("capi smoke ok\n");
  return 0;
}
