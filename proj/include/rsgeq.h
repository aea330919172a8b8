/* Copyright 2026 The rsgeq Authors
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
 *
 * C interface to the rsgeq engine. Instances travel as JSON text in the
 * documented format; results come back as heap-allocated JSON or plain-text
 * strings that the caller releases with rsgeq_string_free. All functions
 * return RSGEQ_OK on success; on any other status the out parameters are
 * untouched and rsgeq_last_error() carries a message.
 */

#ifndef RSGEQ_H_
#define RSGEQ_H_

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rsgeq_instance rsgeq_instance;

typedef enum rsgeq_status {
  RSGEQ_OK = 0,
  RSGEQ_ERR_PARSE = 1,    /* malformed JSON or instance fields */
  RSGEQ_ERR_INVALID = 2,  /* well-formed input violating a precondition */
  RSGEQ_ERR_BUDGET = 3,   /* declined: the requested work exceeds the budget */
  RSGEQ_ERR_INTERNAL = 4  /* invariant failure inside the engine */
} rsgeq_status;

const char* rsgeq_version(void);

/* Thread-local message for the most recent failing call in this thread.
 * Valid until the next rsgeq call; never NULL. */
const char* rsgeq_last_error(void);

/* Releases a string returned through any char** out parameter. */
void rsgeq_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Instances                                                          */

rsgeq_status rsgeq_instance_parse(const char* json_text, rsgeq_instance** out);

/* Built-in instances: "super-strong", "contiguous", "centralized",
 * "laminar-large". */
rsgeq_status rsgeq_instance_from_fixture(const char* name, rsgeq_instance** out);

rsgeq_status rsgeq_instance_format(const rsgeq_instance* inst, char** json_out);

void rsgeq_instance_free(rsgeq_instance* inst);

/* ------------------------------------------------------------------ */
/* Analysis                                                           */

/* Game regime (resource count, identical tables, the optimum bottleneck
 * cost, quotas and types) and coalition-structure class memberships, with
 * witnesses found or verified. `budget` bounds the path search. */
rsgeq_status rsgeq_classify(const rsgeq_instance* inst, long long budget, char** json_out);

/* Stability of a given allocation. `notion` selects the deviating
 * coalitions: "nash" (single agents), "super-strong" (every non-empty
 * coalition), NULL or "coalition" (the instance's structure), or one of
 * "partition" / "laminar" / "contiguous" / "centralized" (the instance's
 * structure after verifying it belongs to that class). *stable_out is 1 when
 * no coalition holds a profitable deviation. */
rsgeq_status rsgeq_check(const rsgeq_instance* inst, const char* allocation_json,
                         const char* notion, long long budget, int* stable_out,
                         char** json_out);

/* Finds a stable allocation or certifies that none exists. Routes to the
 * matching construction (single agents, identical resources over a path,
 * two resources over a laminar structure) and falls back to an exhaustive
 * symmetry-reduced search. *found_out is 1 with an allocation in the
 * report, or 0 with a non-existence certificate. */
rsgeq_status rsgeq_solve(const rsgeq_instance* inst, const char* notion,
                         unsigned long long seed, long long budget, int* found_out,
                         char** json_out);

/* Refutes stability. With an allocation: finds a profitable deviation for
 * some coalition of the structure. Without one (allocation_json NULL): for
 * small instances certifies non-existence by exhausting the allocation
 * space; for the large laminar fixture shape runs the deterministic refuter
 * against a constructed plus seeded random equilibrium candidates.
 * *refuted_out is 1 when a refutation was produced. */
rsgeq_status rsgeq_refute(const rsgeq_instance* inst, const char* allocation_json,
                          unsigned long long seed, long long budget, int* refuted_out,
                          char** json_out);

/* ------------------------------------------------------------------ */
/* Reports                                                            */

/* Runs the sixteen-cell guarantee matrix. *consistent_out is 1 when every
 * cell's evidence agrees with its claimed entry. */
rsgeq_status rsgeq_reproduce(unsigned long long seed, long long budget,
                             int* consistent_out, char** text_out);

/* Machine-checks the strict-inclusion chain of structure classes over
 * n_agents agents (n_agents >= 2). *ok_out is 1 when every check passes. */
rsgeq_status rsgeq_hierarchy_demo(int n_agents, int* ok_out, char** text_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RSGEQ_H_ */
