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

/* C interface to the combcontract library.
 *
 * All exact numbers cross the boundary as strings "p/q"; structured inputs
 * and outputs are JSON text. Every function returns a cc_status; on failure
 * cc_last_error() describes the problem (thread-local, valid until the next
 * call on the same thread). Strings returned through char** are owned by
 * the caller and released with cc_string_free.
 */
#ifndef COMBCONTRACT_H_
#define COMBCONTRACT_H_

#include <stdint.h>

#if defined(_WIN32)
#define CC_API __declspec(dllexport)
#elif defined(__GNUC__)
#define CC_API __attribute__((visibility("default")))
#else
#define CC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cc_status {
  CC_OK = 0,
  CC_INVALID_ARGUMENT,
  CC_DUPLICATE_ACTION_ID,
  CC_NEGATIVE_COST,
  CC_ORACLE_RANGE_VIOLATION,
  CC_NONZERO_EMPTY_VALUE,
  CC_UNKNOWN_ACTION_ID,
  CC_UNKNOWN_AGENT_ID,
  CC_ELEMENT_ALREADY_PRESENT,
  CC_GROUND_SET_TOO_LARGE,
  CC_NOT_AN_EQUILIBRIUM,
  CC_INVALID_EPSILON,
  CC_ODD_N,
  CC_BAD_HIDDEN_SET_SIZE,
  CC_QUERY_BUDGET_EXCEEDED,
  CC_SCHEMA_ERROR,
  CC_RATIONAL_PARSE,
  CC_SOLVER_MISMATCH,
  CC_INVALID_OBJECTIVE,
  CC_IO_ERROR,
  CC_INTERNAL_ERROR,
  CC_UNKNOWN_ERROR
} cc_status;

/* Opaque instance handle. Immutable apart from its oracle's query counters. */
typedef struct cc_instance cc_instance;

CC_API const char* cc_version(void);
CC_API const char* cc_status_name(cc_status status);
CC_API const char* cc_last_error(void);
CC_API void cc_string_free(char* s);

/* Instances. */
CC_API cc_status cc_instance_from_json(const char* json, cc_instance** out);
CC_API cc_status cc_instance_to_json(const cc_instance* inst, char** out);
CC_API void cc_instance_free(cc_instance* inst);
CC_API cc_status cc_instance_shape(const cc_instance* inst, int* num_agents, int* num_actions);
/* "additive", "gs", "submodular" or "general" (the declared class). */
CC_API cc_status cc_instance_class(const cc_instance* inst, char** out);
CC_API cc_status cc_instance_queries(const cc_instance* inst, uint64_t* value, uint64_t* demand);
CC_API cc_status cc_instance_reset_queries(const cc_instance* inst);

/* Solvers. `solver` is "auto", "brute", "additive-fptas", "single-agent-fptas",
 * "gs-constant-factor" or "max-reward-bounded"; "auto" dispatches on the
 * declared class. `objective` is an objective descriptor ("profit" or a JSON
 * object). `eps` may be NULL for solvers that take none. Writes a
 * SolveResult as JSON. */
CC_API cc_status cc_solve(const cc_instance* inst, const char* solver, const char* objective,
                          const char* budget, const char* eps, int enum_cap, char** result_json);

/* Best single-agent contract for `agent`. */
CC_API cc_status cc_single_agent_exact(const cc_instance* inst, int agent, const char* objective,
                                       const char* budget, int enum_cap, char** result_json);

/* Downsizing with parameter M >= 3. `contract` is a JSON array of shares and
 * `profile` a JSON array of action ids. */
CC_API cc_status cc_downsize(const cc_instance* inst, int m, const char* contract,
                             const char* profile, int enum_cap, char** out);

/* Nash check. `contract` is a JSON array of shares, or a general contract
 * {"onFailure": [...], "onSuccess": [...]}. */
CC_API cc_status cc_verify_ne(const cc_instance* inst, const char* contract, const char* profile,
                              int enum_cap, char** out);

CC_API cc_status cc_verify_best(const cc_instance* inst, const char* objective,
                                int grid_denominator, char** out);

/* Hidden-set family. `params` is {"n", "budget", "approximation"?, "eps"?,
 * "hidden"?}; eps defaults to the family default and hidden to the first
 * n/2 agents. */
CC_API cc_status cc_hardness_instance(const char* params, cc_instance** out);
CC_API cc_status cc_hardness_good_contract(const char* params, char** out);
CC_API cc_status cc_gap_report(const char* params, char** out);

/* `solver` is "random-guess", "query-search" or "cheating". Any of the
 * three outputs may be NULL. */
CC_API cc_status cc_hardness_experiment(const char* params, const char* solver, int trials,
                                        uint64_t query_budget, uint64_t seed, char** summary_json,
                                        char** trials_csv, char** summary_csv);

/* `rows` is a JSON array of {"label", "objective", "budget", "eps"?,
 * "result": SolveResult, "reference"?}; writes CSV with a header line. */
CC_API cc_status cc_results_to_csv(const char* rows, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* COMBCONTRACT_H_ */
