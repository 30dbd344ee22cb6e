// Copyright 2026 The auglab Authors
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


/* C interface of the auglab library. All strings are UTF-8 and
 * NUL-terminated. Strings returned through char** out-parameters are owned by
 * the caller and released with auglab_string_free. Functions report failures
 * through their return code; auglab_last_error() then describes the most
 * recent failure on the calling thread. */
#ifndef AUGLAB_AUGLAB_H_
#define AUGLAB_AUGLAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define AUGLAB_API __declspec(dllexport)
#else
#define AUGLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum auglab_status {
  AUGLAB_OK = 0,
  AUGLAB_E_INVALID_ARGUMENT = 1,
  AUGLAB_E_DIMENSION_MISMATCH = 2,
  AUGLAB_E_PARSE = 3,
  AUGLAB_E_IO = 4,
  AUGLAB_E_RESOURCE_LIMIT = 5,
  AUGLAB_E_NOT_APPLICABLE = 6,
  AUGLAB_E_VERIFICATION_FAILED = 7,
  AUGLAB_E_INTERNAL = 8
} auglab_status;

typedef enum auglab_run_status {
  AUGLAB_RUN_OPTIMAL = 0,
  AUGLAB_RUN_BUDGET_EXCEEDED = 1,
  AUGLAB_RUN_ERROR = 2
} auglab_run_status;

typedef struct auglab_instance auglab_instance;
typedef struct auglab_run auglab_run;

typedef struct auglab_counters {
  uint64_t n_improvements;
  uint64_t n_subproblems;
  uint64_t n_phases;
  uint64_t n_exhaust;
  uint64_t n_skipped;
} auglab_counters;

AUGLAB_API const char* auglab_version(void);
AUGLAB_API const char* auglab_status_name(auglab_status status);
/* Message of the last failure on this thread; empty if none. */
AUGLAB_API const char* auglab_last_error(void);
AUGLAB_API void auglab_string_free(char* s);

/* Instances: JSON documents with an optional start point. */
AUGLAB_API auglab_status auglab_instance_load(const char* path,
                                              auglab_instance** out);
AUGLAB_API auglab_status auglab_instance_parse(const char* json,
                                               auglab_instance** out);
AUGLAB_API void auglab_instance_free(auglab_instance* instance);
AUGLAB_API size_t auglab_instance_dimension(const auglab_instance* instance);
AUGLAB_API auglab_status auglab_instance_to_json(
    const auglab_instance* instance, char** out);
/* Optimal value in the instance's own units, as "num/den" or an integer. */
AUGLAB_API auglab_status auglab_instance_solve(const auglab_instance* instance,
                                               char** value);

/* Generator parameters as JSON, e.g. {"kind": "CARDINALITY_K", "n": 12,
 * "k": 3, "seed": 1}. `sidecar` receives the cost levels of worst-case
 * instances and NULL otherwise; it may be NULL if not wanted. */
AUGLAB_API auglab_status auglab_generate(const char* params_json,
                                         char** instance_json,
                                         char** sidecar_json);

/* Runs one experiment described by a JSON config. With a non-NULL
 * `instance`, the config's instance source is ignored and the instance's
 * start point (or its default start) is used. */
AUGLAB_API auglab_status auglab_run_create(const char* config_json,
                                           const auglab_instance* instance,
                                           auglab_run** out);
AUGLAB_API void auglab_run_free(auglab_run* run);
AUGLAB_API auglab_run_status auglab_run_status_code(const auglab_run* run);
AUGLAB_API void auglab_run_counters(const auglab_run* run,
                                    auglab_counters* out);
/* Borrowed strings valid until auglab_run_free. */
AUGLAB_API const char* auglab_run_csv_row(const auglab_run* run);
AUGLAB_API const char* auglab_run_message(const auglab_run* run);
/* JSON lines; timestamps included when with_time is nonzero. Empty if the
 * run failed before starting. */
AUGLAB_API auglab_status auglab_run_trace(const auglab_run* run, int with_time,
                                          char** out);

AUGLAB_API const char* auglab_csv_header(void);
/* Runs a JSON array of configs on `workers` threads; returns CSV with a
 * header row, rows sorted by instance, algorithm and policy. */
AUGLAB_API auglab_status auglab_run_batch(const char* configs_json,
                                          unsigned workers, char** csv);

/* Checks every ordering identity of the worst-case family (k, p) and runs
 * the least-improving classic bit scaling and geometric scaling from the
 * adversarial start. `all_pass` is set to 1 if the identities hold and the
 * bit scaling count equals the prediction. */
AUGLAB_API auglab_status auglab_verify_worstcase(int k, int p, int* all_pass,
                                                 char** report);

/* Per-algorithm summary of a results CSV. */
AUGLAB_API auglab_status auglab_report(const char* csv_text, char** report);

#ifdef __cplusplus
}
#endif

#endif /* AUGLAB_AUGLAB_H_ */
