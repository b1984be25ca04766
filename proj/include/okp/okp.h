/* Copyright 2026 The okp Authors
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

/* C interface of libokp: online unbounded knapsack algorithms, the exact
 * offline oracle, adversarial families and minimax solvers.
 *
 * Every function returns an okp_status. On failure a message is available
 * from okp_last_error() on the calling thread. Strings returned through
 * `char** out` are owned by the caller and released with okp_string_free().
 * Report-producing calls take a format name: "json", "text" or "csv".
 */

#ifndef OKP_OKP_H_
#define OKP_OKP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(OKP_BUILDING_LIBRARY)
#define OKP_API __declspec(dllexport)
#else
#define OKP_API __declspec(dllimport)
#endif
#else
#define OKP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum okp_status {
  OKP_OK = 0,
  OKP_INVALID_ARGUMENT = 1,
  OKP_PARSE_ERROR = 2,
  OKP_IO_ERROR = 3,
  OKP_LIMIT_EXCEEDED = 4,
  OKP_NUMERICAL_ERROR = 5,
  OKP_INTERNAL_ERROR = 6,
} okp_status;

typedef struct okp_instance okp_instance;
typedef struct okp_family okp_family;
typedef struct okp_distribution okp_distribution;

OKP_API const char* okp_version(void);
OKP_API const char* okp_status_name(okp_status status);
/* Message of the last failed call on this thread; "" after a success. */
OKP_API const char* okp_last_error(void);
OKP_API void okp_string_free(char* s);

/* Instances in the text format: `simple` or `general`, then one
 * `<size> <value>` line per item. */
OKP_API okp_status okp_instance_parse(const char* text, okp_instance** out);
OKP_API okp_status okp_instance_load(const char* path, okp_instance** out);
OKP_API void okp_instance_free(okp_instance* instance);
OKP_API size_t okp_instance_size(const okp_instance* instance);
OKP_API okp_status okp_instance_text(const okp_instance* instance, char** out);

/* Exact optimum and witness packing. */
OKP_API okp_status okp_solve(const okp_instance* instance, const char* format,
                             char** out);

typedef struct okp_run_options {
  uint64_t seed;
  uint64_t trials;
  const char* eps; /* rational, e.g. "1/10"; NULL for the default */
  const char* p;   /* mixture probability; NULL for the default */
  int n;           /* prefix strategy resolution; 0 for the default */
  int threads;     /* 0 selects the hardware concurrency */
} okp_run_options;

/* Fills the defaults (seed 20260101, 100000 trials). */
OKP_API void okp_run_options_init(okp_run_options* options);

/* Algorithm names: first_item_fill, greedy_fill, wait_and_fill,
 * threshold_randomized, mixture, prefix_family, one_bit, eps_advice. */
OKP_API okp_status okp_run(const char* algorithm,
                           const okp_instance* instance, const char* id,
                           const okp_run_options* options,
                           const char* format, char** out);
OKP_API okp_status okp_evaluate(const char* algorithm,
                                const okp_family* family,
                                const okp_run_options* options,
                                const char* format, char** out);

/* Families from "kind:key=value,..." specs, e.g. "prefix:n=100,eps=1/1000". */
OKP_API okp_status okp_family_generate(const char* spec, okp_family** out);
OKP_API void okp_family_free(okp_family* family);
OKP_API size_t okp_family_instance_count(const okp_family* family);
OKP_API okp_status okp_family_instance(const okp_family* family, size_t index,
                                       okp_instance** out);
/* Report of the family; format "emit" writes the instance text format. */
OKP_API okp_status okp_family_describe(const okp_family* family,
                                       const char* format, char** out);

typedef enum okp_minimax_mode {
  OKP_MINIMAX_DETERMINISTIC = 0,
  OKP_MINIMAX_ADVICE = 1,
  OKP_MINIMAX_RANDOMIZED = 2,
  OKP_MINIMAX_DISTINCT_DECISIONS = 3,
} okp_minimax_mode;

OKP_API okp_status okp_minimax(const okp_family* family, okp_minimax_mode mode,
                               int advice_bits, const char* format, char** out);

/* Threshold strategy distribution. */
OKP_API okp_status okp_distribution_compute(double tolerance,
                                            okp_distribution** out);
OKP_API void okp_distribution_free(okp_distribution* dist);
OKP_API double okp_distribution_p_half(const okp_distribution* dist);
OKP_API double okp_distribution_p_two_thirds(const okp_distribution* dist);
OKP_API double okp_distribution_cdf(const okp_distribution* dist, double x);
/* Inverse-CDF sample for u in [0, 1). */
OKP_API double okp_distribution_sample(const okp_distribution* dist, double u);

OKP_API okp_status okp_constants(double tolerance, const char* format,
                                 char** out);

typedef void (*okp_line_callback)(const char* line, int passed,
                                  void* user_data);

/* Runs the acceptance suite; `criterion` 0 runs every criterion. Sets
 * *all_passed and calls `callback` (may be NULL) once per criterion. */
OKP_API okp_status okp_accept(uint64_t seed, int threads, int criterion,
                              okp_line_callback callback, void* user_data,
                              int* all_passed);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* OKP_OKP_H_ */
