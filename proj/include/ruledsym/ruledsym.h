// Copyright 2026 The ruledsym Authors.
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


/* C interface to the ruledsym library. Handles are opaque and owned by the
 * caller; every handle and string returned here is released with the
 * matching rs_*_free function. Functions are safe to call concurrently on
 * distinct handles. The message of the last failure is kept per thread. */

#ifndef RULEDSYM_RULEDSYM_H_
#define RULEDSYM_RULEDSYM_H_

#include <stddef.h>

#if defined(_WIN32)
#define RS_API __declspec(dllexport)
#else
#define RS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rs_status {
  RS_OK = 0,
  RS_ERR_PARSE = 1,
  RS_ERR_CYLINDRICAL_INPUT = 2,
  RS_ERR_POSITIVE_DIMENSIONAL = 3,
  RS_ERR_PARAM_HEURISTIC_FAILED = 4,
  RS_ERR_PRECISION_BUDGET = 5,
  RS_ERR_ZERO_INPUT = 6,
  RS_ERR_ZERO_DIRECTION = 7,
  RS_ERR_NOT_AN_ISOMETRY = 8,
  RS_ERR_TRANSLATION_INVARIANT = 9,
  RS_ERR_INVALID_ARGUMENT = 10,
  RS_ERR_INTERNAL = 11
} rs_status;

typedef enum rs_mode {
  RS_MODE_ALL = 0,
  RS_MODE_INVOLUTIONS = 1,
  /* All symmetries; fails with RS_ERR_INVALID_ARGUMENT unless the surface is a cone. */
  RS_MODE_CONICAL = 2
} rs_mode;

typedef struct rs_surface rs_surface;
typedef struct rs_report rs_report;

RS_API const char* rs_version(void);

/* Upper-case tag such as "CYLINDRICAL_INPUT"; "OK" for RS_OK. */
RS_API const char* rs_status_name(rs_status status);

/* Message of the most recent failure on this thread, or "". */
RS_API const char* rs_last_error(void);

/* JSON document {"p": [..3..], "q": [..3..]}; "p" is optional. */
RS_API rs_status rs_surface_from_json(const char* json, rs_surface** out);

/* p may be NULL for p = 0. Strings are rational functions of t. */
RS_API rs_status rs_surface_from_strings(const char* const* p, const char* const* q, rs_surface** out);

RS_API void rs_surface_free(rs_surface* surface);

/* Normalized surface as a JSON document; release with rs_string_free. */
RS_API rs_status rs_surface_to_json(const rs_surface* surface, char** out);

/* precision_bits = 0 keeps the default zero-test budget. */
RS_API rs_status rs_solve(const rs_surface* surface, rs_mode mode, const char* surface_id, unsigned precision_bits,
                          rs_report** out);

/* Implicit surface F(x,y,z) = 0; irreducibility of F is the caller's claim. */
RS_API rs_status rs_solve_implicit(const char* polynomial, unsigned precision_bits, rs_report** out);

RS_API size_t rs_report_count(const rs_report* report);

/* Kind of isometry `index` ("identity", "reflection", ...); NULL when out of range. */
RS_API const char* rs_report_kind(const rs_report* report, size_t index);

/* Deterministic JSON; release with rs_string_free. */
RS_API rs_status rs_report_json(const rs_report* report, char** out);

RS_API void rs_report_free(rs_report* report);

/* CSV "t,s,x,y,z"; range bounds are rational strings such as "-1/2". */
RS_API rs_status rs_emit_mesh(const rs_surface* surface, const char* t_lo, const char* t_hi, const char* s_lo,
                              const char* s_hi, int t_samples, int s_samples, char** out);

RS_API void rs_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* RULEDSYM_RULEDSYM_H_ */
