// Copyright 2026 zetaf contributors
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

/* C interface to zetaf. Every entry point returns a zetaf_status; on failure
 * zetaf_last_error() holds a message for the calling thread. Strings passed
 * in are NUL-terminated UTF-8 and are not retained. */

#ifndef ZETAF_ZETAF_H
#define ZETAF_ZETAF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ZETAF_API __declspec(dllexport)
#else
#define ZETAF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zetaf_status {
  ZETAF_OK = 0,
  ZETAF_ERR_NON_FINITE_TERM = 1,
  ZETAF_ERR_DIVERGENT_INPUT = 2,
  ZETAF_ERR_NOT_SUMMABLE = 3,
  ZETAF_ERR_NON_POSITIVE_ARGUMENT = 4,
  ZETAF_ERR_POLE_AT_ONE = 5,
  ZETAF_ERR_UNDEFINED_AT_ONE = 6,
  ZETAF_ERR_OUT_OF_DOMAIN = 7,
  ZETAF_ERR_INVALID_PARAMETERS = 8,
  ZETAF_ERR_NOT_PRIME = 9,
  ZETAF_ERR_BOUNDARY_POINT = 10,
  ZETAF_ERR_QUADRATURE_FAILURE = 11,
  ZETAF_ERR_SINGULAR_S = 12,
  ZETAF_ERR_SIEVE_TOO_SMALL = 13,
  ZETAF_ERR_CONSISTENCY_FAILURE = 14,
  /* Null pointer, unknown method name or buffer too small. */
  ZETAF_ERR_INVALID_ARGUMENT = 15,
  ZETAF_ERR_INTERNAL = 16
} zetaf_status;

typedef struct zetaf_policy {
  double tol;
  uint64_t max_terms;
} zetaf_policy;

typedef struct zetaf_value {
  double value;
  double tail_bound;
  uint64_t terms;
  int converged;
} zetaf_value;

typedef struct zetaf_sieve zetaf_sieve;
typedef struct zetaf_report zetaf_report;

typedef struct zetaf_record {
  const char* quantity; /* owned by the report */
  const char* method;   /* owned by the report */
  double value;
  double reference;
  double abs_error;
  double tolerance;
  uint64_t terms;
  int converged;
  int passed;
} zetaf_record;

ZETAF_API const char* zetaf_version(void);
ZETAF_API const char* zetaf_status_name(zetaf_status status);
ZETAF_API const char* zetaf_last_error(void);

/* tol = 1e-12, max_terms = 1e6. */
ZETAF_API void zetaf_policy_default(zetaf_policy* policy);

/* zeta(s). Methods: "ref" (Euler-Maclaurin; s > 1 or s = 0), "eta"
 * (alternating series, s > 0), "hyp", "cont" and "reflect" (integer s >= 2),
 * "gauss" and "sawtooth" (map Mellin routes, s > 1). policy may be NULL. */
ZETAF_API zetaf_status zetaf_zeta(double s, const char* method, const zetaf_policy* policy, zetaf_value* out);

/* Li_n(t). Methods: "series", "hyp" (returns Li_n^F(t) * t) and "cont"
 * (n >= 2). */
ZETAF_API zetaf_status zetaf_polylog(unsigned n, double t, const char* method, const zetaf_policy* policy,
                                     zetaf_value* out);

/* Named constants "zetaF0", "zetaF1" (series routes) and "gamma" (Gauss map
 * string length). reference receives the closed form (I0(2) - 1, Ei(1) -
 * gamma, the stored constant) and may be NULL. */
ZETAF_API zetaf_status zetaf_constant(const char* name, const zetaf_policy* policy, zetaf_value* out,
                                      double* reference);

/* Maps are named "gauss" or "sawtooth". */
ZETAF_API zetaf_status zetaf_map_eval(const char* map, double x, double* out);
ZETAF_API zetaf_status zetaf_map_length(const char* map, const zetaf_policy* policy, zetaf_value* out);
ZETAF_API zetaf_status zetaf_map_mellin(const char* map, uint64_t n, double s, double* out);

/* Exact integers and rationals are returned as decimal strings. If buffer is
 * too small (or NULL with size 0) the call fails with
 * ZETAF_ERR_INVALID_ARGUMENT and *needed holds the required size including
 * the terminator. needed may be NULL. */

/* kind: "s2" ({k, n}), "r" ({k, n}_r), "restricted" ({k, n}_2 by
 * difference), "restricted_explicit" ({k, n}_2 by the explicit sum). r is
 * read only for kind "r". */
ZETAF_API zetaf_status zetaf_stirling(const char* kind, unsigned k, unsigned n, unsigned r, char* buffer,
                                      size_t size, size_t* needed);

/* q3(m) as "num/den"; from the closed form, or from the three-term
 * recurrence when use_recurrence is nonzero. approx may be NULL. */
ZETAF_API zetaf_status zetaf_q3(unsigned m, int use_recurrence, char* buffer, size_t size, size_t* needed,
                                double* approx);

ZETAF_API zetaf_status zetaf_sieve_create(uint64_t limit, zetaf_sieve** out);
ZETAF_API void zetaf_sieve_destroy(zetaf_sieve* sieve);
ZETAF_API zetaf_status zetaf_sieve_limit(const zetaf_sieve* sieve, uint64_t* out);
ZETAF_API zetaf_status zetaf_prime_pi(const zetaf_sieve* sieve, double x, uint64_t* out);
ZETAF_API zetaf_status zetaf_chebyshev_theta(const zetaf_sieve* sieve, double x, double* out);
/* psi by prime powers; lcm_log receives ln lcm(1..x) when x is small enough
 * for the exact route and NaN otherwise (may be NULL). */
ZETAF_API zetaf_status zetaf_chebyshev_psi(const zetaf_sieve* sieve, double x, double* out, double* lcm_log);

/* suite: "zeta", "constants", "maps", "continuation", "combinatorics",
 * "number_theory" or "all". */
ZETAF_API zetaf_status zetaf_validate(const char* suite, const zetaf_policy* policy, uint64_t sieve_limit,
                                      zetaf_report** out);
ZETAF_API size_t zetaf_report_size(const zetaf_report* report);
ZETAF_API zetaf_status zetaf_report_get(const zetaf_report* report, size_t index, zetaf_record* out);
ZETAF_API void zetaf_report_destroy(zetaf_report* report);

#ifdef __cplusplus
}
#endif

#endif /* ZETAF_ZETAF_H */
