/*
 * Copyright 2026 The dicke-sim Authors
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

/*
 * C interface to the driven, collectively damped Dicke model simulator.
 *
 * Every fallible call returns a dicke_status. On failure a message is kept in
 * thread-local storage and can be read with dicke_last_error() until the next
 * failing call on the same thread. Objects are opaque handles owned by the
 * caller and released with the matching *_destroy function; destroy functions
 * accept NULL.
 *
 * A dicke_context only carries numeric settings. It is not modified by the
 * computation calls, so one context may be shared by many threads as long as
 * no thread changes its settings concurrently. Passing NULL for a context uses
 * the built-in defaults.
 *
 * Spin values are passed as two_j = 2j = number of ions. Matrices are copied
 * out in row-major order with rows/columns ordered m = +j ... -j.
 */

#ifndef DICKE_DICKE_H
#define DICKE_DICKE_H

#include <stddef.h>

#if defined(DICKE_BUILDING_LIBRARY)
#define DICKE_API __attribute__((visibility("default")))
#else
#define DICKE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dicke_status {
  DICKE_OK = 0,
  DICKE_ERR_NULL_ARGUMENT = 1,
  DICKE_ERR_VALIDATION = 2,
  DICKE_ERR_SINGULAR = 3,
  DICKE_ERR_DEGENERATE = 4,
  DICKE_ERR_NOT_PSD = 5,
  DICKE_ERR_CAPACITY = 6,
  DICKE_ERR_INTEGRATION = 7,
  DICKE_ERR_RANGE = 8,
  DICKE_ERR_NOT_FOUND = 9,
  DICKE_ERR_INTERNAL = 10
} dicke_status;

typedef struct dicke_context dicke_context;
typedef struct dicke_state dicke_state;
typedef struct dicke_trajectory dicke_trajectory;

typedef struct dicke_params {
  int two_j;      /* 2j, number of ions */
  double omega;   /* Rabi frequency */
  double gamma_a; /* collective decay rate */
  double nbar;    /* mean phonon number */
} dicke_params;

typedef enum dicke_observable {
  DICKE_OBS_JZ = 0,
  DICKE_OBS_JPLUS = 1,
  DICKE_OBS_JMINUS = 2,
  DICKE_OBS_JPLUS_JMINUS = 3
} dicke_observable;

typedef struct dicke_fixed_point {
  double sx, sy, sz;
  double eigenvalue_re[3]; /* full 3x3 Jacobian spectrum */
  double eigenvalue_im[3];
  double leading_real;     /* largest tangent-plane real part */
  int stable;              /* 1 when leading_real < 0 */
} dicke_fixed_point;

DICKE_API const char* dicke_version(void);
DICKE_API const char* dicke_status_string(dicke_status status);
DICKE_API const char* dicke_last_error(void);

/* ---- context ----------------------------------------------------------- */

DICKE_API dicke_status dicke_context_create(dicke_context** out);
DICKE_API void dicke_context_destroy(dicke_context* ctx);
/* Local error target of the time integrator. */
DICKE_API dicke_status dicke_context_set_integrator_tolerance(dicke_context* ctx,
                                                              double tol);
DICKE_API dicke_status dicke_context_get_integrator_tolerance(
    const dicke_context* ctx, double* tol);

/* ---- states ------------------------------------------------------------ */

/* |j, m><j, m| for basis row `index` (0 is m = +j, 2j is m = -j). */
DICKE_API dicke_status dicke_state_create_basis(int two_j, int index,
                                                dicke_state** out);
/* Validating constructor from row-major real/imaginary parts (dim*dim each). */
DICKE_API dicke_status dicke_state_create(int two_j, const double* re,
                                          const double* im, dicke_state** out);
DICKE_API dicke_status dicke_state_clone(const dicke_state* state,
                                         dicke_state** out);
DICKE_API void dicke_state_destroy(dicke_state* state);
DICKE_API int dicke_state_two_j(const dicke_state* state);
DICKE_API int dicke_state_dim(const dicke_state* state);
/* Copies dim*dim entries row-major; `capacity` is the length of each array. */
DICKE_API dicke_status dicke_state_entries(const dicke_state* state, double* re,
                                           double* im, size_t capacity);
DICKE_API dicke_status dicke_state_expectation(const dicke_state* state,
                                               dicke_observable obs, double* re,
                                               double* im);
DICKE_API dicke_status dicke_state_trace_distance(const dicke_state* a,
                                                  const dicke_state* b,
                                                  double* out);

/* ---- steady states ----------------------------------------------------- */

DICKE_API dicke_status dicke_steady_state_numeric(const dicke_context* ctx,
                                                  const dicke_params* params,
                                                  dicke_state** out);
/* Exact zero-temperature state; gamma = gamma_a / omega (0 = pure drive). */
DICKE_API dicke_status dicke_steady_state_analytic(int two_j, double gamma,
                                                   dicke_state** out);
DICKE_API dicke_status dicke_closed_form_j1(double gamma, dicke_state** out);
/* ln D and D (D may be +inf for very large j and gamma). */
DICKE_API dicke_status dicke_normalization(int two_j, double gamma,
                                           double* log_value, double* value);

/* ---- entanglement ------------------------------------------------------ */

/* Two-ion concurrence: triplet embedding for j = 1, pair reduction for j > 1. */
DICKE_API dicke_status dicke_pair_concurrence(const dicke_context* ctx,
                                              const dicke_state* state,
                                              double* out);
/* Concurrence of an explicit 4x4 two-qubit matrix, basis (ee, eg, ge, gg). */
DICKE_API dicke_status dicke_two_qubit_concurrence(const dicke_context* ctx,
                                                   const double* re,
                                                   const double* im,
                                                   double* out);
/* 4x4 reduced two-ion matrix (row-major, 16 entries each). */
DICKE_API dicke_status dicke_pair_reduced_state(const dicke_state* state,
                                                double* re, double* im);

/* ---- time evolution ---------------------------------------------------- */

DICKE_API dicke_status dicke_evolve(const dicke_context* ctx,
                                    const dicke_state* initial,
                                    const dicke_params* params,
                                    const double* times, size_t count,
                                    dicke_trajectory** out);
DICKE_API void dicke_trajectory_destroy(dicke_trajectory* trajectory);
DICKE_API size_t dicke_trajectory_size(const dicke_trajectory* trajectory);
DICKE_API dicke_status dicke_trajectory_time(const dicke_trajectory* trajectory,
                                             size_t index, double* out);
/* Borrowed pointer, valid until the trajectory is destroyed. */
DICKE_API dicke_status dicke_trajectory_state(const dicke_trajectory* trajectory,
                                              size_t index,
                                              const dicke_state** out);

/* ---- semiclassical ----------------------------------------------------- */

/* Writes up to `capacity` fixed points; *count receives the total number. */
DICKE_API dicke_status dicke_fixed_points(const dicke_context* ctx,
                                          double omega_r,
                                          dicke_fixed_point* out,
                                          size_t capacity, size_t* count);
/* Branch continued from the stable south pole. */
DICKE_API dicke_status dicke_tracked_fixed_point(const dicke_context* ctx,
                                                 double omega_r,
                                                 dicke_fixed_point* out);
DICKE_API dicke_status dicke_bifurcation_scan(const dicke_context* ctx,
                                              const double* omega_r_grid,
                                              size_t count, double* critical);

#ifdef __cplusplus
}
#endif

#endif /* DICKE_DICKE_H */
