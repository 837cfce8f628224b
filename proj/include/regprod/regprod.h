/* Copyright 2026 The regprod Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the regprod solvers.
 *
 * Objects are opaque handles released with the matching *_free function
 * (NULL is accepted). Every fallible call returns an rp_status; on failure
 * the calling thread's last-error slots describe it until the next failing
 * call on that thread. Output parameters are untouched on failure.
 */

#ifndef REGPROD_REGPROD_H_
#define REGPROD_REGPROD_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RP_API __declspec(dllexport)
#else
#define RP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rp_status {
  RP_OK = 0,
  RP_INVALID_ARGUMENT = 1,
  RP_MISSING_FIELD = 2,
  RP_UNEXPECTED_FIELD = 3,
  RP_OUT_OF_RANGE = 4,
  RP_WRONG_KIND = 5,
  RP_MAXIMIZER_ON_BOUNDARY = 6,
  RP_BLOW_UP = 7,
  RP_OUT_OF_HORIZON = 8,
  RP_CONFIG_MISMATCH = 9,
  RP_NON_FINITE_PATH = 10,
  RP_EMPTY = 11,
  RP_IO = 12,
  RP_INTERNAL = 13
} rp_status;

typedef struct rp_params rp_params;
typedef struct rp_value_fn rp_value_fn;
typedef struct rp_nash rp_nash;

RP_API const char* rp_version(void);
RP_API const char* rp_status_name(rp_status status);
/* 1 for failures caused by bad input (CLI exit status 1), 0 otherwise. */
RP_API int rp_status_is_validation(rp_status status);

RP_API const char* rp_last_error_message(void);
/* Offending field for validation errors, "" otherwise. */
RP_API const char* rp_last_error_field(void);
/* {"error": {"code", "message", "field"[, "time"]}} */
RP_API const char* rp_last_error_json(void);

/* Model parameters from a JSON object {"kind": "single-firm" | "two-firm" |
 * "nash", <fields>}. */
RP_API rp_status rp_params_from_json(const char* json, int literal_signs,
                                     rp_params** out);
/* "single-firm", "two-firm" or "nash" (static storage). */
RP_API const char* rp_params_kind(const rp_params* params);
RP_API double rp_params_horizon(const rp_params* params);
RP_API void rp_params_free(rp_params* params);

/* Principal value function v = 1/2 x.A x + B.x + C. */
RP_API rp_status rp_solve_principal(const rp_params* params, size_t n_nodes,
                                    rp_value_fn** out);
RP_API size_t rp_value_fn_nodes(const rp_value_fn* v);
/* row = (t, A11, A12, A22, B1, B2, C). */
RP_API rp_status rp_value_fn_row(const rp_value_fn* v, size_t node, double row[7]);
RP_API rp_status rp_value_fn_eval(const rp_value_fn* v, double t, double x1, double x2,
                                  double* value, double grad[2]);
/* Optimal rates at gradient grad: (z1, z2) or (z11, z12, z21, z22). rates
 * must hold 4 entries; *n_rates receives the count. */
RP_API rp_status rp_optimal_rates(const rp_params* params, const double grad[2],
                                  double rates[4], size_t* n_rates);
RP_API void rp_value_fn_free(rp_value_fn* v);

/* Feedback equilibrium of the game. */
RP_API rp_status rp_solve_nash(const rp_params* params, size_t n_nodes, rp_nash** out);
RP_API size_t rp_nash_nodes(const rp_nash* nash);
/* row = (t, A, B, C, D, E, F, At, Bt, Ct, Dt, Et, Ft). */
RP_API rp_status rp_nash_row(const rp_nash* nash, size_t node, double row[13]);
RP_API rp_status rp_nash_strategy(const rp_nash* nash, int firm, double t, double x,
                                  double y, double* effort);
RP_API void rp_nash_free(rp_nash* nash);

/* Best response of `firm` to an opponent playing the piecewise-linear
 * function through (times[k], values[k]). `rows` receives n_nodes rows of
 * (t, A, B, C, D, E, F). */
RP_API rp_status rp_best_response(const rp_params* params, int firm, const double* times,
                                  const double* values, size_t n_samples, size_t n_nodes,
                                  double* rows);

/* Largest HJB residual on the default verification grid. */
RP_API rp_status rp_hjb_residual_principal(const rp_params* params, const rp_value_fn* v,
                                           double* max_abs);
RP_API rp_status rp_hjb_residual_nash(const rp_params* params, const rp_nash* nash,
                                      double max_abs[2]);

typedef struct rp_sim_config {
  size_t n_paths;
  double dt;
  uint64_t seed;
  double x0[2];
  double y0[2]; /* per agent; only y0[0] is used by the single-firm model */
  int antithetic;
  unsigned threads;
} rp_sim_config;

typedef struct rp_utility {
  double mean;
  double std_err;
  size_t n_paths;
  uint64_t seed;
} rp_utility;

RP_API void rp_sim_config_default(rp_sim_config* cfg);
/* agents[0..*n_agents) receive the agents' estimates. */
RP_API rp_status rp_simulate_principal(const rp_params* params, const rp_value_fn* v,
                                       const rp_sim_config* cfg, rp_utility* principal,
                                       rp_utility agents[2], size_t* n_agents);
RP_API rp_status rp_simulate_nash(const rp_params* params, const rp_nash* nash,
                                  const rp_sim_config* cfg, rp_utility firms[2]);

/* Runs a CLI scenario ("single-firm", "two-firm", "nash", "best-response",
 * "verify", "simulate") from config JSON text. out_dir and seed may be NULL
 * to keep the config's values. */
RP_API rp_status rp_run_scenario(const char* scenario, const char* config_json,
                                 const char* out_dir, const uint64_t* seed,
                                 int literal_signs);
/* The same, reading the config from a file (RP_IO if unreadable). */
RP_API rp_status rp_run_scenario_file(const char* scenario, const char* config_path,
                                      const char* out_dir, const uint64_t* seed,
                                      int literal_signs);

#ifdef __cplusplus
}
#endif

#endif /* REGPROD_REGPROD_H_ */
