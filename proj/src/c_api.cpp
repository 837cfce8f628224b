// Copyright 2026 The regprod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "regprod/regprod.h"

#include <new>
#include <string>
#include <vector>

#include "regprod/error.hpp"
#include "regprod/io.hpp"
#include "regprod/mc.hpp"
#include "regprod/nash.hpp"
#include "regprod/riccati.hpp"
#include "regprod/scenario.hpp"
#include "regprod/verify.hpp"

struct rp_params {
  regprod::ModelParams p;
};

struct rp_value_fn {
  regprod::QuadraticValueFn v;
};

struct rp_nash {
  regprod::NashCoeffs coeffs;
  regprod::ModelParams params;
};

namespace {

thread_local std::string g_message;
thread_local std::string g_field;
thread_local std::string g_json = "{}";

rp_status ToStatus(regprod::ErrorCode code) {
  using regprod::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return RP_INVALID_ARGUMENT;
    case ErrorCode::kMissingField: return RP_MISSING_FIELD;
    case ErrorCode::kUnexpectedField: return RP_UNEXPECTED_FIELD;
    case ErrorCode::kOutOfRange: return RP_OUT_OF_RANGE;
    case ErrorCode::kWrongKind: return RP_WRONG_KIND;
    case ErrorCode::kMaximizerOnBoundary: return RP_MAXIMIZER_ON_BOUNDARY;
    case ErrorCode::kBlowUp: return RP_BLOW_UP;
    case ErrorCode::kOutOfHorizon: return RP_OUT_OF_HORIZON;
    case ErrorCode::kConfigMismatch: return RP_CONFIG_MISMATCH;
    case ErrorCode::kNonFinitePath: return RP_NON_FINITE_PATH;
    case ErrorCode::kEmpty: return RP_EMPTY;
    case ErrorCode::kIo: return RP_IO;
  }
  return RP_INTERNAL;
}

rp_status Fail(rp_status s, std::string message, std::string field, std::string json) {
  g_message = std::move(message);
  g_field = std::move(field);
  g_json = std::move(json);
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
rp_status Guard(F&& body) {
  try {
    body();
    return RP_OK;
  } catch (const regprod::Error& e) {
    return Fail(ToStatus(e.code()), e.what(), e.field(), regprod::ErrorJson(e));
  } catch (const std::bad_alloc&) {
    return Fail(RP_INTERNAL, "out of memory", "", regprod::ErrorJson("Internal", "out of memory"));
  } catch (const std::exception& e) {
    return Fail(RP_INTERNAL, e.what(), "", regprod::ErrorJson("Internal", e.what()));
  }
}

rp_status NullArg(const char* name) {
  const std::string msg = std::string("argument '") + name + "' must not be NULL";
  return Fail(RP_INVALID_ARGUMENT, msg, name,
              regprod::ErrorJson(regprod::Error(regprod::ErrorCode::kInvalidArgument, msg, name)));
}

regprod::SimConfig ToSimConfig(const rp_sim_config& c, regprod::ModelKind kind) {
  regprod::SimConfig s;
  s.n_paths = c.n_paths;
  s.dt = c.dt;
  s.seed = c.seed;
  s.x0 = {c.x0[0], c.x0[1]};
  if (kind == regprod::ModelKind::kSingleFirm) s.y0 = {c.y0[0]};
  if (kind == regprod::ModelKind::kTwoFirmRegulated) s.y0 = {c.y0[0], c.y0[1]};
  s.antithetic = c.antithetic != 0;
  s.threads = c.threads;
  return s;
}

rp_utility ToUtility(const regprod::UtilityEstimate& e) {
  return {e.mean, e.std_err, e.n_paths, e.seed};
}

}  // namespace

extern "C" {

const char* rp_version(void) { return "0.1.0"; }

const char* rp_status_name(rp_status status) {
  switch (status) {
    case RP_OK: return "Ok";
    case RP_INVALID_ARGUMENT: return "InvalidArgument";
    case RP_MISSING_FIELD: return "MissingField";
    case RP_UNEXPECTED_FIELD: return "UnexpectedField";
    case RP_OUT_OF_RANGE: return "OutOfRange";
    case RP_WRONG_KIND: return "WrongKind";
    case RP_MAXIMIZER_ON_BOUNDARY: return "MaximizerOnBoundary";
    case RP_BLOW_UP: return "BlowUp";
    case RP_OUT_OF_HORIZON: return "OutOfHorizon";
    case RP_CONFIG_MISMATCH: return "ConfigMismatch";
    case RP_NON_FINITE_PATH: return "NonFinitePath";
    case RP_EMPTY: return "Empty";
    case RP_IO: return "Io";
    case RP_INTERNAL: return "Internal";
  }
  return "Unknown";
}

int rp_status_is_validation(rp_status status) {
  switch (status) {
    case RP_INVALID_ARGUMENT:
    case RP_MISSING_FIELD:
    case RP_UNEXPECTED_FIELD:
    case RP_OUT_OF_RANGE:
    case RP_WRONG_KIND:
    case RP_OUT_OF_HORIZON:
    case RP_CONFIG_MISMATCH:
    case RP_EMPTY:
      return 1;
    default:
      return 0;
  }
}

const char* rp_last_error_message(void) { return g_message.c_str(); }
const char* rp_last_error_field(void) { return g_field.c_str(); }
const char* rp_last_error_json(void) { return g_json.c_str(); }

rp_status rp_params_from_json(const char* json, int literal_signs, rp_params** out) {
  if (!json) return NullArg("json");
  if (!out) return NullArg("out");
  return Guard([&] { *out = new rp_params{regprod::ParseModel(json, literal_signs != 0)}; });
}

const char* rp_params_kind(const rp_params* params) {
  if (!params) return "";
  return regprod::ModelKindName(params->p.kind()).data();
}

double rp_params_horizon(const rp_params* params) {
  return params ? params->p.horizon() : 0.0;
}

void rp_params_free(rp_params* params) { delete params; }

rp_status rp_solve_principal(const rp_params* params, size_t n_nodes, rp_value_fn** out) {
  if (!params) return NullArg("params");
  if (!out) return NullArg("out");
  return Guard([&] { *out = new rp_value_fn{regprod::SolvePrincipal(params->p, n_nodes)}; });
}

size_t rp_value_fn_nodes(const rp_value_fn* v) { return v ? v->v.grid().size() : 0; }

rp_status rp_value_fn_row(const rp_value_fn* v, size_t node, double row[7]) {
  if (!v) return NullArg("v");
  if (!row) return NullArg("row");
  return Guard([&] {
    if (node >= v->v.grid().size()) {
      throw regprod::Error(regprod::ErrorCode::kOutOfRange, "node index out of range", "node");
    }
    row[0] = v->v.grid().t(node);
    const auto r = v->v.coefficients().row(node);
    for (std::size_t j = 0; j < r.size(); ++j) row[j + 1] = r[j];
  });
}

rp_status rp_value_fn_eval(const rp_value_fn* v, double t, double x1, double x2,
                           double* value, double grad[2]) {
  if (!v) return NullArg("v");
  return Guard([&] {
    const auto [val, g] = regprod::ValueAndGradient(v->v, t, {x1, x2});
    if (value) *value = val;
    if (grad) {
      grad[0] = g[0];
      grad[1] = g[1];
    }
  });
}

rp_status rp_optimal_rates(const rp_params* params, const double grad[2], double rates[4],
                           size_t* n_rates) {
  if (!params) return NullArg("params");
  if (!grad) return NullArg("grad");
  if (!rates) return NullArg("rates");
  return Guard([&] {
    const auto z = regprod::RatesToVector(
        regprod::OptimalRates(params->p, Eigen::Vector2d(grad[0], grad[1])));
    for (std::size_t k = 0; k < z.size(); ++k) rates[k] = z[k];
    if (n_rates) *n_rates = z.size();
  });
}

void rp_value_fn_free(rp_value_fn* v) { delete v; }

rp_status rp_solve_nash(const rp_params* params, size_t n_nodes, rp_nash** out) {
  if (!params) return NullArg("params");
  if (!out) return NullArg("out");
  return Guard([&] {
    *out = new rp_nash{regprod::SolveNash(params->p, n_nodes), params->p};
  });
}

size_t rp_nash_nodes(const rp_nash* nash) { return nash ? nash->coeffs.grid().size() : 0; }

rp_status rp_nash_row(const rp_nash* nash, size_t node, double row[13]) {
  if (!nash) return NullArg("nash");
  if (!row) return NullArg("row");
  return Guard([&] {
    if (node >= nash->coeffs.grid().size()) {
      throw regprod::Error(regprod::ErrorCode::kOutOfRange, "node index out of range", "node");
    }
    row[0] = nash->coeffs.grid().t(node);
    const auto r = nash->coeffs.coeffs->row(node);
    for (std::size_t j = 0; j < r.size(); ++j) row[j + 1] = r[j];
  });
}

rp_status rp_nash_strategy(const rp_nash* nash, int firm, double t, double x, double y,
                           double* effort) {
  if (!nash) return NullArg("nash");
  if (!effort) return NullArg("effort");
  return Guard([&] {
    const regprod::FeedbackStrategy s(firm, firm == 2 ? nash->params.gamma(2)
                                                      : nash->params.gamma(1),
                                      nash->coeffs.coeffs);
    *effort = s(t, x, y);
  });
}

void rp_nash_free(rp_nash* nash) { delete nash; }

rp_status rp_best_response(const rp_params* params, int firm, const double* times,
                           const double* values, size_t n_samples, size_t n_nodes,
                           double* rows) {
  if (!params) return NullArg("params");
  if (!times) return NullArg("times");
  if (!values) return NullArg("values");
  if (!rows) return NullArg("rows");
  return Guard([&] {
    regprod::SampledFunction opp(std::vector<double>(times, times + n_samples),
                                 std::vector<double>(values, values + n_samples));
    const auto br = regprod::BestResponse(params->p, firm, opp, n_nodes);
    for (std::size_t k = 0; k < br.coeffs.grid().size(); ++k) {
      double* out = rows + 7 * k;
      out[0] = br.coeffs.grid().t(k);
      const auto r = br.coeffs.row(k);
      for (std::size_t j = 0; j < 6; ++j) out[j + 1] = r[j];
    }
  });
}

rp_status rp_hjb_residual_principal(const rp_params* params, const rp_value_fn* v,
                                    double* max_abs) {
  if (!params) return NullArg("params");
  if (!v) return NullArg("v");
  if (!max_abs) return NullArg("max_abs");
  return Guard([&] { *max_abs = regprod::HjbResidualPrincipal(v->v, params->p).max_abs; });
}

rp_status rp_hjb_residual_nash(const rp_params* params, const rp_nash* nash,
                               double max_abs[2]) {
  if (!params) return NullArg("params");
  if (!nash) return NullArg("nash");
  if (!max_abs) return NullArg("max_abs");
  return Guard([&] {
    const auto [r1, r2] = regprod::HjbResidualNash(nash->coeffs, params->p);
    max_abs[0] = r1.max_abs;
    max_abs[1] = r2.max_abs;
  });
}

void rp_sim_config_default(rp_sim_config* cfg) {
  if (!cfg) return;
  const regprod::SimConfig d;
  *cfg = rp_sim_config{d.n_paths, d.dt, d.seed, {0.0, 0.0}, {0.0, 0.0},
                       d.antithetic ? 1 : 0, d.threads};
}

rp_status rp_simulate_principal(const rp_params* params, const rp_value_fn* v,
                                const rp_sim_config* cfg, rp_utility* principal,
                                rp_utility agents[2], size_t* n_agents) {
  if (!params) return NullArg("params");
  if (!v) return NullArg("v");
  if (!cfg) return NullArg("cfg");
  return Guard([&] {
    const auto res =
        regprod::SimulatePrincipal(params->p, v->v, ToSimConfig(*cfg, params->p.kind()));
    if (principal) *principal = ToUtility(res.principal);
    if (agents) {
      for (std::size_t i = 0; i < res.agents.size(); ++i) agents[i] = ToUtility(res.agents[i]);
    }
    if (n_agents) *n_agents = res.agents.size();
  });
}

rp_status rp_simulate_nash(const rp_params* params, const rp_nash* nash,
                           const rp_sim_config* cfg, rp_utility firms[2]) {
  if (!params) return NullArg("params");
  if (!nash) return NullArg("nash");
  if (!cfg) return NullArg("cfg");
  if (!firms) return NullArg("firms");
  return Guard([&] {
    const auto res = regprod::SimulateNash(params->p,
                                           regprod::FeedbackStrategies(nash->coeffs, params->p),
                                           ToSimConfig(*cfg, params->p.kind()));
    firms[0] = ToUtility(res.firms[0]);
    firms[1] = ToUtility(res.firms[1]);
  });
}

rp_status rp_run_scenario(const char* scenario, const char* config_json, const char* out_dir,
                          const uint64_t* seed, int literal_signs) {
  if (!scenario) return NullArg("scenario");
  if (!config_json) return NullArg("config_json");
  return Guard([&] {
    regprod::ScenarioOptions opts;
    if (out_dir) opts.out_dir = out_dir;
    if (seed) opts.seed = *seed;
    opts.literal_signs = literal_signs != 0;
    regprod::RunScenario(regprod::ParseScenario(scenario), config_json, opts);
  });
}

rp_status rp_run_scenario_file(const char* scenario, const char* config_path,
                               const char* out_dir, const uint64_t* seed, int literal_signs) {
  if (!config_path) return NullArg("config_path");
  std::string text;
  const rp_status read = Guard([&] { text = regprod::ReadTextFile(config_path); });
  if (read != RP_OK) return read;
  return rp_run_scenario(scenario, text.c_str(), out_dir, seed, literal_signs);
}

}  // extern "C"
