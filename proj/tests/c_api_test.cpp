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

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

namespace {

const char* kTwoFirm =
    R"({"kind": "two-firm", "gamma1": 1.5, "gamma2": 1.0, "sigma1": 0.2, "sigma2": 0.3,
        "p0": 1.0, "p1": 0.6, "p2": 0.4, "eta1": 1.0, "eta2": 1.0, "eta_p": 1.0,
        "kappa": 1.0, "lambda": 1.0, "delta": 1.0, "horizon": 1.0})";

const char* kGame =
    R"({"kind": "nash", "gamma1": 1.5, "gamma2": 1.0, "sigma1": 0.2, "sigma2": 0.3,
        "p0": 1.0, "p1": 0.6, "p2": 0.4, "eta1": 1.0, "eta2": 1.0, "horizon": 1.0})";

struct Params {
  rp_params* p = nullptr;
  ~Params() { rp_params_free(p); }
};

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STRNE(rp_version(), "");
  EXPECT_STREQ(rp_status_name(RP_OK), "Ok");
  EXPECT_TRUE(rp_status_is_validation(RP_OUT_OF_RANGE));
  EXPECT_FALSE(rp_status_is_validation(RP_BLOW_UP));
  EXPECT_FALSE(rp_status_is_validation(RP_IO));
}

TEST(CApi, ValidationErrorNamesField) {
  std::string bad = kTwoFirm;
  bad.replace(bad.find("1.5"), 3, "-1");
  rp_params* p = nullptr;
  EXPECT_EQ(rp_params_from_json(bad.c_str(), 0, &p), RP_OUT_OF_RANGE);
  EXPECT_EQ(p, nullptr);
  EXPECT_STREQ(rp_last_error_field(), "gamma1");
  EXPECT_NE(std::string(rp_last_error_json()).find("\"gamma1\""), std::string::npos);
  EXPECT_EQ(rp_params_from_json(nullptr, 0, &p), RP_INVALID_ARGUMENT);
}

TEST(CApi, PrincipalRoundTrip) {
  Params P;
  ASSERT_EQ(rp_params_from_json(kTwoFirm, 0, &P.p), RP_OK);
  EXPECT_STREQ(rp_params_kind(P.p), "two-firm");
  EXPECT_EQ(rp_params_horizon(P.p), 1.0);

  rp_value_fn* v = nullptr;
  ASSERT_EQ(rp_solve_principal(P.p, 1001, &v), RP_OK);
  EXPECT_EQ(rp_value_fn_nodes(v), 1001u);
  double row[7];
  ASSERT_EQ(rp_value_fn_row(v, 1000, row), RP_OK);
  EXPECT_EQ(row[0], 1.0);
  for (int j = 1; j < 7; ++j) EXPECT_EQ(row[j], 0.0);
  EXPECT_EQ(rp_value_fn_row(v, 1001, row), RP_OUT_OF_RANGE);

  double value = 0.0, grad[2];
  ASSERT_EQ(rp_value_fn_eval(v, 0.0, 0.0, 0.0, &value, grad), RP_OK);
  ASSERT_EQ(rp_value_fn_row(v, 0, row), RP_OK);
  EXPECT_EQ(value, row[6]);
  EXPECT_EQ(grad[0], row[4]);
  EXPECT_EQ(rp_value_fn_eval(v, 2.0, 0.0, 0.0, &value, grad), RP_OUT_OF_HORIZON);

  double rates[4];
  size_t n = 0;
  const double g[2] = {0.5, -0.5};
  ASSERT_EQ(rp_optimal_rates(P.p, g, rates, &n), RP_OK);
  EXPECT_EQ(n, 4u);

  double residual = 1.0;
  ASSERT_EQ(rp_hjb_residual_principal(P.p, v, &residual), RP_OK);
  EXPECT_LE(residual, 1e-6);

  rp_sim_config cfg;
  rp_sim_config_default(&cfg);
  EXPECT_EQ(cfg.n_paths, 100000u);
  EXPECT_EQ(cfg.dt, 1e-3);
  cfg.n_paths = 100;
  cfg.dt = 0.01;
  rp_utility principal, agents[2];
  size_t n_agents = 0;
  ASSERT_EQ(rp_simulate_principal(P.p, v, &cfg, &principal, agents, &n_agents), RP_OK);
  EXPECT_EQ(n_agents, 2u);
  EXPECT_LT(principal.mean, 0.0);
  EXPECT_EQ(principal.n_paths, 100u);
  cfg.n_paths = 3;
  EXPECT_EQ(rp_simulate_principal(P.p, v, &cfg, &principal, agents, &n_agents),
            RP_INVALID_ARGUMENT);
  rp_value_fn_free(v);
}

TEST(CApi, NashRoundTrip) {
  Params P;
  ASSERT_EQ(rp_params_from_json(kGame, 0, &P.p), RP_OK);
  rp_value_fn* v = nullptr;
  EXPECT_EQ(rp_solve_principal(P.p, 101, &v), RP_WRONG_KIND);

  rp_nash* nash = nullptr;
  ASSERT_EQ(rp_solve_nash(P.p, 1001, &nash), RP_OK);
  EXPECT_EQ(rp_nash_nodes(nash), 1001u);
  double row[13];
  ASSERT_EQ(rp_nash_row(nash, 0, row), RP_OK);
  EXPECT_NEAR(row[1], 0.7427, 1e-4);
  double a1 = 0.0;
  ASSERT_EQ(rp_nash_strategy(nash, 1, 0.0, 0.0, 0.0, &a1), RP_OK);
  EXPECT_NEAR(a1, -1.5 * row[4], 1e-15);
  EXPECT_EQ(rp_nash_strategy(nash, 3, 0.0, 0.0, 0.0, &a1), RP_INVALID_ARGUMENT);

  double res[2];
  ASSERT_EQ(rp_hjb_residual_nash(P.p, nash, res), RP_OK);
  EXPECT_LE(res[0], 1e-6);
  EXPECT_LE(res[1], 1e-6);

  rp_sim_config cfg;
  rp_sim_config_default(&cfg);
  cfg.n_paths = 100;
  cfg.dt = 0.01;
  rp_utility firms[2];
  ASSERT_EQ(rp_simulate_nash(P.p, nash, &cfg, firms), RP_OK);
  EXPECT_LT(firms[0].mean, 0.0);
  rp_nash_free(nash);
}

TEST(CApi, BestResponse) {
  Params P;
  ASSERT_EQ(rp_params_from_json(kGame, 0, &P.p), RP_OK);
  const double times[2] = {0.0, 1.0};
  const double values[2] = {0.5, 0.5};
  std::vector<double> rows(101 * 7);
  ASSERT_EQ(rp_best_response(P.p, 1, times, values, 2, 101, rows.data()), RP_OK);
  EXPECT_EQ(rows[100 * 7], 1.0);
  const double short_times[2] = {0.0, 0.5};
  EXPECT_EQ(rp_best_response(P.p, 1, short_times, values, 2, 101, rows.data()),
            RP_OUT_OF_HORIZON);
}

TEST(CApi, BlowUpIsNumerical) {
  std::string lit = kGame;
  lit.replace(lit.find("\"horizon\": 1.0"), 14, "\"horizon\": 1.5");
  Params P;
  ASSERT_EQ(rp_params_from_json(lit.c_str(), 1, &P.p), RP_OK);
  rp_nash* nash = nullptr;
  EXPECT_EQ(rp_solve_nash(P.p, 1501, &nash), RP_BLOW_UP);
  EXPECT_EQ(nash, nullptr);
  EXPECT_FALSE(rp_status_is_validation(RP_BLOW_UP));
  EXPECT_NE(std::string(rp_last_error_json()).find("\"time\""), std::string::npos);
}

TEST(CApi, FreeAcceptsNull) {
  rp_params_free(nullptr);
  rp_value_fn_free(nullptr);
  rp_nash_free(nullptr);
}

TEST(CApi, RunScenarioFileMissing) {
  EXPECT_EQ(rp_run_scenario_file("nash", "/nonexistent.json", nullptr, nullptr, 0), RP_IO);
  EXPECT_EQ(rp_run_scenario("bogus", "{}", nullptr, nullptr, 0), RP_INVALID_ARGUMENT);
}

}  // namespace
