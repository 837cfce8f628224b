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

// Config-driven runs: parse a JSON scenario file, solve or simulate, and
// write CSV/JSON outputs. Outputs depend only on the config and the seed.
//
// Config layout (all sections but "model" optional):
//
//   {
//     "model":      {"kind": "two-firm", "gamma1": 1.5, ...},
//     "numerics":   {"n_nodes": 1001, "dt": 0.001, "n_paths": 100000,
//                    "seed": 42, "antithetic": true, "threads": 1,
//                    "grid_lo": -2, "grid_hi": 2, "grid_points": 21,
//                    "time_slices": 5},
//     "simulation": {"x0": [0, 0], "y0": [0, 0], "dump_paths": false,
//                    "deviation": {"firm": 1, "scale": 1.1, "shift": 0}},
//     "opponent":   {"responder": 1, "constant": [0, 0.5, 1]}
//                   or {"responder": 1, "times": [...], "values": [...]},
//     "output_dir": "out"
//   }

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regprod/error.hpp"
#include "regprod/mc.hpp"
#include "regprod/model.hpp"
#include "regprod/nash.hpp"
#include "regprod/verify.hpp"

namespace regprod {

enum class Scenario { kSingleFirm, kTwoFirm, kNash, kBestResponse, kVerify, kSimulate };

std::string_view ScenarioName(Scenario s);
Scenario ParseScenario(std::string_view name);

struct OpponentSpec {
  int responder = 1;
  /// One best response per entry.
  std::vector<SampledFunction> strategies;
  /// The constant levels, when given as constants.
  std::vector<double> constants;
};

struct RunConfig {
  explicit RunConfig(ModelParams p) : params(std::move(p)) {}

  ModelParams params;
  std::size_t n_nodes = 1001;
  SimConfig sim;
  SpaceTimeGrid grid;
  std::optional<Deviation> deviation;
  bool dump_paths = false;
  std::optional<OpponentSpec> opponent;
  std::string output_dir = "out";
};

struct ScenarioOptions {
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  bool literal_signs = false;
};

/// Parses and validates a config for `scenario`; the command-line options
/// take precedence over the file. Throws validation errors naming the field.
RunConfig ParseRunConfig(Scenario scenario, const std::string& json_text,
                         const ScenarioOptions& options = {});

/// Parses a bare model object {"kind": ..., fields...}.
ModelParams ParseModel(const std::string& json_text, bool literal_signs = false,
                       std::optional<ModelKind> default_kind = std::nullopt);

struct ScenarioResult {
  std::string output_dir;
  std::vector<std::string> files;  // written, in order
};

ScenarioResult RunScenario(Scenario scenario, const RunConfig& config);
ScenarioResult RunScenario(Scenario scenario, const std::string& json_text,
                           const ScenarioOptions& options = {});

/// {"error": {"code", "message", "field"[, "time"]}} on one line.
std::string ErrorJson(const Error& e);
std::string ErrorJson(std::string_view code, std::string_view message);

/// JSON form of a residual report.
std::string ResidualReportJson(const ResidualReport& report);

}  // namespace regprod
