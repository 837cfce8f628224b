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

// Command-line front end. Exit status: 0 success, 1 invalid input,
// 2 numerical or I/O failure; failures print one error JSON line on stderr.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "regprod/regprod.h"

namespace {

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          out += ' ';
        } else {
          out += c;
        }
    }
  }
  return out;
}

int UsageError(const std::string& message) {
  std::cerr << "{\"error\":{\"code\":\"InvalidArgument\",\"field\":\"\",\"message\":\""
            << Escape(message) << "\"}}" << std::endl;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incentive contracts and Nash equilibria for regulated production"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rp_version()));

  std::string config;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  bool literal_signs = false;

  const char* commands[][2] = {
      {"single-firm", "solve the single-firm contract Riccati system"},
      {"two-firm", "solve the regulated two-firm contract Riccati system"},
      {"nash", "solve the coupled feedback-equilibrium system"},
      {"best-response", "solve one firm's best response to a given opponent"},
      {"verify", "HJB residuals, finite-difference and sup-consistency checks"},
      {"simulate", "Monte Carlo estimates of the utilities"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config, "scenario JSON file")->required();
    sub->add_option("--out", out_dir, "output directory (overrides the config)");
    sub->add_option("--seed", seed, "random seed (overrides the config)");
    sub->add_flag("--literal-signs", literal_signs,
                  "use the sign conventions as first printed instead of the re-derived ones");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return UsageError(e.what());
  }

  const std::string scenario = app.get_subcommands().front()->get_name();
  const std::uint64_t seed_value = seed.value_or(0);
  const rp_status status =
      rp_run_scenario_file(scenario.c_str(), config.c_str(),
                           out_dir.empty() ? nullptr : out_dir.c_str(),
                           seed ? &seed_value : nullptr, literal_signs ? 1 : 0);
  if (status == RP_OK) return 0;
  std::cerr << rp_last_error_json() << std::endl;
  return rp_status_is_validation(status) ? 1 : 2;
}
