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

// Euler-Maruyama Monte Carlo for the contract and game models.
//
// Every path (or antithetic pair) draws its Gaussian increments from its own
// mt19937_64 stream seeded with splitmix64(seed, stream index), and payoffs
// are stored per path and reduced in path order, so estimates do not depend
// on the number of worker threads. Running integrals use the left endpoint.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regprod/model.hpp"
#include "regprod/nash.hpp"
#include "regprod/riccati.hpp"

namespace regprod {

struct SimConfig {
  std::size_t n_paths = 100000;
  double dt = 1e-3;
  std::uint64_t seed = 0;
  StateVector x0;
  /// Initial payment level per agent (one entry for the single-firm model,
  /// two for the regulated two-firm model); empty means all zero. Unused by
  /// the game.
  std::vector<double> y0;
  /// Paths come in pairs (W, -W); n_paths must then be even.
  bool antithetic = true;
  /// Worker threads; 0 uses the hardware concurrency.
  unsigned threads = 1;
};

/// Number of Euler steps for the horizon. Throws kInvalidArgument if the
/// config is inadmissible or horizon / dt is not an integer to 1e-9.
std::size_t StepCount(const SimConfig& cfg, double horizon);

struct UtilityEstimate {
  double mean = 0.0;
  double std_err = 0.0;
  std::size_t n_paths = 0;
  std::uint64_t seed = 0;
  std::string label;
};

/// Sample mean and standard error of -exp(-eta Z) over `payoffs` Z, summed
/// in index order. With `antithetic_pairs` the standard error is computed
/// from the averages of consecutive pairs (2k, 2k+1). Throws kEmpty.
UtilityEstimate EstimateUtility(std::span<const double> payoffs, double eta,
                                bool antithetic_pairs = false);

/// Estimate of E[U(deviated) - U(base)] from path-by-path differences of
/// utilities computed on common random numbers.
UtilityEstimate PairedDifference(std::span<const double> base,
                                 std::span<const double> deviated, double eta,
                                 bool antithetic_pairs = false);

struct PrincipalSimResult {
  UtilityEstimate principal;
  std::vector<UtilityEstimate> agents;
  /// Per-path payoffs: -Y_T - int g for the principal, Y^i_T + int (f_i - c_i)
  /// for agent i.
  std::vector<double> principal_payoffs;
  std::vector<std::vector<double>> agent_payoffs;
};

/// Simulates state and payments under the optimal contract read off `v`.
/// Throws kConfigMismatch when v was solved for another model or horizon,
/// or y0 has the wrong length, and kNonFinitePath when a path diverges.
PrincipalSimResult SimulatePrincipal(const ModelParams& params,
                                     const QuadraticValueFn& v,
                                     const SimConfig& cfg);

/// Replaces firm `firm`'s control a by scale * a + shift.
struct Deviation {
  int firm = 1;
  double scale = 1.0;
  double shift = 0.0;
};

struct NashSimResult {
  std::array<UtilityEstimate, 2> firms;
  /// Per-path int pi_i dt.
  std::array<std::vector<double>, 2> payoffs;
};

/// Simulates the game state (x0.x1, x0.x2) = (X_0, Y_0) under the feedback
/// pair, optionally with one firm deviating.
NashSimResult SimulateNash(const ModelParams& params,
                           const std::pair<FeedbackStrategy, FeedbackStrategy>& strategies,
                           const SimConfig& cfg,
                           std::optional<Deviation> deviation = std::nullopt);

}  // namespace regprod
