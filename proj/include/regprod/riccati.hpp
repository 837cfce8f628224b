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

#pragma once

#include <Eigen/Core>
#include <optional>
#include <utility>

#include "regprod/contract.hpp"
#include "regprod/integrator.hpp"
#include "regprod/model.hpp"

namespace regprod {

/// v(t, x) = 1/2 x.A(t)x + B(t).x + C(t), sampled on a time grid.
///
/// Coefficients are stored per node as the row (A11, A12, A22, B1, B2, C),
/// so A is symmetric by construction. Between nodes they are linearly
/// interpolated.
class QuadraticValueFn {
 public:
  enum Column : std::size_t { kA11, kA12, kA22, kB1, kB2, kC, kColumns };

  /// `kind` records the model the coefficients were solved for, if known.
  explicit QuadraticValueFn(Trajectory coefficients,
                            std::optional<ModelKind> kind = std::nullopt);

  const TimeGrid& grid() const { return coeffs_.grid(); }
  std::optional<ModelKind> kind() const { return kind_; }
  const Trajectory& coefficients() const { return coeffs_; }

  Eigen::Matrix2d A(std::size_t node) const;
  Eigen::Vector2d B(std::size_t node) const;
  double C(std::size_t node) const { return coeffs_.at(node, kC); }

  /// Interpolated (A, B, C) at time t. Throws kOutOfHorizon.
  void CoefficientsAt(double t, Eigen::Matrix2d& a, Eigen::Vector2d& b,
                      double& c) const;

 private:
  Trajectory coeffs_;
  std::optional<ModelKind> kind_;
};

/// Integrates A' = -Q - AMA, B' = -L - AMB, C' = -1/2 Tr(Sigma Sigma^T A)
/// - 1/2 B.MB - q0 backward from zero terminal data on `n_nodes` uniform
/// nodes. Throws kBlowUp on Riccati escape.
QuadraticValueFn SolvePrincipal(const ModelParams& params,
                                std::size_t n_nodes = 1001);

/// Right-hand side used by SolvePrincipal, for the stacked row layout of
/// QuadraticValueFn.
void PrincipalRhs(const ContractLqg& lqg, std::span<const double> y,
                  std::span<double> dydt);

/// (v(t, x), Dv(t, x)).
std::pair<double, Eigen::Vector2d> ValueAndGradient(const QuadraticValueFn& v,
                                                    double t, const StateVector& x);

/// Optimal incentive rates at (t, x): the closed-form rates applied to Dv.
IncentiveRates RateProfile(const ModelParams& params, const QuadraticValueFn& v,
                           double t, const StateVector& x);

}  // namespace regprod
