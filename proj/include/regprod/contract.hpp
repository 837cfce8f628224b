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

// Optimal incentive contracts for the two principal models.
//
// With the principal's value written as U_P(v(t,x) - y), the reduced HJB is
//
//   0 = v_t + 1/2 sum_i sigma_i^2 (v_ii - eta_p v_i^2) + f(x) - g(x)
//         + sup_z h(z, Dv)
//
// where h is a concave quadratic in the incentive rates z and depends on x
// only through Dv. Completing the square gives the closed-form maximizer and
// sup_z h - 1/2 eta_p sum_i sigma_i^2 v_i^2 = 1/2 sum_i m_i v_i^2, so the PDE
// becomes the linear-quadratic form
//
//   0 = v_t + 1/2 Tr(Sigma Sigma^T D^2 v) + 1/2 x.Qx + L.x + q0
//         + 1/2 Dv.M Dv,        M = diag(m1, m2).

#pragma once

#include <Eigen/Core>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "regprod/model.hpp"

namespace regprod {

/// Principal/agent risk-sharing coefficients of the regulated two-firm model.
struct EffectiveRiskAversion {
  double eta_bar_1;  // eta_p eta_1 / (eta_p + eta_1)
  double eta_bar_2;
  double eta_1p;     // eta_p / (eta_1 + eta_p)
  double eta_2p;
};

EffectiveRiskAversion EffectiveAversions(const ModelParams& params);

/// (Lambda_12, Lambda_21): the fraction of the principal's marginal value
/// passed through to each firm's own-output rate, z_ii = Lambda v_i.
std::pair<double, double> LambdaPair(const ModelParams& params);

/// Single firm: sensitivities of the agent's payment to dX1 and dX2.
struct SingleFirmRates {
  double z1 = 0.0;
  double z2 = 0.0;
};

/// Two firms: z_ij is firm i's payment sensitivity to dX^j.
struct TwoFirmRates {
  double z11 = 0.0;
  double z12 = 0.0;
  double z21 = 0.0;
  double z22 = 0.0;
};

using IncentiveRates = std::variant<SingleFirmRates, TwoFirmRates>;

/// Flattened rates: (z1, z2) or (z11, z12, z21, z22).
std::vector<double> RatesToVector(const IncentiveRates& rates);
IncentiveRates RatesFromVector(ModelKind kind, std::span<const double> z);

SingleFirmRates RatesSingle(const ModelParams& params,
                            const Eigen::Vector2d& grad_v);
TwoFirmRates RatesTwo(const ModelParams& params, const Eigen::Vector2d& grad_v);

/// Dispatches on the model kind.
IncentiveRates OptimalRates(const ModelParams& params,
                            const Eigen::Vector2d& grad_v);

/// Induced agent effort a_i = gamma_i z_ii.
Eigen::Vector2d InducedEffort(const ModelParams& params,
                              const IncentiveRates& rates);

/// The drift objective h(z, Dv), evaluated term by term from its unreduced
/// form (effort cost, agents' risk premia, principal's exposure), not from
/// the completed square.
double HamiltonianH(const ModelParams& params, const IncentiveRates& rates,
                    const Eigen::Vector2d& grad_v);

struct Interval {
  double lo;
  double hi;
};

struct OracleResult {
  std::vector<double> argmax;
  double value = 0.0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Brute-force maximizer for a concave objective on a box. Scans each axis
/// on `coarse_n` points, then refines by golden section on the bracketing
/// cell; with more than one coordinate the scan/refine step is applied
/// cyclically until the iterate stops moving. Throws kMaximizerOnBoundary
/// when the result sits within one coarse cell of the box edge.
OracleResult ArgmaxOracle(const Objective& objective, std::span<const Interval> box,
                          int coarse_n = 201);

/// ArgmaxOracle on [-r, r]^dim starting at r = 10, doubling the box on
/// kMaximizerOnBoundary up to r = 1e4.
OracleResult ArgmaxOracleExpanding(const Objective& objective, int dim,
                                   int coarse_n = 201);

/// Maximizes HamiltonianH over the rates of the params' kind.
OracleResult MaximizeHamiltonian(const ModelParams& params,
                                 const Eigen::Vector2d& grad_v);

/// Which expression is used for the gradient-coupling coefficients m_i.
enum class CouplingForm {
  kCompletedSquare,  // re-derived; matches sup_z h exactly.
  kPrinted,          // coefficients as first printed (kept as a negative control).
};

Eigen::Vector2d GradientCoupling(const ModelParams& params,
                                 CouplingForm form = CouplingForm::kCompletedSquare);

/// Linear-quadratic data of the reduced principal PDE.
struct ContractLqg {
  Eigen::Matrix2d q;      // f - g = 1/2 x.Qx + L.x + q0
  Eigen::Vector2d l;
  double q0 = 0.0;
  Eigen::Matrix2d m;      // diag(m1, m2)
  Eigen::Matrix2d sigma;  // diag(sigma1, sigma2)
};

ContractLqg AssembleLqg(const ModelParams& params);

}  // namespace regprod
