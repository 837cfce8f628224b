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

// Independent checks of the solvers.
//
// The HJB residuals are evaluated from the model primitives (revenue, social
// cost, effort cost, the unreduced Hamiltonian h) rather than from the
// assembled ODE data, and time derivatives are taken by finite differences
// of the solved coefficient trajectories, so a wrong ODE right-hand side
// shows up as a residual.

#pragma once

#include <Eigen/Core>
#include <functional>
#include <string>
#include <vector>

#include "regprod/contract.hpp"
#include "regprod/nash.hpp"
#include "regprod/riccati.hpp"

namespace regprod {

/// Square spatial grid [lo, hi]^2 with `points` nodes per axis, evaluated at
/// `slices` equally spaced times from 0 to the horizon (snapped to the
/// nearest coefficient node).
struct SpaceTimeGrid {
  double lo = -2.0;
  double hi = 2.0;
  int points = 21;
  int slices = 5;

  std::string Describe() const;
};

struct ResidualReport {
  SpaceTimeGrid grid;
  double max_abs = 0.0;
  double t_at_max = 0.0;
  double x1_at_max = 0.0;
  double x2_at_max = 0.0;
  std::vector<double> slice_times;
  std::vector<double> slice_max;
};

/// Residual of the principal's reduced HJB
///   v_t + 1/2 sum sigma_i^2 (v_ii - eta_p v_i^2) + f - g + h(z*(Dv), Dv)
/// for a quadratic v.
ResidualReport HjbResidualPrincipal(const QuadraticValueFn& v,
                                    const ModelParams& params,
                                    const SpaceTimeGrid& grid = {});

/// Residuals of both firms' HJB equations, written for W_i with
/// V_i = -exp(eta_i W_i) and the equilibrium feedbacks injected:
///   W_t + 1/2 s1^2 (eta W_x^2 + W_xx) + 1/2 s2^2 (eta W_y^2 + W_yy)
///       + a1 W_x + a2 W_y - pi_i(x, y, a_i).
std::pair<ResidualReport, ResidualReport> HjbResidualNash(
    const NashCoeffs& coeffs, const ModelParams& params,
    const SpaceTimeGrid& grid = {});

/// A scalar field v(t, x) with its analytic derivatives.
struct Evaluable {
  std::function<double(double, const Eigen::Vector2d&)> value;
  std::function<Eigen::Vector2d(double, const Eigen::Vector2d&)> gradient;
  std::function<Eigen::Matrix2d(double, const Eigen::Vector2d&)> hessian;
  std::function<double(double, const Eigen::Vector2d&)> time_derivative;
};

/// Principal value function; its time derivative is the Riccati right-hand
/// side at the interpolated coefficients.
Evaluable MakeEvaluable(const QuadraticValueFn& v, const ModelParams& params);

/// Firm `firm`'s equilibrium value V = -exp(eta W).
Evaluable MakeEvaluable(const NashCoeffs& coeffs, const ModelParams& params,
                        int firm);

struct DerivativeErrors {
  double gradient = 0.0;
  double hessian = 0.0;
  double time = 0.0;
  double worst() const;
};

/// Relative errors |fd - exact| / max(1, |exact|) of central differences with
/// step h: of the value for the gradient and time derivative, of the
/// analytic gradient for the Hessian. The time difference needs
/// h <= t <= horizon - h.
DerivativeErrors FiniteDiffCheck(const Evaluable& v, double t,
                                 const Eigen::Vector2d& x, double h = 1e-5);

/// |brute-force max_z h - (1/2 sum m_i v_i^2 + 1/2 eta_p sum sigma_i^2 v_i^2)|.
double SupConsistency(const ModelParams& params, const Eigen::Vector2d& grad_v,
                      CouplingForm form = CouplingForm::kCompletedSquare);

}  // namespace regprod
