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

// Feedback equilibria of the two-firm game without a regulator.
//
// Firm i's value is written V_i = -exp(eta_i W_i) with
//   W_1 = 1/2 A x^2 + 1/2 B y^2 + C xy + D x + E y + F
//   W_2 = the same with (At, Bt, Ct, Dt, Et, Ft),
// so that the optimal feedbacks are
//   a1 = -gamma_1 (A x + C y + D),   a2 = -gamma_2 (Ct x + Bt y + Et).
// Matching the coefficients of x^2, y^2, xy, x, y, 1 in each firm's HJB gives
// six Riccati-type ODEs per firm, with terminal data zero.
//
// The payoff terms come from the running payoff pi_1 = (p0 - p1 x - p2 y) x
// - a1^2 / (2 gamma_1) (resp. pi_2 with y): they contribute +2 p1 to A',
// +p2 to C' and -p0 to D' (firm 2: +2 p2 to Bt', +p1 to Ct', -p0 to Et').
// The system as first printed carries -2 p1, -p2 and a +p0 in F' instead;
// that variant is selected by ModelParams::literal_signs() and fails the
// HJB residual check against the stated objective.

#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "regprod/integrator.hpp"
#include "regprod/model.hpp"

namespace regprod {

/// Column layout of Nash coefficient rows (firm 1 then firm 2). A
/// best-response row uses only the first six.
enum NashColumn : std::size_t {
  kCoefA, kCoefB, kCoefC, kCoefD, kCoefE, kCoefF,
  kCoefAt, kCoefBt, kCoefCt, kCoefDt, kCoefEt, kCoefFt,
  kNashColumns
};

/// Deterministic strategy of the opponent: piecewise-linear through
/// (times[k], values[k]), which must cover [0, horizon].
class SampledFunction {
 public:
  SampledFunction(std::vector<double> times, std::vector<double> values);
  static SampledFunction Constant(double value, double horizon);

  double operator()(double t) const;
  const std::vector<double>& times() const { return times_; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> times_;
  std::vector<double> values_;
};

/// Opponent control a = x X + y Y + c at one instant.
struct AffineControl {
  double x = 0.0;
  double y = 0.0;
  double c = 0.0;
};

/// Non-derivative terms of firm `firm`'s six coefficient equations, so that
/// d/dt coefficient_j = -rest[j]. `own` holds the firm's six coefficients in
/// the order (A, B, C, D, E, F).
std::array<double, 6> CoefficientRest(const ModelParams& params, int firm,
                                      std::span<const double> own,
                                      const AffineControl& opponent);

/// Firm `firm`'s coefficients when the opponent plays a deterministic
/// function of time. `coeffs` has 6 columns in (A..F) order regardless of
/// firm (tilded quantities for firm 2).
struct BestResponseCoeffs {
  int firm;
  Trajectory coeffs;
  SampledFunction opponent;
};

BestResponseCoeffs BestResponse(const ModelParams& params, int firm,
                                const SampledFunction& opponent,
                                std::size_t n_nodes = 1001);

/// Coefficients of both firms on a common grid, 12 columns (NashColumn).
struct NashCoeffs {
  std::shared_ptr<const Trajectory> coeffs;
  const TimeGrid& grid() const { return coeffs->grid(); }
};

/// Integrates the coupled 12-ODE system backward. A kBlowUp error means the
/// coefficients escape before t = 0, i.e. no equilibrium of this form exists
/// on the requested horizon.
NashCoeffs SolveNash(const ModelParams& params, std::size_t n_nodes = 1001);

/// Right-hand side of the coupled system (12 entries).
void NashRhs(const ModelParams& params, std::span<const double> y,
             std::span<double> dydt);

/// Affine feedback a_i(t, x, y) read off the solved coefficients.
class FeedbackStrategy {
 public:
  FeedbackStrategy(int firm, double gamma, std::shared_ptr<const Trajectory> coeffs);

  int firm() const { return firm_; }
  const Trajectory& coefficients() const { return *coeffs_; }
  double operator()(double t, double x, double y) const;
  AffineControl AffineAt(double t) const;
  AffineControl AffineAtNode(std::size_t node) const;

 private:
  AffineControl FromRow(std::span<const double> row) const;

  int firm_;
  double gamma_;
  std::shared_ptr<const Trajectory> coeffs_;
};

std::pair<FeedbackStrategy, FeedbackStrategy> FeedbackStrategies(
    const NashCoeffs& coeffs, const ModelParams& params);

/// W_i(t, x, y) from a 12-column row.
double WValue(std::span<const double> row, int firm, double x, double y);

/// Largest violation over all nodes and equations of the coefficient ODEs,
/// with d/dt estimated by fourth-order finite differences of the trajectory.
double OdeResidual(const NashCoeffs& coeffs, const ModelParams& params);
double OdeResidual(const BestResponseCoeffs& coeffs, const ModelParams& params);

/// Per-equation maximum over grid cells of |(y_{k+1} - y_k) / dt - f(t_mid,
/// (y_k + y_{k+1}) / 2)|, a second-order check independent of the stepper.
std::array<double, kNashColumns> MidpointOdeResidual(const NashCoeffs& coeffs,
                                                     const ModelParams& params);

}  // namespace regprod
