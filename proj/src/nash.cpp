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

#include "regprod/nash.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "regprod/error.hpp"

namespace regprod {
namespace {

void RequireNash(const ModelParams& params, const char* what) {
  if (params.kind() != ModelKind::kTwoFirmNash) {
    throw Error(ErrorCode::kWrongKind,
                std::string(what) + " requires model kind nash, got " +
                    std::string(ModelKindName(params.kind())));
  }
}

void RequireFirm(int firm) {
  if (firm != 1 && firm != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "firm index must be 1 or 2, got " + std::to_string(firm));
  }
}

}  // namespace

SampledFunction::SampledFunction(std::vector<double> times, std::vector<double> values)
    : times_(std::move(times)), values_(std::move(values)) {
  if (times_.empty() || times_.size() != values_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "sampled function needs matching, non-empty times and values",
                "opponent");
  }
  for (std::size_t k = 0; k < times_.size(); ++k) {
    if (!std::isfinite(times_[k]) || !std::isfinite(values_[k]) ||
        (k > 0 && !(times_[k] > times_[k - 1]))) {
      throw Error(ErrorCode::kInvalidArgument,
                  "sampled function times must be finite and strictly increasing",
                  "opponent");
    }
  }
}

SampledFunction SampledFunction::Constant(double value, double horizon) {
  return SampledFunction({0.0, horizon}, {value, value});
}

double SampledFunction::operator()(double t) const {
  if (times_.size() == 1) return values_[0];
  const double slack = 1e-12 * std::max(1.0, std::abs(times_.back()));
  if (t < times_.front() - slack || t > times_.back() + slack) {
    throw Error(ErrorCode::kOutOfHorizon,
                "opponent strategy is not defined at t = " + std::to_string(t));
  }
  if (t <= times_.front()) return values_.front();
  if (t >= times_.back()) return values_.back();
  const auto it = std::upper_bound(times_.begin(), times_.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - times_.begin()) - 1;
  const double w = (t - times_[k]) / (times_[k + 1] - times_[k]);
  return (1.0 - w) * values_[k] + w * values_[k + 1];
}

std::array<double, 6> CoefficientRest(const ModelParams& params, int firm,
                                      std::span<const double> own,
                                      const AffineControl& opp) {
  RequireFirm(firm);
  const double s1 = params.sigma(1) * params.sigma(1);
  const double s2 = params.sigma(2) * params.sigma(2);
  const double eta = params.eta(firm);
  const double g = params.gamma(firm);
  const double p0 = params.p0(), p1 = params.p1(), p2 = params.p2();
  const bool printed = params.literal_signs();
  const double A = own[0], B = own[1], C = own[2], D = own[3], E = own[4];

  std::array<double, 6> r{};
  if (firm == 1) {
    // W1_x = A x + C y + D is firm 1's own gradient, W1_y = C x + B y + E is
    // moved by the opponent's control.
    r[0] = s1 * eta * A * A + s2 * eta * C * C + 2.0 * opp.x * C - g * A * A;
    r[1] = s1 * eta * C * C + s2 * eta * B * B + 2.0 * opp.y * B - g * C * C;
    r[2] = s1 * eta * A * C + s2 * eta * B * C + (opp.x * B + opp.y * C) - g * A * C;
    r[3] = s1 * eta * A * D + s2 * eta * C * E + (opp.x * E + opp.c * C) - g * A * D;
    r[4] = s1 * eta * C * D + s2 * eta * B * E + (opp.y * E + opp.c * B) - g * C * D;
    r[5] = 0.5 * s1 * (eta * D * D + A) + 0.5 * s2 * (eta * E * E + B) +
           opp.c * E - 0.5 * g * D * D;
    if (printed) {
      r[0] -= 2.0 * p1;
      r[2] -= p2;
      r[5] += p0;
    } else {
      r[0] += 2.0 * p1;
      r[2] += p2;
      r[3] -= p0;
    }
  } else {
    // W2_y = C x + B y + E is firm 2's own gradient, W2_x = A x + C y + D is
    // moved by firm 1's control.
    r[0] = s1 * eta * A * A + s2 * eta * C * C + 2.0 * opp.x * A - g * C * C;
    r[1] = s1 * eta * C * C + s2 * eta * B * B + 2.0 * opp.y * C - g * B * B;
    r[2] = s1 * eta * A * C + s2 * eta * B * C + (opp.x * C + opp.y * A) - g * B * C;
    r[3] = s1 * eta * A * D + s2 * eta * C * E + (opp.x * D + opp.c * A) - g * C * E;
    r[4] = s1 * eta * C * D + s2 * eta * B * E + (opp.y * D + opp.c * C) - g * B * E;
    r[5] = 0.5 * s1 * (eta * D * D + A) + 0.5 * s2 * (eta * E * E + B) +
           opp.c * D - 0.5 * g * E * E;
    if (printed) {
      r[1] -= 2.0 * p2;
      r[2] -= p1;
      r[5] += p0;
    } else {
      r[1] += 2.0 * p2;
      r[2] += p1;
      r[4] -= p0;
    }
  }
  return r;
}

namespace {

AffineControl Firm1Feedback(const ModelParams& params, std::span<const double> row) {
  const double g = params.gamma(1);
  return {-g * row[kCoefA], -g * row[kCoefC], -g * row[kCoefD]};
}

AffineControl Firm2Feedback(const ModelParams& params, std::span<const double> row) {
  const double g = params.gamma(2);
  return {-g * row[kCoefCt], -g * row[kCoefBt], -g * row[kCoefEt]};
}

}  // namespace

BestResponseCoeffs BestResponse(const ModelParams& params, int firm,
                                const SampledFunction& opponent,
                                std::size_t n_nodes) {
  RequireNash(params, "BestResponse");
  RequireFirm(firm);
  const TimeGrid grid(params.horizon(), n_nodes);
  auto rhs = [&](double t, std::span<const double> y, std::span<double> dydt) {
    const auto rest = CoefficientRest(params, firm, y, {0.0, 0.0, opponent(t)});
    for (std::size_t j = 0; j < 6; ++j) dydt[j] = -rest[j];
  };
  const std::array<double, 6> terminal{};
  return {firm, Rk4Backward(rhs, terminal, grid), opponent};
}

void NashRhs(const ModelParams& params, std::span<const double> y,
             std::span<double> dydt) {
  const auto firm1 = y.subspan(kCoefA, 6);
  const auto firm2 = y.subspan(kCoefAt, 6);
  const auto rest1 = CoefficientRest(params, 1, firm1, Firm2Feedback(params, y));
  const auto rest2 = CoefficientRest(params, 2, firm2, Firm1Feedback(params, y));
  for (std::size_t j = 0; j < 6; ++j) {
    dydt[kCoefA + j] = -rest1[j];
    dydt[kCoefAt + j] = -rest2[j];
  }
}

NashCoeffs SolveNash(const ModelParams& params, std::size_t n_nodes) {
  RequireNash(params, "SolveNash");
  const TimeGrid grid(params.horizon(), n_nodes);
  auto rhs = [&](double, std::span<const double> y, std::span<double> dydt) {
    NashRhs(params, y, dydt);
  };
  const std::array<double, kNashColumns> terminal{};
  try {
    return {std::make_shared<const Trajectory>(Rk4Backward(rhs, terminal, grid))};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBlowUp) throw;
    throw Error(ErrorCode::kBlowUp,
                std::string(e.what()) +
                    "; no feedback equilibrium of quadratic form on this horizon",
                {}, e.time());
  }
}

FeedbackStrategy::FeedbackStrategy(int firm, double gamma,
                                   std::shared_ptr<const Trajectory> coeffs)
    : firm_(firm), gamma_(gamma), coeffs_(std::move(coeffs)) {
  RequireFirm(firm);
  if (!coeffs_ || coeffs_->dim() != kNashColumns) {
    throw Error(ErrorCode::kInvalidArgument,
                "feedback strategy needs a 12-column coefficient trajectory");
  }
}

AffineControl FeedbackStrategy::FromRow(std::span<const double> row) const {
  if (firm_ == 1) {
    return {-gamma_ * row[kCoefA], -gamma_ * row[kCoefC], -gamma_ * row[kCoefD]};
  }
  return {-gamma_ * row[kCoefCt], -gamma_ * row[kCoefBt], -gamma_ * row[kCoefEt]};
}

AffineControl FeedbackStrategy::AffineAt(double t) const {
  const auto row = coeffs_->Interpolate(t);
  return FromRow(row);
}

AffineControl FeedbackStrategy::AffineAtNode(std::size_t node) const {
  return FromRow(coeffs_->row(node));
}

double FeedbackStrategy::operator()(double t, double x, double y) const {
  const AffineControl a = AffineAt(t);
  return a.x * x + a.y * y + a.c;
}

std::pair<FeedbackStrategy, FeedbackStrategy> FeedbackStrategies(
    const NashCoeffs& coeffs, const ModelParams& params) {
  return {FeedbackStrategy(1, params.gamma(1), coeffs.coeffs),
          FeedbackStrategy(2, params.gamma(2), coeffs.coeffs)};
}

double WValue(std::span<const double> row, int firm, double x, double y) {
  RequireFirm(firm);
  const std::size_t o = firm == 1 ? kCoefA : kCoefAt;
  return 0.5 * row[o + 0] * x * x + 0.5 * row[o + 1] * y * y + row[o + 2] * x * y +
         row[o + 3] * x + row[o + 4] * y + row[o + 5];
}

double OdeResidual(const NashCoeffs& coeffs, const ModelParams& params) {
  RequireNash(params, "OdeResidual");
  const Trajectory& traj = *coeffs.coeffs;
  std::array<double, kNashColumns> rhs{};
  double worst = 0.0;
  for (std::size_t k = 0; k < traj.grid().size(); ++k) {
    NashRhs(params, traj.row(k), rhs);
    for (std::size_t j = 0; j < kNashColumns; ++j) {
      worst = std::max(worst, std::abs(TimeDerivative(traj, k, j) - rhs[j]));
    }
  }
  return worst;
}

double OdeResidual(const BestResponseCoeffs& coeffs, const ModelParams& params) {
  RequireNash(params, "OdeResidual");
  const Trajectory& traj = coeffs.coeffs;
  double worst = 0.0;
  for (std::size_t k = 0; k < traj.grid().size(); ++k) {
    const double t = traj.grid().t(k);
    const auto rest = CoefficientRest(params, coeffs.firm, traj.row(k),
                                      {0.0, 0.0, coeffs.opponent(t)});
    for (std::size_t j = 0; j < 6; ++j) {
      worst = std::max(worst, std::abs(TimeDerivative(traj, k, j) + rest[j]));
    }
  }
  return worst;
}

std::array<double, kNashColumns> MidpointOdeResidual(const NashCoeffs& coeffs,
                                                     const ModelParams& params) {
  RequireNash(params, "MidpointOdeResidual");
  const Trajectory& traj = *coeffs.coeffs;
  const double h = traj.grid().step();
  std::array<double, kNashColumns> worst{};
  std::array<double, kNashColumns> mid{};
  std::array<double, kNashColumns> rhs{};
  for (std::size_t k = 0; k + 1 < traj.grid().size(); ++k) {
    const auto a = traj.row(k);
    const auto b = traj.row(k + 1);
    for (std::size_t j = 0; j < kNashColumns; ++j) mid[j] = 0.5 * (a[j] + b[j]);
    NashRhs(params, mid, rhs);
    for (std::size_t j = 0; j < kNashColumns; ++j) {
      worst[j] = std::max(worst[j], std::abs((b[j] - a[j]) / h - rhs[j]));
    }
  }
  return worst;
}

}  // namespace regprod
