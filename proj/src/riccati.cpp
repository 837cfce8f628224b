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

#include "regprod/riccati.hpp"

#include <array>

#include "regprod/error.hpp"

namespace regprod {

QuadraticValueFn::QuadraticValueFn(Trajectory coefficients,
                                   std::optional<ModelKind> kind)
    : coeffs_(std::move(coefficients)), kind_(kind) {
  if (coeffs_.dim() != kColumns) {
    throw Error(ErrorCode::kInvalidArgument,
                "quadratic value function needs 6 coefficient columns");
  }
}

Eigen::Matrix2d QuadraticValueFn::A(std::size_t node) const {
  Eigen::Matrix2d a;
  a << coeffs_.at(node, kA11), coeffs_.at(node, kA12), coeffs_.at(node, kA12),
      coeffs_.at(node, kA22);
  return a;
}

Eigen::Vector2d QuadraticValueFn::B(std::size_t node) const {
  return {coeffs_.at(node, kB1), coeffs_.at(node, kB2)};
}

void QuadraticValueFn::CoefficientsAt(double t, Eigen::Matrix2d& a,
                                      Eigen::Vector2d& b, double& c) const {
  const auto row = coeffs_.Interpolate(t);
  a << row[kA11], row[kA12], row[kA12], row[kA22];
  b << row[kB1], row[kB2];
  c = row[kC];
}

void PrincipalRhs(const ContractLqg& lqg, std::span<const double> y,
                  std::span<double> dydt) {
  using V = QuadraticValueFn;
  Eigen::Matrix2d a;
  a << y[V::kA11], y[V::kA12], y[V::kA12], y[V::kA22];
  const Eigen::Vector2d b(y[V::kB1], y[V::kB2]);
  const Eigen::Matrix2d da = -lqg.q - a * lqg.m * a;
  const Eigen::Vector2d db = -lqg.l - a * lqg.m * b;
  const Eigen::Matrix2d ss = lqg.sigma * lqg.sigma.transpose();
  dydt[V::kA11] = da(0, 0);
  dydt[V::kA12] = da(0, 1);
  dydt[V::kA22] = da(1, 1);
  dydt[V::kB1] = db[0];
  dydt[V::kB2] = db[1];
  dydt[V::kC] = -0.5 * (ss * a).trace() - 0.5 * b.dot(lqg.m * b) - lqg.q0;
}

QuadraticValueFn SolvePrincipal(const ModelParams& params, std::size_t n_nodes) {
  const ContractLqg lqg = AssembleLqg(params);
  const TimeGrid grid(params.horizon(), n_nodes);
  const std::array<double, QuadraticValueFn::kColumns> terminal{};
  auto rhs = [&lqg](double, std::span<const double> y, std::span<double> dydt) {
    PrincipalRhs(lqg, y, dydt);
  };
  return QuadraticValueFn(Rk4Backward(rhs, terminal, grid), params.kind());
}

std::pair<double, Eigen::Vector2d> ValueAndGradient(const QuadraticValueFn& v,
                                                    double t, const StateVector& x) {
  Eigen::Matrix2d a;
  Eigen::Vector2d b;
  double c;
  v.CoefficientsAt(t, a, b, c);
  const Eigen::Vector2d xv(x.x1, x.x2);
  return {0.5 * xv.dot(a * xv) + b.dot(xv) + c, a * xv + b};
}

IncentiveRates RateProfile(const ModelParams& params, const QuadraticValueFn& v,
                           double t, const StateVector& x) {
  return OptimalRates(params, ValueAndGradient(v, t, x).second);
}

}  // namespace regprod
