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

#include "regprod/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "regprod/error.hpp"

namespace regprod {

TimeGrid::TimeGrid(double horizon, std::size_t n_nodes)
    : horizon_(horizon), n_nodes_(n_nodes) {
  if (!(std::isfinite(horizon) && horizon > 0.0)) {
    throw Error(ErrorCode::kOutOfRange, "time grid horizon must be > 0",
                "horizon");
  }
  if (n_nodes < 2) {
    throw Error(ErrorCode::kOutOfRange, "time grid needs at least 2 nodes",
                "n_nodes");
  }
}

double TimeGrid::t(std::size_t k) const {
  if (k + 1 == n_nodes_) return horizon_;
  return horizon_ * static_cast<double>(k) / static_cast<double>(n_nodes_ - 1);
}

std::pair<std::size_t, double> TimeGrid::Locate(double t) const {
  const double slack = 1e-12 * horizon_;
  if (!(t >= -slack && t <= horizon_ + slack)) {
    throw Error(ErrorCode::kOutOfHorizon,
                "time " + std::to_string(t) + " outside [0, " +
                    std::to_string(horizon_) + "]");
  }
  const double pos = std::clamp(t / step(), 0.0, static_cast<double>(n_nodes_ - 1));
  const double nearest = std::round(pos);
  if (std::abs(pos - nearest) < 1e-9) {
    const auto k = static_cast<std::size_t>(nearest);
    return {k, 0.0};
  }
  const auto k = static_cast<std::size_t>(std::floor(pos));
  return {k, pos - static_cast<double>(k)};
}

Trajectory::Trajectory(TimeGrid grid, std::size_t dim)
    : grid_(grid), dim_(dim), data_(grid.size() * dim, 0.0) {}

std::vector<double> Trajectory::Interpolate(double t) const {
  const auto [k, w] = grid_.Locate(t);
  std::vector<double> out(row(k).begin(), row(k).end());
  if (w > 0.0) {
    const auto next = row(k + 1);
    for (std::size_t j = 0; j < dim_; ++j) out[j] = (1.0 - w) * out[j] + w * next[j];
  }
  return out;
}

Trajectory Rk4Backward(const OdeRhs& rhs, std::span<const double> terminal,
                       const TimeGrid& grid) {
  const std::size_t n = terminal.size();
  Trajectory traj(grid, n);
  std::vector<double> y(terminal.begin(), terminal.end());
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
  std::copy(y.begin(), y.end(), traj.row(grid.size() - 1).begin());

  for (std::size_t k = grid.size() - 1; k > 0; --k) {
    const double t = grid.t(k);
    const double h = grid.t(k - 1) - t;  // negative: marching backward
    rhs(t, y, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    rhs(t + 0.5 * h, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    rhs(t + 0.5 * h, tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
    rhs(t + h, tmp, k4);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (!std::isfinite(y[i]) || std::abs(y[i]) > kBlowUpThreshold) {
        const double t_escape = grid.t(k - 1);
        throw Error(ErrorCode::kBlowUp,
                    "Riccati escape: coefficient " + std::to_string(i) +
                        " exceeded 1e12 at t = " + std::to_string(t_escape),
                    {}, t_escape);
      }
    }
    std::copy(y.begin(), y.end(), traj.row(k - 1).begin());
  }
  return traj;
}

double TimeDerivative(const Trajectory& traj, std::size_t k, std::size_t j) {
  const std::size_t n = traj.grid().size();
  if (n < 5) {
    throw Error(ErrorCode::kInvalidArgument,
                "TimeDerivative needs at least 5 grid nodes");
  }
  const double h = traj.grid().step();
  auto y = [&](std::size_t i) { return traj.at(i, j); };
  if (k >= 2 && k + 2 < n) {
    return (y(k - 2) - 8.0 * y(k - 1) + 8.0 * y(k + 1) - y(k + 2)) / (12.0 * h);
  }
  // Fourth-order one-sided stencils on nodes {0..4} or {n-5..n-1}.
  static constexpr double kForward[2][5] = {
      {-25.0, 48.0, -36.0, 16.0, -3.0},  // derivative at node 0 of the window
      {-3.0, -10.0, 18.0, -6.0, 1.0},    // at node 1
  };
  if (k < 2) {
    double acc = 0.0;
    for (std::size_t i = 0; i < 5; ++i) acc += kForward[k][i] * y(i);
    return acc / (12.0 * h);
  }
  const std::size_t back = n - 1 - k;  // 0 or 1
  double acc = 0.0;
  for (std::size_t i = 0; i < 5; ++i) acc -= kForward[back][i] * y(n - 1 - i);
  return acc / (12.0 * h);
}

}  // namespace regprod
