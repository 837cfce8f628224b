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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace regprod {

/// Uniform grid on [0, horizon] with `n_nodes` nodes (both endpoints included).
class TimeGrid {
 public:
  TimeGrid(double horizon, std::size_t n_nodes);

  double horizon() const { return horizon_; }
  std::size_t size() const { return n_nodes_; }
  double step() const { return horizon_ / static_cast<double>(n_nodes_ - 1); }
  /// Node time; the last node is exactly `horizon`.
  double t(std::size_t k) const;

  /// Locates t in the grid: returns (k, w) with t = (1 - w) t_k + w t_{k+1},
  /// w in [0, 1). Times within 1e-12 relative of a node snap to it (w = 0).
  /// Throws kOutOfHorizon outside [0, horizon].
  std::pair<std::size_t, double> Locate(double t) const;

 private:
  double horizon_;
  std::size_t n_nodes_;
};

/// Node-by-node samples of a `dim`-dimensional state on a TimeGrid.
class Trajectory {
 public:
  Trajectory(TimeGrid grid, std::size_t dim);

  const TimeGrid& grid() const { return grid_; }
  std::size_t dim() const { return dim_; }

  std::span<double> row(std::size_t k) {
    return {data_.data() + k * dim_, dim_};
  }
  std::span<const double> row(std::size_t k) const {
    return {data_.data() + k * dim_, dim_};
  }
  double at(std::size_t k, std::size_t j) const { return data_[k * dim_ + j]; }
  double& at(std::size_t k, std::size_t j) { return data_[k * dim_ + j]; }

  /// Linear interpolation between nodes.
  std::vector<double> Interpolate(double t) const;

 private:
  TimeGrid grid_;
  std::size_t dim_;
  std::vector<double> data_;
};

/// dy/dt = rhs(t, y), written into `dydt`.
using OdeRhs = std::function<void(double t, std::span<const double> y,
                                  std::span<double> dydt)>;

/// Coefficient magnitude treated as finite-time escape.
inline constexpr double kBlowUpThreshold = 1e12;

/// Classic fixed-step RK4 marching from the terminal value at t = horizon
/// down to t = 0. Throws Error(kBlowUp) with the escape time when any
/// component becomes non-finite or exceeds kBlowUpThreshold.
Trajectory Rk4Backward(const OdeRhs& rhs, std::span<const double> terminal,
                       const TimeGrid& grid);

/// Fourth-order finite-difference estimate of d/dt of column `j` at node k
/// (centred in the interior, one-sided at the two nodes nearest each end).
/// Needs at least 5 nodes.
double TimeDerivative(const Trajectory& traj, std::size_t k, std::size_t j);

}  // namespace regprod
