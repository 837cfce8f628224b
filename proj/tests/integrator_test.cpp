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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "regprod/error.hpp"

namespace regprod {
namespace {

// a' = -1 - a^2, a(T) = 0 has the solution a(t) = tan(T - t).
double ScalarRiccatiError(std::size_t steps, double horizon = 0.5) {
  const OdeRhs rhs = [](double, std::span<const double> y, std::span<double> dy) {
    dy[0] = -1.0 - y[0] * y[0];
  };
  const double terminal[] = {0.0};
  const Trajectory traj = Rk4Backward(rhs, terminal, TimeGrid(horizon, steps + 1));
  return std::abs(traj.at(0, 0) - std::tan(horizon));
}

TEST(Rk4Backward, ScalarRiccatiAccuracy) {
  EXPECT_LE(ScalarRiccatiError(1000), 1e-9);
  EXPECT_NEAR(std::tan(0.5), 0.546302, 1e-6);
}

TEST(Rk4Backward, FourthOrderConvergence) {
  const double coarse = ScalarRiccatiError(50);
  const double fine = ScalarRiccatiError(100);
  EXPECT_GE(coarse / fine, 12.0);
  EXPECT_LE(coarse / fine, 20.0);
}

TEST(Rk4Backward, DetectsEscape) {
  // tan(T - t) escapes at T - t = pi / 2.
  const OdeRhs rhs = [](double, std::span<const double> y, std::span<double> dy) {
    dy[0] = -1.0 - y[0] * y[0];
  };
  const double terminal[] = {0.0};
  try {
    Rk4Backward(rhs, terminal, TimeGrid(2.0, 4001));
    FAIL() << "expected BlowUp";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBlowUp);
    EXPECT_NEAR(e.time(), 2.0 - std::numbers::pi / 2.0, 2e-3);
  }
}

TEST(Rk4Backward, LinearSystemExact) {
  // y' = (1, 2t): y(t) = (t - T, t^2 - T^2) from zero terminal data.
  const OdeRhs rhs = [](double t, std::span<const double>, std::span<double> dy) {
    dy[0] = 1.0;
    dy[1] = 2.0 * t;
  };
  const double terminal[] = {0.0, 0.0};
  const Trajectory traj = Rk4Backward(rhs, terminal, TimeGrid(1.0, 11));
  for (std::size_t k = 0; k < 11; ++k) {
    const double t = traj.grid().t(k);
    EXPECT_NEAR(traj.at(k, 0), t - 1.0, 1e-14);
    EXPECT_NEAR(traj.at(k, 1), t * t - 1.0, 1e-14);
  }
}

TEST(TimeGrid, NodesAndLocate) {
  const TimeGrid g(0.3, 4);
  EXPECT_EQ(g.t(3), 0.3);
  EXPECT_NEAR(g.step(), 0.1, 1e-16);
  auto [k, w] = g.Locate(0.15);
  EXPECT_EQ(k, 1u);
  EXPECT_NEAR(w, 0.5, 1e-12);
  std::tie(k, w) = g.Locate(0.1 + 1e-15);
  EXPECT_EQ(k, 1u);
  EXPECT_EQ(w, 0.0);
  std::tie(k, w) = g.Locate(0.3);
  EXPECT_EQ(k, 3u);
  EXPECT_EQ(w, 0.0);
  EXPECT_THROW(g.Locate(-0.01), Error);
  EXPECT_THROW(g.Locate(0.31), Error);
}

TEST(TimeGrid, RejectsBadInput) {
  EXPECT_THROW(TimeGrid(0.0, 10), Error);
  EXPECT_THROW(TimeGrid(1.0, 1), Error);
}

TEST(Trajectory, InterpolatesLinearly) {
  Trajectory traj(TimeGrid(1.0, 3), 2);
  traj.at(0, 0) = 0.0;
  traj.at(1, 0) = 1.0;
  traj.at(2, 0) = 4.0;
  traj.at(2, 1) = -2.0;
  const auto mid = traj.Interpolate(0.75);
  EXPECT_DOUBLE_EQ(mid[0], 2.5);
  EXPECT_DOUBLE_EQ(mid[1], -1.0);
  EXPECT_EQ(traj.Interpolate(1.0)[0], 4.0);
}

TEST(TimeDerivative, ExactOnQuartics) {
  const TimeGrid g(2.0, 21);
  Trajectory traj(g, 1);
  auto f = [](double t) { return 1.0 - 2.0 * t + 0.5 * t * t * t - 0.25 * t * t * t * t; };
  auto df = [](double t) { return -2.0 + 1.5 * t * t - t * t * t; };
  for (std::size_t k = 0; k < g.size(); ++k) traj.at(k, 0) = f(g.t(k));
  for (std::size_t k = 0; k < g.size(); ++k) {
    EXPECT_NEAR(TimeDerivative(traj, k, 0), df(g.t(k)), 1e-11) << "node " << k;
  }
}

TEST(TimeDerivative, NeedsFiveNodes) {
  Trajectory traj(TimeGrid(1.0, 4), 1);
  EXPECT_THROW(TimeDerivative(traj, 0, 0), Error);
}

}  // namespace
}  // namespace regprod
