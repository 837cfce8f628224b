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

#include "regprod/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <sstream>

#include "regprod/error.hpp"

namespace regprod {

std::string SpaceTimeGrid::Describe() const {
  std::ostringstream os;
  os << "[" << lo << "," << hi << "]^2 x " << points << "x" << points
     << " points, " << slices << " time slices";
  return os.str();
}

double DerivativeErrors::worst() const {
  return std::max({gradient, hessian, time});
}

namespace {

void CheckGrid(const SpaceTimeGrid& g) {
  if (!(g.hi > g.lo) || g.points < 2 || g.slices < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "verification grid needs hi > lo, points >= 2 and slices >= 2",
                "grid");
  }
}

std::vector<std::size_t> SliceNodes(const TimeGrid& tg, int slices) {
  std::vector<std::size_t> nodes;
  const double last = static_cast<double>(tg.size() - 1);
  for (int s = 0; s < slices; ++s) {
    nodes.push_back(static_cast<std::size_t>(std::lround(last * s / (slices - 1))));
  }
  return nodes;
}

double Axis(const SpaceTimeGrid& g, int i) {
  return g.lo + (g.hi - g.lo) * i / (g.points - 1);
}

// Runs `residual(k, x1, x2)` over the grid and collects maxima in node order.
template <typename F>
ResidualReport Sweep(const SpaceTimeGrid& grid, const TimeGrid& tg, F&& residual) {
  CheckGrid(grid);
  ResidualReport rep;
  rep.grid = grid;
  rep.max_abs = -1.0;
  for (std::size_t k : SliceNodes(tg, grid.slices)) {
    double slice_max = 0.0;
    for (int i = 0; i < grid.points; ++i) {
      for (int j = 0; j < grid.points; ++j) {
        const double x1 = Axis(grid, i), x2 = Axis(grid, j);
        const double r = std::abs(residual(k, x1, x2));
        slice_max = std::max(slice_max, r);
        if (r > rep.max_abs || std::isnan(r)) {
          rep.max_abs = std::isnan(r) ? std::numeric_limits<double>::infinity() : r;
          rep.t_at_max = tg.t(k);
          rep.x1_at_max = x1;
          rep.x2_at_max = x2;
        }
      }
    }
    rep.slice_times.push_back(tg.t(k));
    rep.slice_max.push_back(slice_max);
  }
  return rep;
}

}  // namespace

ResidualReport HjbResidualPrincipal(const QuadraticValueFn& v,
                                    const ModelParams& params,
                                    const SpaceTimeGrid& grid) {
  if (!params.has_principal()) {
    throw Error(ErrorCode::kWrongKind, "principal HJB residual needs a principal model");
  }
  const Trajectory& coeffs = v.coefficients();
  const double s1 = params.sigma(1) * params.sigma(1);
  const double s2 = params.sigma(2) * params.sigma(2);
  const double ep = params.eta_principal();

  return Sweep(grid, v.grid(), [&](std::size_t k, double x1, double x2) {
    using V = QuadraticValueFn;
    std::array<double, V::kColumns> dot{};
    for (std::size_t j = 0; j < V::kColumns; ++j) dot[j] = TimeDerivative(coeffs, k, j);
    const Eigen::Vector2d x(x1, x2);
    const Eigen::Matrix2d a = v.A(k);
    const Eigen::Vector2d grad = a * x + v.B(k);
    const double v_t = 0.5 * (dot[V::kA11] * x1 * x1 + 2.0 * dot[V::kA12] * x1 * x2 +
                              dot[V::kA22] * x2 * x2) +
                       dot[V::kB1] * x1 + dot[V::kB2] * x2 + dot[V::kC];
    const StateVector sx{x1, x2};
    const double h_max = HamiltonianH(params, OptimalRates(params, grad), grad);
    return v_t + 0.5 * s1 * (a(0, 0) - ep * grad[0] * grad[0]) +
           0.5 * s2 * (a(1, 1) - ep * grad[1] * grad[1]) + Revenue(params, sx) -
           SocialCost(params, sx) + h_max;
  });
}

std::pair<ResidualReport, ResidualReport> HjbResidualNash(
    const NashCoeffs& coeffs, const ModelParams& params, const SpaceTimeGrid& grid) {
  if (params.kind() != ModelKind::kTwoFirmNash) {
    throw Error(ErrorCode::kWrongKind, "Nash HJB residual needs model kind nash");
  }
  const Trajectory& traj = *coeffs.coeffs;
  const auto [firm1, firm2] = FeedbackStrategies(coeffs, params);
  const double s1 = params.sigma(1) * params.sigma(1);
  const double s2 = params.sigma(2) * params.sigma(2);

  auto residual = [&](int firm, std::size_t k, double x, double y) {
    const std::size_t o = firm == 1 ? kCoefA : kCoefAt;
    const auto row = traj.row(k);
    const double A = row[o], B = row[o + 1], C = row[o + 2], D = row[o + 3],
                 E = row[o + 4];
    std::array<double, 6> dot{};
    for (std::size_t j = 0; j < 6; ++j) dot[j] = TimeDerivative(traj, k, o + j);
    const double w_t = 0.5 * dot[0] * x * x + 0.5 * dot[1] * y * y + dot[2] * x * y +
                       dot[3] * x + dot[4] * y + dot[5];
    const double w_x = A * x + C * y + D;
    const double w_y = C * x + B * y + E;
    const AffineControl c1 = firm1.AffineAtNode(k);
    const AffineControl c2 = firm2.AffineAtNode(k);
    const double a1 = c1.x * x + c1.y * y + c1.c;
    const double a2 = c2.x * x + c2.y * y + c2.c;
    const double eta = params.eta(firm);
    const StateVector sx{x, y};
    const double payoff =
        firm == 1 ? Revenue(params, sx, RevenueScope::kFirm1) - EffortCost(params, a1, 1)
                  : Revenue(params, sx, RevenueScope::kFirm2) - EffortCost(params, a2, 2);
    return w_t + 0.5 * s1 * (eta * w_x * w_x + A) + 0.5 * s2 * (eta * w_y * w_y + B) +
           a1 * w_x + a2 * w_y - payoff;
  };

  auto r1 = Sweep(grid, traj.grid(), [&](std::size_t k, double x, double y) {
    return residual(1, k, x, y);
  });
  auto r2 = Sweep(grid, traj.grid(), [&](std::size_t k, double x, double y) {
    return residual(2, k, x, y);
  });
  return {std::move(r1), std::move(r2)};
}

Evaluable MakeEvaluable(const QuadraticValueFn& v, const ModelParams& params) {
  const ContractLqg lqg = AssembleLqg(params);
  const auto vp = std::make_shared<const QuadraticValueFn>(v);
  Evaluable e;
  e.value = [vp](double t, const Eigen::Vector2d& x) {
    return ValueAndGradient(*vp, t, {x[0], x[1]}).first;
  };
  e.gradient = [vp](double t, const Eigen::Vector2d& x) {
    return ValueAndGradient(*vp, t, {x[0], x[1]}).second;
  };
  e.hessian = [vp](double t, const Eigen::Vector2d&) {
    Eigen::Matrix2d a;
    Eigen::Vector2d b;
    double c;
    vp->CoefficientsAt(t, a, b, c);
    return a;
  };
  e.time_derivative = [vp, lqg](double t, const Eigen::Vector2d& x) {
    using V = QuadraticValueFn;
    const auto row = vp->coefficients().Interpolate(t);
    std::array<double, V::kColumns> dot{};
    PrincipalRhs(lqg, row, dot);
    return 0.5 * (dot[V::kA11] * x[0] * x[0] + 2.0 * dot[V::kA12] * x[0] * x[1] +
                  dot[V::kA22] * x[1] * x[1]) +
           dot[V::kB1] * x[0] + dot[V::kB2] * x[1] + dot[V::kC];
  };
  return e;
}

Evaluable MakeEvaluable(const NashCoeffs& coeffs, const ModelParams& params,
                        int firm) {
  if (firm != 1 && firm != 2) {
    throw Error(ErrorCode::kInvalidArgument, "firm index must be 1 or 2");
  }
  const double eta = params.eta(firm);
  const std::size_t o = firm == 1 ? kCoefA : kCoefAt;
  auto traj = coeffs.coeffs;
  // V = -exp(eta W): DV = eta V DW, D^2V = eta V (eta DW DW^T + D^2W).
  auto parts = [traj, o](double t, const Eigen::Vector2d& x, double& w,
                         Eigen::Vector2d& dw, Eigen::Matrix2d& d2w) {
    const auto row = traj->Interpolate(t);
    w = WValue(row, o == kCoefA ? 1 : 2, x[0], x[1]);
    d2w << row[o], row[o + 2], row[o + 2], row[o + 1];
    dw = d2w * x + Eigen::Vector2d(row[o + 3], row[o + 4]);
  };
  Evaluable e;
  e.value = [=](double t, const Eigen::Vector2d& x) {
    double w;
    Eigen::Vector2d dw;
    Eigen::Matrix2d d2w;
    parts(t, x, w, dw, d2w);
    return -std::exp(eta * w);
  };
  e.gradient = [=](double t, const Eigen::Vector2d& x) {
    double w;
    Eigen::Vector2d dw;
    Eigen::Matrix2d d2w;
    parts(t, x, w, dw, d2w);
    return Eigen::Vector2d(-std::exp(eta * w) * eta * dw);
  };
  e.hessian = [=](double t, const Eigen::Vector2d& x) {
    double w;
    Eigen::Vector2d dw;
    Eigen::Matrix2d d2w;
    parts(t, x, w, dw, d2w);
    return Eigen::Matrix2d(-std::exp(eta * w) * eta *
                           (eta * dw * dw.transpose() + d2w));
  };
  const ModelParams p = params;
  e.time_derivative = [=](double t, const Eigen::Vector2d& x) {
    const auto row = traj->Interpolate(t);
    std::array<double, kNashColumns> dot{};
    NashRhs(p, row, dot);
    const double w_t = 0.5 * dot[o] * x[0] * x[0] + 0.5 * dot[o + 1] * x[1] * x[1] +
                       dot[o + 2] * x[0] * x[1] + dot[o + 3] * x[0] +
                       dot[o + 4] * x[1] + dot[o + 5];
    const double w = WValue(row, o == kCoefA ? 1 : 2, x[0], x[1]);
    return -std::exp(eta * w) * eta * w_t;
  };
  return e;
}

DerivativeErrors FiniteDiffCheck(const Evaluable& v, double t,
                                 const Eigen::Vector2d& x, double h) {
  if (!(h > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "finite-difference step must be > 0");
  }
  auto rel = [](double fd, double exact) {
    return std::abs(fd - exact) / std::max(1.0, std::abs(exact));
  };
  DerivativeErrors err;
  const Eigen::Vector2d grad = v.gradient(t, x);
  const Eigen::Matrix2d hess = v.hessian(t, x);
  for (int i = 0; i < 2; ++i) {
    const Eigen::Vector2d e = Eigen::Vector2d::Unit(i) * h;
    const double fd = (v.value(t, x + e) - v.value(t, x - e)) / (2.0 * h);
    err.gradient = std::max(err.gradient, rel(fd, grad[i]));
    const Eigen::Vector2d col = (v.gradient(t, x + e) - v.gradient(t, x - e)) / (2.0 * h);
    for (int j = 0; j < 2; ++j) err.hessian = std::max(err.hessian, rel(col[j], hess(j, i)));
  }
  const double ft = (v.value(t + h, x) - v.value(t - h, x)) / (2.0 * h);
  err.time = rel(ft, v.time_derivative(t, x));
  return err;
}

double SupConsistency(const ModelParams& params, const Eigen::Vector2d& grad_v,
                      CouplingForm form) {
  const OracleResult brute = MaximizeHamiltonian(params, grad_v);
  const Eigen::Vector2d m = GradientCoupling(params, form);
  const double ep = params.eta_principal();
  double closed = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double s2 = params.sigma(i + 1) * params.sigma(i + 1);
    closed += 0.5 * m[i] * grad_v[i] * grad_v[i] + 0.5 * ep * s2 * grad_v[i] * grad_v[i];
  }
  return std::abs(brute.value - closed);
}

}  // namespace regprod
