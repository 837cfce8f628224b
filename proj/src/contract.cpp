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

#include "regprod/contract.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "regprod/error.hpp"

namespace regprod {
namespace {

void RequireKind(const ModelParams& params, ModelKind kind, const char* what) {
  if (params.kind() != kind) {
    throw Error(ErrorCode::kWrongKind,
                std::string(what) + " requires model kind " +
                    std::string(ModelKindName(kind)) + ", got " +
                    std::string(ModelKindName(params.kind())));
  }
}

void RequirePrincipal(const ModelParams& params, const char* what) {
  if (!params.has_principal()) {
    throw Error(ErrorCode::kWrongKind,
                std::string(what) + " needs a model with a principal");
  }
}

double Sq(double v) { return v * v; }

}  // namespace

EffectiveRiskAversion EffectiveAversions(const ModelParams& params) {
  RequireKind(params, ModelKind::kTwoFirmRegulated, "EffectiveAversions");
  const double ep = params.eta_principal();
  const double e1 = params.eta(1);
  const double e2 = params.eta(2);
  return {ep * e1 / (ep + e1), ep * e2 / (ep + e2), ep / (e1 + ep),
          ep / (e2 + ep)};
}

std::pair<double, double> LambdaPair(const ModelParams& params) {
  const auto ra = EffectiveAversions(params);
  const double g1 = params.gamma(1), g2 = params.gamma(2);
  const double s1 = Sq(params.sigma(1)), s2 = Sq(params.sigma(2));
  const double l12 = (g1 + ra.eta_bar_2 * s1) /
                     (g1 + (params.eta(1) + ra.eta_bar_2) * s1);
  const double l21 = (g2 + ra.eta_bar_1 * s2) /
                     (g2 + (params.eta(2) + ra.eta_bar_1) * s2);
  return {l12, l21};
}

std::vector<double> RatesToVector(const IncentiveRates& rates) {
  if (const auto* s = std::get_if<SingleFirmRates>(&rates)) {
    return {s->z1, s->z2};
  }
  const auto& t = std::get<TwoFirmRates>(rates);
  return {t.z11, t.z12, t.z21, t.z22};
}

IncentiveRates RatesFromVector(ModelKind kind, std::span<const double> z) {
  if (kind == ModelKind::kSingleFirm && z.size() == 2) {
    return SingleFirmRates{z[0], z[1]};
  }
  if (kind == ModelKind::kTwoFirmRegulated && z.size() == 4) {
    return TwoFirmRates{z[0], z[1], z[2], z[3]};
  }
  throw Error(ErrorCode::kInvalidArgument,
              "rate vector of size " + std::to_string(z.size()) +
                  " does not match model kind " + std::string(ModelKindName(kind)));
}

SingleFirmRates RatesSingle(const ModelParams& params,
                            const Eigen::Vector2d& grad_v) {
  RequireKind(params, ModelKind::kSingleFirm, "RatesSingle");
  const double ep = params.eta_principal();
  const double ea = params.eta_agent();
  double z[2];
  for (int i = 0; i < 2; ++i) {
    const double g = params.gamma(i + 1);
    const double s2 = Sq(params.sigma(i + 1));
    z[i] = (g * grad_v[i] + s2 * ep * grad_v[i]) / (s2 * ep + g + ea * s2);
  }
  return {z[0], z[1]};
}

TwoFirmRates RatesTwo(const ModelParams& params, const Eigen::Vector2d& grad_v) {
  RequireKind(params, ModelKind::kTwoFirmRegulated, "RatesTwo");
  const auto ra = EffectiveAversions(params);
  const auto [l12, l21] = LambdaPair(params);
  TwoFirmRates z;
  z.z11 = l12 * grad_v[0];
  z.z22 = l21 * grad_v[1];
  z.z12 = ra.eta_1p * (grad_v[1] - z.z22);
  z.z21 = ra.eta_2p * (grad_v[0] - z.z11);
  return z;
}

IncentiveRates OptimalRates(const ModelParams& params,
                            const Eigen::Vector2d& grad_v) {
  switch (params.kind()) {
    case ModelKind::kSingleFirm: return RatesSingle(params, grad_v);
    case ModelKind::kTwoFirmRegulated: return RatesTwo(params, grad_v);
    case ModelKind::kTwoFirmNash: break;
  }
  RequirePrincipal(params, "OptimalRates");
  return {};
}

Eigen::Vector2d InducedEffort(const ModelParams& params,
                              const IncentiveRates& rates) {
  if (const auto* s = std::get_if<SingleFirmRates>(&rates)) {
    return {params.gamma(1) * s->z1, params.gamma(2) * s->z2};
  }
  const auto& t = std::get<TwoFirmRates>(rates);
  return {params.gamma(1) * t.z11, params.gamma(2) * t.z22};
}

double HamiltonianH(const ModelParams& params, const IncentiveRates& rates,
                    const Eigen::Vector2d& grad_v) {
  RequirePrincipal(params, "HamiltonianH");
  const double ep = params.eta_principal();
  const double g1 = params.gamma(1), g2 = params.gamma(2);
  const double s1 = params.sigma(1), s2 = params.sigma(2);
  const double v1 = grad_v[0], v2 = grad_v[1];

  if (params.kind() == ModelKind::kSingleFirm) {
    const auto* z = std::get_if<SingleFirmRates>(&rates);
    if (z == nullptr) {
      throw Error(ErrorCode::kWrongKind, "single-firm h needs SingleFirmRates");
    }
    const double ea = params.eta_agent();
    const Eigen::Vector2d a = InducedEffort(params, rates);
    const double effort_cost = EffortCost(params, a[0], 1) + EffortCost(params, a[1], 2);
    const double agent_premium =
        0.5 * ea * (Sq(s1) * Sq(z->z1) + Sq(s2) * Sq(z->z2));
    // Principal's exposure to the payment noise z_i sigma_i dW_i.
    const double exposure = Sq(s1) * z->z1 * ep * v1 + Sq(s2) * z->z2 * ep * v2 -
                            0.5 * (Sq(s1) * Sq(z->z1) + Sq(s2) * Sq(z->z2)) * ep;
    return g1 * z->z1 * v1 + g2 * z->z2 * v2 + exposure - effort_cost -
           agent_premium;
  }

  const auto* z = std::get_if<TwoFirmRates>(&rates);
  if (z == nullptr) {
    throw Error(ErrorCode::kWrongKind, "two-firm h needs TwoFirmRates");
  }
  const double e1 = params.eta(1), e2 = params.eta(2);
  const Eigen::Vector2d a = InducedEffort(params, rates);
  const double effort_cost = EffortCost(params, a[0], 1) + EffortCost(params, a[1], 2);
  const double risk_premium =
      0.5 * (e1 * Sq(s1) * Sq(z->z11) + e1 * Sq(s2) * Sq(z->z12) +
             e2 * Sq(s2) * Sq(z->z22) + e2 * Sq(s1) * Sq(z->z21));
  const double vol1 = (z->z11 + z->z21) * s1;  // aggregate payment volatility
  const double vol2 = (z->z22 + z->z12) * s2;
  return g1 * z->z11 * v1 + g2 * z->z22 * v2 - (effort_cost + risk_premium) -
         0.5 * ep * (Sq(vol1) + Sq(vol2)) + s1 * ep * vol1 * v1 +
         s2 * ep * vol2 * v2;
}

namespace {

// Golden-section maximization of a 1-D concave function on [a, b].
std::pair<double, double> GoldenSection(const std::function<double(double)>& f,
                                        double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace

OracleResult ArgmaxOracle(const Objective& objective, std::span<const Interval> box,
                          int coarse_n) {
  if (box.empty() || coarse_n < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "ArgmaxOracle needs a non-empty box and coarse_n >= 3");
  }
  const std::size_t dim = box.size();
  std::vector<double> step(dim);
  std::vector<double> z(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    if (!(box[k].hi > box[k].lo)) {
      throw Error(ErrorCode::kInvalidArgument, "ArgmaxOracle: empty interval");
    }
    step[k] = (box[k].hi - box[k].lo) / (coarse_n - 1);
    z[k] = 0.5 * (box[k].lo + box[k].hi);
  }
  double best = objective(z);

  constexpr int kMaxSweeps = 200000;
  constexpr double kGoldenTol = 1e-10;
  std::vector<double> trial = z;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool improved = false;
    for (std::size_t k = 0; k < dim; ++k) {
      trial = z;
      auto along = [&](double zk) {
        trial[k] = zk;
        return objective(trial);
      };
      int best_j = 0;
      double best_scan = -std::numeric_limits<double>::infinity();
      for (int j = 0; j < coarse_n; ++j) {
        const double val = along(box[k].lo + j * step[k]);
        if (val > best_scan) {
          best_scan = val;
          best_j = j;
        }
      }
      const double centre = box[k].lo + best_j * step[k];
      const double a = std::max(box[k].lo, centre - step[k]);
      const double b = std::min(box[k].hi, centre + step[k]);
      auto [zk, fk] = GoldenSection(along, a, b, kGoldenTol);
      if (best_scan > fk) {
        zk = centre;
        fk = best_scan;
      }
      if (fk > best) {
        improved = true;
        best = fk;
        z[k] = zk;
      }
    }
    if (!improved || dim == 1) break;
  }

  for (std::size_t k = 0; k < dim; ++k) {
    if (z[k] - box[k].lo < step[k] || box[k].hi - z[k] < step[k]) {
      throw Error(ErrorCode::kMaximizerOnBoundary,
                  "maximizer coordinate " + std::to_string(k) + " = " +
                      std::to_string(z[k]) + " lies on the search box boundary");
    }
  }
  return {z, best};
}

OracleResult ArgmaxOracleExpanding(const Objective& objective, int dim,
                                   int coarse_n) {
  for (double r = 10.0;; r *= 2.0) {
    std::vector<Interval> box(static_cast<std::size_t>(dim), Interval{-r, r});
    try {
      return ArgmaxOracle(objective, box, coarse_n);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kMaximizerOnBoundary || r * 2.0 > 1e4) throw;
    }
  }
}

OracleResult MaximizeHamiltonian(const ModelParams& params,
                                 const Eigen::Vector2d& grad_v) {
  RequirePrincipal(params, "MaximizeHamiltonian");
  const ModelKind kind = params.kind();
  const int dim = kind == ModelKind::kSingleFirm ? 2 : 4;
  auto h = [&](std::span<const double> z) {
    return HamiltonianH(params, RatesFromVector(kind, z), grad_v);
  };
  return ArgmaxOracleExpanding(h, dim);
}

Eigen::Vector2d GradientCoupling(const ModelParams& params, CouplingForm form) {
  RequirePrincipal(params, "GradientCoupling");
  const double ep = params.eta_principal();
  Eigen::Vector2d m;
  for (int i = 0; i < 2; ++i) {
    const double g = params.gamma(i + 1);
    const double s2 = Sq(params.sigma(i + 1));
    if (params.kind() == ModelKind::kSingleFirm) {
      const double ratio =
          Sq(g + s2 * ep) / (s2 * ep + g + params.eta_agent() * s2);
      m[i] = form == CouplingForm::kCompletedSquare ? ratio - ep * s2
                                                    : 2.0 * ratio - ep;
    } else {
      const auto ra = EffectiveAversions(params);
      const double other_bar = i == 0 ? ra.eta_bar_2 : ra.eta_bar_1;
      const double ratio =
          Sq(g + other_bar * s2) / (g + (params.eta(i + 1) + other_bar) * s2);
      m[i] = form == CouplingForm::kCompletedSquare ? ratio - other_bar * s2
                                                    : ratio + other_bar * s2;
    }
  }
  return m;
}

ContractLqg AssembleLqg(const ModelParams& params) {
  RequirePrincipal(params, "AssembleLqg");
  // f - g written with kind-dependent conventions:
  //   f = (p0 - p1 x1 + s p2 x2)(x1 + x2),  s = -1 (or +1 literally printed)
  //   g = 1/2 k1 x1^2 + 1/2 k2 x2^2 + w lambda (x1 + x2 - delta)^2
  const bool literal =
      params.literal_signs() && params.kind() == ModelKind::kSingleFirm;
  const double s = literal ? 1.0 : -1.0;
  const double w = literal ? 1.0 : 0.5;
  const bool single = params.kind() == ModelKind::kSingleFirm;
  const double k1 = single ? params.kappa() : 0.0;
  const double k2 = single ? 0.0 : params.kappa();
  const double lam = params.lambda(), del = params.delta();
  const double p0 = params.p0(), p1 = params.p1(), p2 = params.p2();

  ContractLqg lqg;
  lqg.q(0, 0) = 2.0 * (-p1 - 0.5 * k1 - w * lam);
  lqg.q(1, 1) = 2.0 * (s * p2 - 0.5 * k2 - w * lam);
  lqg.q(0, 1) = lqg.q(1, 0) = -p1 + s * p2 - 2.0 * w * lam;
  lqg.l = Eigen::Vector2d::Constant(p0 + 2.0 * w * lam * del);
  lqg.q0 = -w * lam * del * del;
  const Eigen::Vector2d m = GradientCoupling(params);
  lqg.m = m.asDiagonal();
  lqg.sigma = Eigen::Vector2d(params.sigma(1), params.sigma(2)).asDiagonal();
  return lqg;
}

}  // namespace regprod
