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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "regprod/error.hpp"

namespace regprod {
namespace {

TEST(EffectiveAversions, Formula) {
  ParamRecord r = testing::TwoFirmRecord();
  r["eta1"] = 2.0;
  r["eta2"] = 0.5;
  r["eta_p"] = 3.0;
  const auto a = EffectiveAversions(ValidateParams(ModelKind::kTwoFirmRegulated, r));
  EXPECT_DOUBLE_EQ(a.eta_bar_1, 6.0 / 5.0);
  EXPECT_DOUBLE_EQ(a.eta_bar_2, 1.5 / 3.5);
  EXPECT_DOUBLE_EQ(a.eta_1p, 3.0 / 5.0);
  EXPECT_DOUBLE_EQ(a.eta_2p, 3.0 / 3.5);
}

TEST(Rates, SingleFirmClosedForm) {
  const ModelParams p = testing::SingleFirmFixture();
  const SingleFirmRates z = RatesSingle(p, {1.0, -2.0});
  // (gamma + sigma^2 eta_p) v / (sigma^2 eta_p + gamma + eta_a sigma^2)
  EXPECT_NEAR(z.z1, (1.5 + 0.04) / (0.04 + 1.5 + 0.04), 1e-15);
  EXPECT_NEAR(z.z2, -2.0 * (1.0 + 0.09) / (0.09 + 1.0 + 0.09), 1e-15);
}

TEST(Rates, TwoFirmStructure) {
  const ModelParams p = testing::TwoFirmFixture();
  const Eigen::Vector2d v(0.7, -0.3);
  const TwoFirmRates z = RatesTwo(p, v);
  const auto [l12, l21] = LambdaPair(p);
  const auto a = EffectiveAversions(p);
  EXPECT_DOUBLE_EQ(z.z11, l12 * v[0]);
  EXPECT_DOUBLE_EQ(z.z22, l21 * v[1]);
  EXPECT_DOUBLE_EQ(z.z12, a.eta_1p * (v[1] - z.z22));
  EXPECT_DOUBLE_EQ(z.z21, a.eta_2p * (v[0] - z.z11));
}

TEST(Rates, VectorRoundTrip) {
  const IncentiveRates r = TwoFirmRates{1, 2, 3, 4};
  const auto v = RatesToVector(r);
  EXPECT_EQ(v, (std::vector<double>{1, 2, 3, 4}));
  EXPECT_EQ(RatesToVector(RatesFromVector(ModelKind::kTwoFirmRegulated, v)), v);
  const std::vector<double> two{5, 6};
  EXPECT_EQ(RatesToVector(RatesFromVector(ModelKind::kSingleFirm, two)), two);
  EXPECT_THROW(RatesFromVector(ModelKind::kSingleFirm, v), Error);
}

TEST(Rates, InducedEffort) {
  const ModelParams p = testing::TwoFirmFixture();
  const Eigen::Vector2d a = InducedEffort(p, TwoFirmRates{0.2, 9.0, 9.0, -0.4});
  EXPECT_DOUBLE_EQ(a[0], 1.5 * 0.2);
  EXPECT_DOUBLE_EQ(a[1], -0.4);
}

TEST(Rates, GameHasNoContract) {
  EXPECT_THROW(OptimalRates(testing::GameFixture(), {1.0, 1.0}), Error);
  EXPECT_THROW(AssembleLqg(testing::GameFixture()), Error);
}

// Closed-form maximizers against the brute-force oracle on random draws.
class RateOracle : public ::testing::TestWithParam<ModelKind> {};

TEST_P(RateOracle, ClosedFormMatchesBruteForce) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> g(-3.0, 3.0);
  for (int draw = 0; draw < 100; ++draw) {
    const ModelParams p = testing::RandomParams(rng, GetParam());
    const Eigen::Vector2d grad(g(rng), g(rng));
    const auto closed = RatesToVector(OptimalRates(p, grad));
    const OracleResult brute = MaximizeHamiltonian(p, grad);
    ASSERT_EQ(closed.size(), brute.argmax.size());
    for (std::size_t k = 0; k < closed.size(); ++k) {
      EXPECT_NEAR(closed[k], brute.argmax[k], 1e-6) << "draw " << draw << " rate " << k;
    }
    EXPECT_NEAR(HamiltonianH(p, OptimalRates(p, grad), grad), brute.value, 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Kinds, RateOracle,
                         ::testing::Values(ModelKind::kSingleFirm,
                                           ModelKind::kTwoFirmRegulated));

TEST(Hamiltonian, ClosedFormIsMaximum) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n;
  const ModelParams p = testing::TwoFirmFixture();
  const Eigen::Vector2d grad(0.8, -1.1);
  const IncentiveRates best = OptimalRates(p, grad);
  const double h_best = HamiltonianH(p, best, grad);
  for (int k = 0; k < 200; ++k) {
    auto z = RatesToVector(best);
    for (double& zi : z) zi += 0.1 * n(rng);
    EXPECT_LT(HamiltonianH(p, RatesFromVector(p.kind(), z), grad), h_best);
  }
}

TEST(Hamiltonian, ZeroGradientGivesZeroRates) {
  for (const ModelParams& p : {testing::SingleFirmFixture(), testing::TwoFirmFixture()}) {
    for (double z : RatesToVector(OptimalRates(p, Eigen::Vector2d::Zero()))) {
      EXPECT_EQ(z, 0.0);
    }
    EXPECT_NEAR(MaximizeHamiltonian(p, Eigen::Vector2d::Zero()).value, 0.0, 1e-12);
  }
}

TEST(ArgmaxOracle, FindsInteriorMaximum) {
  const Interval box[] = {{-5.0, 5.0}, {-5.0, 5.0}};
  const auto r = ArgmaxOracle(
      [](std::span<const double> z) {
        return -(z[0] - 1.234) * (z[0] - 1.234) - 2.0 * (z[1] + 0.5) * (z[1] + 0.5) +
               0.5 * (z[0] - 1.234) * (z[1] + 0.5);
      },
      box);
  EXPECT_NEAR(r.argmax[0], 1.234, 1e-7);
  EXPECT_NEAR(r.argmax[1], -0.5, 1e-7);
  EXPECT_NEAR(r.value, 0.0, 1e-12);
}

TEST(ArgmaxOracle, BoundaryMaximizerIsAnError) {
  const Interval box[] = {{-1.0, 1.0}};
  try {
    ArgmaxOracle([](std::span<const double> z) { return z[0]; }, box);
    FAIL() << "expected MaximizerOnBoundary";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMaximizerOnBoundary);
  }
}

TEST(ArgmaxOracle, ExpandingBoxReachesFarMaximum) {
  const auto r = ArgmaxOracleExpanding(
      [](std::span<const double> z) { return -(z[0] - 55.0) * (z[0] - 55.0); }, 1);
  EXPECT_NEAR(r.argmax[0], 55.0, 1e-6);
}

TEST(Coupling, CompletedSquareReproducesSupremum) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> g(-2.0, 2.0);
  for (ModelKind kind : {ModelKind::kSingleFirm, ModelKind::kTwoFirmRegulated}) {
    const ModelParams p = testing::RandomParams(rng, kind);
    const Eigen::Vector2d grad(g(rng), g(rng));
    const Eigen::Vector2d m = GradientCoupling(p);
    double closed = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double s2 = p.sigma(i + 1) * p.sigma(i + 1);
      closed += 0.5 * (m[i] + p.eta_principal() * s2) * grad[i] * grad[i];
    }
    EXPECT_NEAR(HamiltonianH(p, OptimalRates(p, grad), grad), closed, 1e-12);
  }
}

TEST(Coupling, PrintedFormDiffers) {
  for (const ModelParams& p : {testing::SingleFirmFixture(), testing::TwoFirmFixture()}) {
    const Eigen::Vector2d a = GradientCoupling(p, CouplingForm::kCompletedSquare);
    const Eigen::Vector2d b = GradientCoupling(p, CouplingForm::kPrinted);
    EXPECT_GT((a - b).cwiseAbs().minCoeff(), 1e-3);
  }
}

TEST(AssembleLqg, TwoFirmWorkedExample) {
  const ContractLqg lqg = AssembleLqg(testing::TwoFirmFixture());
  EXPECT_NEAR(lqg.q(0, 0), -2.2, 1e-15);
  EXPECT_NEAR(lqg.q(0, 1), -2.0, 1e-15);
  EXPECT_NEAR(lqg.q(1, 0), -2.0, 1e-15);
  EXPECT_NEAR(lqg.q(1, 1), -2.8, 1e-15);
  EXPECT_NEAR(lqg.l[0], 2.0, 1e-15);
  EXPECT_NEAR(lqg.l[1], 2.0, 1e-15);
  EXPECT_NEAR(lqg.q0, -0.5, 1e-15);
  EXPECT_EQ(lqg.m(0, 1), 0.0);
  EXPECT_EQ(lqg.sigma(1, 1), 0.3);
}

// f - g must equal 1/2 x.Qx + L.x + q0 everywhere, for every convention.
TEST(AssembleLqg, MatchesModelFunctions) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (const ModelParams& p :
       {testing::TwoFirmFixture(), testing::TwoFirmFixture(true),
        testing::SingleFirmFixture(), testing::SingleFirmFixture(true),
        testing::RandomParams(rng, ModelKind::kSingleFirm),
        testing::RandomParams(rng, ModelKind::kTwoFirmRegulated)}) {
    const ContractLqg lqg = AssembleLqg(p);
    for (int k = 0; k < 20; ++k) {
      const Eigen::Vector2d x(u(rng), u(rng));
      const StateVector s{x[0], x[1]};
      const double lq = 0.5 * x.dot(lqg.q * x) + lqg.l.dot(x) + lqg.q0;
      EXPECT_NEAR(Revenue(p, s) - SocialCost(p, s), lq, 1e-12);
    }
  }
}

}  // namespace
}  // namespace regprod
