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

// Parameter sets shared by the tests.

#pragma once

#include <random>

#include "regprod/model.hpp"

namespace regprod::testing {

inline ParamRecord GameRecord() {
  return {{"gamma1", 1.5}, {"gamma2", 1.0}, {"sigma1", 0.2}, {"sigma2", 0.3},
          {"p0", 1.0},     {"p1", 0.6},     {"p2", 0.4},     {"eta1", 1.0},
          {"eta2", 1.0},   {"horizon", 1.0}};
}

inline ParamRecord TwoFirmRecord() {
  ParamRecord r = GameRecord();
  r["eta_p"] = 1.0;
  r["kappa"] = 1.0;
  r["lambda"] = 1.0;
  r["delta"] = 1.0;
  return r;
}

inline ParamRecord SingleFirmRecord() {
  ParamRecord r = TwoFirmRecord();
  r.erase("eta1");
  r.erase("eta2");
  r["eta_a"] = 1.0;
  return r;
}

inline ModelParams GameFixture(bool literal = false) {
  return ValidateParams(ModelKind::kTwoFirmNash, GameRecord(), literal);
}
inline ModelParams TwoFirmFixture(bool literal = false) {
  return ValidateParams(ModelKind::kTwoFirmRegulated, TwoFirmRecord(), literal);
}
inline ModelParams SingleFirmFixture(bool literal = false) {
  return ValidateParams(ModelKind::kSingleFirm, SingleFirmRecord(), literal);
}

/// Prices, costs and the social objective switched off; sigma tiny.
inline ModelParams ZeroEconomy(ModelKind kind) {
  ParamRecord r = kind == ModelKind::kSingleFirm   ? SingleFirmRecord()
                  : kind == ModelKind::kTwoFirmNash ? GameRecord()
                                                    : TwoFirmRecord();
  for (const char* k : {"p0", "p1", "p2"}) r[k] = 0.0;
  if (kind != ModelKind::kTwoFirmNash) {
    r["kappa"] = 0.0;
    r["lambda"] = 0.0;
    r["delta"] = 0.0;
  }
  return ValidateParams(kind, r);
}

/// Positive parameters on moderate scales.
inline ModelParams RandomParams(std::mt19937_64& rng, ModelKind kind) {
  std::uniform_real_distribution<double> u(0.2, 2.0);
  std::uniform_real_distribution<double> s(0.05, 0.8);
  ParamRecord r = {{"gamma1", u(rng)}, {"gamma2", u(rng)}, {"sigma1", s(rng)},
                   {"sigma2", s(rng)}, {"p0", u(rng)},     {"p1", u(rng)},
                   {"p2", u(rng)},     {"horizon", 1.0}};
  if (kind == ModelKind::kSingleFirm) {
    r["eta_a"] = u(rng);
  } else {
    r["eta1"] = u(rng);
    r["eta2"] = u(rng);
  }
  if (kind != ModelKind::kTwoFirmNash) {
    r["eta_p"] = u(rng);
    r["kappa"] = u(rng);
    r["lambda"] = u(rng);
    r["delta"] = u(rng);
  }
  return ValidateParams(kind, r);
}

}  // namespace regprod::testing
