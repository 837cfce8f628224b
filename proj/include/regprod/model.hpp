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

#include <array>
#include <map>
#include <string>
#include <string_view>

namespace regprod {

// The three production models:
//  * kSingleFirm: one agent runs a polluting (x1) and a clean (x2) technology
//    and is paid by a principal.
//  * kTwoFirmRegulated: two agents, each paid by a common regulator.
//  * kTwoFirmNash: two competing firms, no regulator.
enum class ModelKind { kSingleFirm, kTwoFirmRegulated, kTwoFirmNash };

std::string_view ModelKindName(ModelKind kind);
ModelKind ParseModelKind(std::string_view name);

/// Raw parameter record, keyed by field name (`gamma1`, `eta_p`, ...).
using ParamRecord = std::map<std::string, double>;

/// Production or emission levels of the two technologies (or firms).
struct StateVector {
  double x1 = 0.0;
  double x2 = 0.0;
};

/// Validated, immutable model constants. Only `ValidateParams` builds one.
///
/// Firm indices are 1-based throughout the library. For kSingleFirm,
/// `eta(i)` returns the agent's risk aversion for both indices.
class ModelParams {
 public:
  ModelKind kind() const { return kind_; }
  bool has_principal() const { return kind_ != ModelKind::kTwoFirmNash; }
  bool literal_signs() const { return literal_signs_; }

  double gamma(int firm) const;
  double sigma(int firm) const;
  double eta(int firm) const;
  double eta_agent() const;      // kSingleFirm only.
  double eta_principal() const;  // principal kinds only.

  double p0() const { return p_[0]; }
  double p1() const { return p_[1]; }
  double p2() const { return p_[2]; }
  double kappa() const;
  double lambda() const;
  double delta() const;
  double horizon() const { return horizon_; }

  /// Copy with a different horizon (validated).
  ModelParams WithHorizon(double horizon) const;

  /// Field-by-field view, suitable for re-validation or serialization.
  ParamRecord ToRecord() const;

 private:
  friend ModelParams ValidateParams(ModelKind, const ParamRecord&, bool);
  ModelParams() = default;

  ModelKind kind_ = ModelKind::kTwoFirmNash;
  bool literal_signs_ = false;
  std::array<double, 2> gamma_{};
  std::array<double, 2> sigma_{};
  std::array<double, 2> eta_{};
  double eta_p_ = 0.0;
  std::array<double, 3> p_{};
  double kappa_ = 0.0;
  double lambda_ = 0.0;
  double delta_ = 0.0;
  double horizon_ = 0.0;
};

/// Builds ModelParams from a raw record. Required fields per kind:
///   all:               gamma1 gamma2 sigma1 sigma2 p0 p1 p2 horizon
///   kSingleFirm:       eta_a eta_p kappa lambda delta
///   kTwoFirmRegulated: eta1 eta2 eta_p kappa lambda delta
///   kTwoFirmNash:      eta1 eta2
/// Throws Error(kMissingField | kUnexpectedField | kOutOfRange) naming the
/// offending field.
///
/// `literal_signs` selects the equations exactly as first printed: the
/// single-firm revenue `(p0 - p1 x1 + p2 x2)(x1 + x2)` with social cost weight
/// lambda (not lambda/2), and the Nash/best-response ODE systems with their
/// printed payoff terms. The default uses the conventions consistent with the
/// stated objectives.
ModelParams ValidateParams(ModelKind kind, const ParamRecord& raw,
                           bool literal_signs = false);

enum class RevenueScope { kTotal, kFirm1, kFirm2 };

/// p0 - p1 x1 - p2 x2.
double Price(const ModelParams& params, const StateVector& x);

/// Revenue f: kTotal is P(x)(x1 + x2), kFirm{i} is P(x) x_i.
double Revenue(const ModelParams& params, const StateVector& x,
               RevenueScope scope = RevenueScope::kTotal);

/// Regulator's social cost g. Penalizes x1 for kSingleFirm, x2 for
/// kTwoFirmRegulated. Throws kWrongKind for kTwoFirmNash.
double SocialCost(const ModelParams& params, const StateVector& x);

/// a^2 / (2 gamma_firm).
double EffortCost(const ModelParams& params, double effort, int firm);

}  // namespace regprod
