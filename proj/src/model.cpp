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

#include "regprod/model.hpp"

#include <cmath>
#include <set>
#include <vector>

#include "regprod/error.hpp"

namespace regprod {

std::string_view ModelKindName(ModelKind kind) {
  switch (kind) {
    case ModelKind::kSingleFirm: return "single-firm";
    case ModelKind::kTwoFirmRegulated: return "two-firm";
    case ModelKind::kTwoFirmNash: return "nash";
  }
  return "unknown";
}

ModelKind ParseModelKind(std::string_view name) {
  if (name == "single-firm") return ModelKind::kSingleFirm;
  if (name == "two-firm") return ModelKind::kTwoFirmRegulated;
  if (name == "nash") return ModelKind::kTwoFirmNash;
  throw Error(ErrorCode::kOutOfRange,
              "unknown model kind '" + std::string(name) +
                  "' (expected single-firm, two-firm or nash)",
              "kind");
}

namespace {

enum class Sign { kPositive, kNonNegative, kAny };

struct FieldSpec {
  const char* name;
  Sign sign;
};

std::vector<FieldSpec> RequiredFields(ModelKind kind) {
  std::vector<FieldSpec> fields = {
      {"gamma1", Sign::kPositive}, {"gamma2", Sign::kPositive},
      {"sigma1", Sign::kPositive}, {"sigma2", Sign::kPositive},
      {"p0", Sign::kNonNegative},  {"p1", Sign::kNonNegative},
      {"p2", Sign::kNonNegative},  {"horizon", Sign::kPositive},
  };
  if (kind == ModelKind::kSingleFirm) {
    fields.push_back({"eta_a", Sign::kPositive});
  } else {
    fields.push_back({"eta1", Sign::kPositive});
    fields.push_back({"eta2", Sign::kPositive});
  }
  if (kind != ModelKind::kTwoFirmNash) {
    fields.push_back({"eta_p", Sign::kPositive});
    fields.push_back({"kappa", Sign::kNonNegative});
    fields.push_back({"lambda", Sign::kNonNegative});
    fields.push_back({"delta", Sign::kAny});
  }
  return fields;
}

[[noreturn]] void ThrowWrongKind(const char* what, ModelKind kind) {
  throw Error(ErrorCode::kWrongKind,
              std::string(what) + " is not defined for model kind " +
                  std::string(ModelKindName(kind)));
}

int CheckFirm(int firm) {
  if (firm != 1 && firm != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "firm index must be 1 or 2, got " + std::to_string(firm));
  }
  return firm - 1;
}

}  // namespace

ModelParams ValidateParams(ModelKind kind, const ParamRecord& raw,
                           bool literal_signs) {
  const auto fields = RequiredFields(kind);
  std::set<std::string> known;
  for (const auto& f : fields) known.insert(f.name);
  for (const auto& [name, value] : raw) {
    if (!known.count(name)) {
      throw Error(ErrorCode::kUnexpectedField,
                  "field '" + name + "' is not a parameter of model kind " +
                      std::string(ModelKindName(kind)),
                  name);
    }
  }
  for (const auto& f : fields) {
    auto it = raw.find(f.name);
    if (it == raw.end()) {
      throw Error(ErrorCode::kMissingField,
                  std::string("missing field '") + f.name + "'", f.name);
    }
    const double v = it->second;
    const bool ok = std::isfinite(v) &&
                    (f.sign == Sign::kAny ||
                     (f.sign == Sign::kPositive && v > 0.0) ||
                     (f.sign == Sign::kNonNegative && v >= 0.0));
    if (!ok) {
      const char* need = f.sign == Sign::kPositive      ? "finite and > 0"
                         : f.sign == Sign::kNonNegative ? "finite and >= 0"
                                                        : "finite";
      throw Error(ErrorCode::kOutOfRange,
                  std::string("field '") + f.name + "' must be " + need, f.name);
    }
  }

  ModelParams p;
  p.kind_ = kind;
  p.literal_signs_ = literal_signs;
  p.gamma_ = {raw.at("gamma1"), raw.at("gamma2")};
  p.sigma_ = {raw.at("sigma1"), raw.at("sigma2")};
  if (kind == ModelKind::kSingleFirm) {
    p.eta_ = {raw.at("eta_a"), raw.at("eta_a")};
  } else {
    p.eta_ = {raw.at("eta1"), raw.at("eta2")};
  }
  p.p_ = {raw.at("p0"), raw.at("p1"), raw.at("p2")};
  p.horizon_ = raw.at("horizon");
  if (kind != ModelKind::kTwoFirmNash) {
    p.eta_p_ = raw.at("eta_p");
    p.kappa_ = raw.at("kappa");
    p.lambda_ = raw.at("lambda");
    p.delta_ = raw.at("delta");
  }
  return p;
}

double ModelParams::gamma(int firm) const { return gamma_[CheckFirm(firm)]; }
double ModelParams::sigma(int firm) const { return sigma_[CheckFirm(firm)]; }
double ModelParams::eta(int firm) const {
  if (kind_ == ModelKind::kSingleFirm) ThrowWrongKind(firm == 1 ? "eta1" : "eta2", kind_);
  return eta_[CheckFirm(firm)];
}

double ModelParams::eta_agent() const {
  if (kind_ != ModelKind::kSingleFirm) ThrowWrongKind("eta_a", kind_);
  return eta_[0];
}

double ModelParams::eta_principal() const {
  if (!has_principal()) ThrowWrongKind("eta_p", kind_);
  return eta_p_;
}

double ModelParams::kappa() const {
  if (!has_principal()) ThrowWrongKind("kappa", kind_);
  return kappa_;
}

double ModelParams::lambda() const {
  if (!has_principal()) ThrowWrongKind("lambda", kind_);
  return lambda_;
}

double ModelParams::delta() const {
  if (!has_principal()) ThrowWrongKind("delta", kind_);
  return delta_;
}

ParamRecord ModelParams::ToRecord() const {
  ParamRecord r = {{"gamma1", gamma_[0]}, {"gamma2", gamma_[1]},
                   {"sigma1", sigma_[0]}, {"sigma2", sigma_[1]},
                   {"p0", p_[0]},         {"p1", p_[1]},
                   {"p2", p_[2]},         {"horizon", horizon_}};
  if (kind_ == ModelKind::kSingleFirm) {
    r["eta_a"] = eta_[0];
  } else {
    r["eta1"] = eta_[0];
    r["eta2"] = eta_[1];
  }
  if (has_principal()) {
    r["eta_p"] = eta_p_;
    r["kappa"] = kappa_;
    r["lambda"] = lambda_;
    r["delta"] = delta_;
  }
  return r;
}

ModelParams ModelParams::WithHorizon(double horizon) const {
  auto r = ToRecord();
  r["horizon"] = horizon;
  return ValidateParams(kind_, r, literal_signs_);
}

double Price(const ModelParams& params, const StateVector& x) {
  return params.p0() - params.p1() * x.x1 - params.p2() * x.x2;
}

double Revenue(const ModelParams& params, const StateVector& x,
               RevenueScope scope) {
  switch (scope) {
    case RevenueScope::kFirm1: return Price(params, x) * x.x1;
    case RevenueScope::kFirm2: return Price(params, x) * x.x2;
    case RevenueScope::kTotal: break;
  }
  if (params.literal_signs() && params.kind() == ModelKind::kSingleFirm) {
    return (params.p0() - params.p1() * x.x1 + params.p2() * x.x2) *
           (x.x1 + x.x2);
  }
  return Price(params, x) * (x.x1 + x.x2);
}

double SocialCost(const ModelParams& params, const StateVector& x) {
  const double dev = x.x1 + x.x2 - params.delta();
  switch (params.kind()) {
    case ModelKind::kSingleFirm: {
      const double w = params.literal_signs() ? 1.0 : 0.5;
      return 0.5 * params.kappa() * x.x1 * x.x1 + w * params.lambda() * dev * dev;
    }
    case ModelKind::kTwoFirmRegulated:
      return 0.5 * params.kappa() * x.x2 * x.x2 +
             0.5 * params.lambda() * dev * dev;
    case ModelKind::kTwoFirmNash:
      break;
  }
  ThrowWrongKind("social cost g", params.kind());
}

double EffortCost(const ModelParams& params, double effort, int firm) {
  return effort * effort / (2.0 * params.gamma(firm));
}

}  // namespace regprod
