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

#include "regprod/scenario.hpp"

#include <cmath>
#include <filesystem>
#include <set>

#include "json.hpp"
#include "regprod/io.hpp"
#include "regprod/riccati.hpp"

namespace regprod {

using nlohmann::json;

namespace {

constexpr double kResidualGate = 1e-6;

const std::vector<std::string> kPrincipalHeader = {"t",  "A11", "A12", "A22",
                                                   "B1", "B2",  "C"};
const std::vector<std::string> kNashHeader = {"t",  "A",  "B",  "C",  "D",  "E",  "F",
                                              "At", "Bt", "Ct", "Dt", "Et", "Ft"};
const std::vector<std::string> kBestResponseHeader = {"t", "A", "B", "C", "D", "E", "F"};

[[noreturn]] void Invalid(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, "'" + field + "' " + what, field);
}

void CheckKeys(const json& obj, const std::string& where,
               const std::set<std::string>& allowed) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) {
      const std::string field = where.empty() ? key : where + "." + key;
      throw Error(ErrorCode::kUnexpectedField, "unknown config field '" + field + "'",
                  field);
    }
  }
}

const json* Section(const json& root, const char* name) {
  auto it = root.find(name);
  if (it == root.end()) return nullptr;
  if (!it->is_object()) Invalid(name, "must be an object");
  return &*it;
}

double Number(const json& v, const std::string& field) {
  if (!v.is_number()) Invalid(field, "must be a number");
  return v.get<double>();
}

std::uint64_t Unsigned(const json& v, const std::string& field) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    Invalid(field, "must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

bool Bool(const json& v, const std::string& field) {
  if (!v.is_boolean()) Invalid(field, "must be true or false");
  return v.get<bool>();
}

std::vector<double> Numbers(const json& v, const std::string& field) {
  if (!v.is_array()) Invalid(field, "must be an array of numbers");
  std::vector<double> out;
  for (const auto& e : v) out.push_back(Number(e, field));
  return out;
}

ModelParams ParseModelObject(const json& m, bool literal_signs,
                             std::optional<ModelKind> default_kind) {
  if (!m.is_object()) Invalid("model", "must be an object");
  std::optional<ModelKind> kind;
  ParamRecord rec;
  for (const auto& [key, value] : m.items()) {
    if (key == "kind") {
      if (!value.is_string()) Invalid("kind", "must be a string");
      kind = ParseModelKind(value.get<std::string>());
    } else {
      rec[key] = Number(value, key);
    }
  }
  if (kind && default_kind && *kind != *default_kind) {
    throw Error(ErrorCode::kConfigMismatch,
                "model kind '" + std::string(ModelKindName(*kind)) +
                    "' does not match scenario model '" +
                    std::string(ModelKindName(*default_kind)) + "'",
                "kind");
  }
  if (!kind) kind = default_kind;
  if (!kind) throw Error(ErrorCode::kMissingField, "missing field 'kind'", "kind");
  return ValidateParams(*kind, rec, literal_signs);
}

std::optional<ModelKind> ImpliedKind(Scenario s) {
  switch (s) {
    case Scenario::kSingleFirm: return ModelKind::kSingleFirm;
    case Scenario::kTwoFirm: return ModelKind::kTwoFirmRegulated;
    case Scenario::kNash:
    case Scenario::kBestResponse: return ModelKind::kTwoFirmNash;
    case Scenario::kVerify:
    case Scenario::kSimulate: break;
  }
  return std::nullopt;
}

json ModelJson(const ModelParams& p) {
  json params = json::object();
  for (const auto& [k, v] : p.ToRecord()) params[k] = v;
  return {{"kind", ModelKindName(p.kind())},
          {"literal_signs", p.literal_signs()},
          {"params", params}};
}

json ReportJson(const ResidualReport& r) {
  json slices = json::array();
  for (std::size_t s = 0; s < r.slice_times.size(); ++s) {
    slices.push_back({{"t", r.slice_times[s]}, {"max", r.slice_max[s]}});
  }
  return {{"max", r.max_abs},
          {"argmax", {{"t", r.t_at_max}, {"x1", r.x1_at_max}, {"x2", r.x2_at_max}}},
          {"grid",
           {{"lo", r.grid.lo},
            {"hi", r.grid.hi},
            {"points", r.grid.points},
            {"slices", r.grid.slices},
            {"description", r.grid.Describe()}}},
          {"slices", slices},
          {"gate", kResidualGate},
          {"within_gate", r.max_abs <= kResidualGate}};
}

json EstimateJson(const UtilityEstimate& e, double dt) {
  return {{"label", e.label}, {"mean", e.mean},   {"std_err", e.std_err},
          {"n_paths", e.n_paths}, {"dt", dt}, {"seed", e.seed}};
}

json RowJson(const std::vector<std::string>& header, std::span<const double> row) {
  json out = json::object();
  for (std::size_t j = 0; j < row.size(); ++j) out[header[j + 1]] = row[j];
  return out;
}

struct Output {
  std::filesystem::path dir;
  ScenarioResult result;

  explicit Output(const std::string& d) : dir(d) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
      throw Error(ErrorCode::kIo, "cannot create output directory " + d, "output_dir");
    }
    result.output_dir = d;
  }
  std::string Path(const std::string& name) {
    const std::string p = (dir / name).string();
    result.files.push_back(p);
    return p;
  }
  void Json(const std::string& name, const json& j) {
    WriteTextFile(Path(name), j.dump(2) + "\n");
  }
};

json BaseSummary(Scenario s, const RunConfig& cfg) {
  return {{"scenario", ScenarioName(s)},
          {"model", ModelJson(cfg.params)},
          {"n_nodes", cfg.n_nodes}};
}

ScenarioResult RunPrincipalSolve(Scenario s, const RunConfig& cfg) {
  const QuadraticValueFn v = SolvePrincipal(cfg.params, cfg.n_nodes);
  Output out(cfg.output_dir);
  EmitCsv(v.coefficients(), kPrincipalHeader, out.Path("value_coeffs.csv"));
  const StateVector x0 = cfg.sim.x0;
  const auto [value, grad] = ValueAndGradient(v, 0.0, x0);
  const auto rates = RatesToVector(OptimalRates(cfg.params, grad));
  json summary = BaseSummary(s, cfg);
  summary["coefficients_t0"] = RowJson(kPrincipalHeader, v.coefficients().row(0));
  summary["x0"] = {x0.x1, x0.x2};
  summary["value_t0_x0"] = value;
  summary["rates_t0_x0"] = rates;
  summary["coupling_m"] = {GradientCoupling(cfg.params)[0], GradientCoupling(cfg.params)[1]};
  out.Json("summary.json", summary);
  return out.result;
}

ScenarioResult RunNashSolve(Scenario s, const RunConfig& cfg) {
  const NashCoeffs nc = SolveNash(cfg.params, cfg.n_nodes);
  Output out(cfg.output_dir);
  EmitCsv(*nc.coeffs, kNashHeader, out.Path("nash_coeffs.csv"));
  const auto row = nc.coeffs->row(0);
  const auto [s1, s2] = FeedbackStrategies(nc, cfg.params);
  const StateVector x0 = cfg.sim.x0;
  json summary = BaseSummary(s, cfg);
  summary["coefficients_t0"] = RowJson(kNashHeader, row);
  summary["ode_residual"] = OdeResidual(nc, cfg.params);
  summary["x0"] = {x0.x1, x0.x2};
  json values = json::object();
  for (int firm : {1, 2}) {
    const double w = WValue(row, firm, x0.x1, x0.x2);
    const std::string tag = std::to_string(firm);
    values["W" + tag] = w;
    values["V" + tag] = -std::exp(cfg.params.eta(firm) * w);
  }
  summary["values_t0_x0"] = values;
  summary["strategies_t0_x0"] = {{"a1", s1(0.0, x0.x1, x0.x2)}, {"a2", s2(0.0, x0.x1, x0.x2)}};
  out.Json("summary.json", summary);
  return out.result;
}

ScenarioResult RunBestResponse(const RunConfig& cfg) {
  if (!cfg.opponent) {
    throw Error(ErrorCode::kMissingField, "best-response needs an 'opponent' section",
                "opponent");
  }
  const OpponentSpec& opp = *cfg.opponent;
  Output out(cfg.output_dir);
  json runs = json::array();
  for (std::size_t r = 0; r < opp.strategies.size(); ++r) {
    const BestResponseCoeffs br =
        BestResponse(cfg.params, opp.responder, opp.strategies[r], cfg.n_nodes);
    const std::string name = "best_response_" + std::to_string(r) + ".csv";
    EmitCsv(br.coeffs, kBestResponseHeader, out.Path(name));
    json run = {{"file", name},
                {"coefficients_t0", RowJson(kBestResponseHeader, br.coeffs.row(0))},
                {"ode_residual", OdeResidual(br, cfg.params)}};
    if (!opp.constants.empty()) run["opponent_constant"] = opp.constants[r];
    runs.push_back(run);
  }
  json summary = BaseSummary(Scenario::kBestResponse, cfg);
  summary["responder"] = opp.responder;
  summary["runs"] = runs;
  out.Json("summary.json", summary);
  return out.result;
}

json FiniteDiffJson(const Evaluable& e, double t, const Eigen::Vector2d& x) {
  const DerivativeErrors d = FiniteDiffCheck(e, t, x);
  return {{"t", t}, {"x", {x[0], x[1]}}, {"h", 1e-5},
          {"gradient", d.gradient}, {"hessian", d.hessian}, {"time", d.time},
          {"worst", d.worst()}};
}

ScenarioResult RunVerify(const RunConfig& cfg) {
  const ModelParams& p = cfg.params;
  json residuals;
  json summary = BaseSummary(Scenario::kVerify, cfg);
  // Finite differences at the middle of the central cell, well inside it.
  const TimeGrid tg(p.horizon(), cfg.n_nodes);
  const std::size_t mid = (cfg.n_nodes - 1) / 2;
  const double t_mid = 0.5 * (tg.t(mid) + tg.t(mid + 1));
  const Eigen::Vector2d x_fd(1.0, -1.0);
  if (p.has_principal()) {
    const QuadraticValueFn v = SolvePrincipal(p, cfg.n_nodes);
    const ResidualReport rep = HjbResidualPrincipal(v, p, cfg.grid);
    double worst_gap = 0.0;
    std::size_t draws = 0;
    for (std::size_t s = 0; s < rep.slice_times.size(); ++s) {
      for (double x1 : {cfg.grid.lo, 0.5 * (cfg.grid.lo + cfg.grid.hi), cfg.grid.hi}) {
        for (double x2 : {cfg.grid.lo, 0.5 * (cfg.grid.lo + cfg.grid.hi), cfg.grid.hi}) {
          const auto grad = ValueAndGradient(v, rep.slice_times[s], {x1, x2}).second;
          worst_gap = std::max(worst_gap, SupConsistency(p, grad));
          ++draws;
        }
      }
    }
    residuals["hjb_principal"] = ReportJson(rep);
    residuals["sup_consistency"] = {{"draws", draws}, {"max_gap", worst_gap},
                                    {"gate", kResidualGate}};
    residuals["finite_difference"] = FiniteDiffJson(MakeEvaluable(v, p), t_mid, x_fd);
    summary["max_residual"] = rep.max_abs;
    summary["within_gate"] = rep.max_abs <= kResidualGate && worst_gap <= kResidualGate;
  } else {
    const NashCoeffs nc = SolveNash(p, cfg.n_nodes);
    const auto [r1, r2] = HjbResidualNash(nc, p, cfg.grid);
    const double ode = OdeResidual(nc, p);
    residuals["hjb_firm1"] = ReportJson(r1);
    residuals["hjb_firm2"] = ReportJson(r2);
    residuals["ode_residual"] = {{"max", ode}, {"gate", kResidualGate}};
    residuals["finite_difference"] = {
        {"firm1", FiniteDiffJson(MakeEvaluable(nc, p, 1), t_mid, x_fd)},
        {"firm2", FiniteDiffJson(MakeEvaluable(nc, p, 2), t_mid, x_fd)}};
    summary["max_residual"] = std::max({r1.max_abs, r2.max_abs, ode});
    summary["within_gate"] = summary["max_residual"].get<double>() <= kResidualGate;
  }
  Output out(cfg.output_dir);
  out.Json("residuals.json", residuals);
  out.Json("summary.json", summary);
  return out.result;
}

ScenarioResult RunSimulate(const RunConfig& cfg) {
  const ModelParams& p = cfg.params;
  json summary = BaseSummary(Scenario::kSimulate, cfg);
  summary["dt"] = cfg.sim.dt;
  summary["n_paths"] = cfg.sim.n_paths;
  summary["seed"] = cfg.sim.seed;
  summary["antithetic"] = cfg.sim.antithetic;
  summary["x0"] = {cfg.sim.x0.x1, cfg.sim.x0.x2};
  json estimates = json::array();
  CsvTable paths;
  if (p.has_principal()) {
    const QuadraticValueFn v = SolvePrincipal(p, cfg.n_nodes);
    const PrincipalSimResult res = SimulatePrincipal(p, v, cfg.sim);
    const std::size_t n_agents = res.agents.size();
    std::vector<double> y0 = cfg.sim.y0.empty() ? std::vector<double>(n_agents, 0.0)
                                                : cfg.sim.y0;
    double y_sum = 0.0;
    for (double y : y0) y_sum += y;
    const double v0 = ValueAndGradient(v, 0.0, cfg.sim.x0).first;
    json e = EstimateJson(res.principal, cfg.sim.dt);
    e["closed_form"] = -std::exp(-p.eta_principal() * (v0 - y_sum));
    estimates.push_back(e);
    for (std::size_t i = 0; i < n_agents; ++i) {
      const double eta = p.kind() == ModelKind::kSingleFirm ? p.eta_agent() : p.eta(i + 1);
      json a = EstimateJson(res.agents[i], cfg.sim.dt);
      a["closed_form"] = -std::exp(-eta * y0[i]);
      estimates.push_back(a);
    }
    summary["y0"] = y0;
    if (cfg.dump_paths) {
      paths.header = {"path", "principal"};
      for (const auto& a : res.agents) paths.header.push_back(a.label);
      for (std::size_t k = 0; k < cfg.sim.n_paths; ++k) {
        std::vector<double> row{static_cast<double>(k), res.principal_payoffs[k]};
        for (const auto& ap : res.agent_payoffs) row.push_back(ap[k]);
        paths.rows.push_back(std::move(row));
      }
    }
  } else {
    const NashCoeffs nc = SolveNash(p, cfg.n_nodes);
    const auto strategies = FeedbackStrategies(nc, p);
    const NashSimResult base = SimulateNash(p, strategies, cfg.sim);
    const auto row = nc.coeffs->row(0);
    for (int i = 0; i < 2; ++i) {
      json e = EstimateJson(base.firms[i], cfg.sim.dt);
      e["value_function"] =
          -std::exp(p.eta(i + 1) * WValue(row, i + 1, cfg.sim.x0.x1, cfg.sim.x0.x2));
      estimates.push_back(e);
    }
    if (cfg.deviation) {
      const Deviation d = *cfg.deviation;
      const NashSimResult dev = SimulateNash(p, strategies, cfg.sim, d);
      const int i = d.firm - 1;
      UtilityEstimate diff = PairedDifference(base.payoffs[i], dev.payoffs[i],
                                              p.eta(d.firm), cfg.sim.antithetic);
      diff.label = "firm" + std::to_string(d.firm) + "_deviation_gain";
      diff.seed = cfg.sim.seed;
      json dj = EstimateJson(diff, cfg.sim.dt);
      dj["scale"] = d.scale;
      dj["shift"] = d.shift;
      summary["deviation"] = dj;
    }
    if (cfg.dump_paths) {
      paths.header = {"path", "firm1", "firm2"};
      for (std::size_t k = 0; k < cfg.sim.n_paths; ++k) {
        paths.rows.push_back({static_cast<double>(k), base.payoffs[0][k], base.payoffs[1][k]});
      }
    }
  }
  summary["estimates"] = estimates;
  Output out(cfg.output_dir);
  if (cfg.dump_paths) EmitCsv(paths, out.Path("paths.csv"));
  out.Json("summary.json", summary);
  return out.result;
}

}  // namespace

std::string_view ScenarioName(Scenario s) {
  switch (s) {
    case Scenario::kSingleFirm: return "single-firm";
    case Scenario::kTwoFirm: return "two-firm";
    case Scenario::kNash: return "nash";
    case Scenario::kBestResponse: return "best-response";
    case Scenario::kVerify: return "verify";
    case Scenario::kSimulate: return "simulate";
  }
  return "unknown";
}

Scenario ParseScenario(std::string_view name) {
  for (Scenario s : {Scenario::kSingleFirm, Scenario::kTwoFirm, Scenario::kNash,
                     Scenario::kBestResponse, Scenario::kVerify, Scenario::kSimulate}) {
    if (ScenarioName(s) == name) return s;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown scenario '" + std::string(name) + "'",
              "scenario");
}

ModelParams ParseModel(const std::string& json_text, bool literal_signs,
                       std::optional<ModelKind> default_kind) {
  json m;
  try {
    m = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("malformed JSON: ") + e.what(),
                "model");
  }
  return ParseModelObject(m, literal_signs, default_kind);
}

RunConfig ParseRunConfig(Scenario scenario, const std::string& json_text,
                         const ScenarioOptions& options) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("malformed JSON: ") + e.what(),
                "config");
  }
  if (!root.is_object()) Invalid("config", "must be a JSON object");
  CheckKeys(root, "", {"model", "numerics", "simulation", "opponent", "output_dir"});
  const json* model = Section(root, "model");
  if (!model) throw Error(ErrorCode::kMissingField, "missing section 'model'", "model");

  RunConfig cfg{ParseModelObject(*model, options.literal_signs, ImpliedKind(scenario))};

  if (const json* num = Section(root, "numerics")) {
    CheckKeys(*num, "numerics",
              {"n_nodes", "dt", "n_paths", "seed", "antithetic", "threads", "grid_lo",
               "grid_hi", "grid_points", "time_slices"});
    for (const auto& [key, v] : num->items()) {
      const std::string f = "numerics." + key;
      if (key == "n_nodes") cfg.n_nodes = Unsigned(v, f);
      else if (key == "dt") cfg.sim.dt = Number(v, f);
      else if (key == "n_paths") cfg.sim.n_paths = Unsigned(v, f);
      else if (key == "seed") cfg.sim.seed = Unsigned(v, f);
      else if (key == "antithetic") cfg.sim.antithetic = Bool(v, f);
      else if (key == "threads") cfg.sim.threads = static_cast<unsigned>(Unsigned(v, f));
      else if (key == "grid_lo") cfg.grid.lo = Number(v, f);
      else if (key == "grid_hi") cfg.grid.hi = Number(v, f);
      else if (key == "grid_points") cfg.grid.points = static_cast<int>(Unsigned(v, f));
      else if (key == "time_slices") cfg.grid.slices = static_cast<int>(Unsigned(v, f));
    }
  }
  if (cfg.n_nodes < 5 || cfg.n_nodes > 10'000'000) {
    throw Error(ErrorCode::kOutOfRange, "'numerics.n_nodes' must lie in [5, 1e7]",
                "numerics.n_nodes");
  }
  if (!(cfg.grid.hi > cfg.grid.lo) || cfg.grid.points < 2 || cfg.grid.slices < 2) {
    throw Error(ErrorCode::kOutOfRange,
                "verification grid needs grid_hi > grid_lo, grid_points >= 2 and "
                "time_slices >= 2",
                "numerics.grid_points");
  }

  if (const json* sim = Section(root, "simulation")) {
    CheckKeys(*sim, "simulation", {"x0", "y0", "deviation", "dump_paths"});
    if (sim->contains("x0")) {
      const auto x0 = Numbers(sim->at("x0"), "simulation.x0");
      if (x0.size() != 2) Invalid("simulation.x0", "must have two entries");
      cfg.sim.x0 = {x0[0], x0[1]};
    }
    if (sim->contains("y0")) cfg.sim.y0 = Numbers(sim->at("y0"), "simulation.y0");
    if (sim->contains("dump_paths")) {
      cfg.dump_paths = Bool(sim->at("dump_paths"), "simulation.dump_paths");
    }
    if (sim->contains("deviation")) {
      const json& d = sim->at("deviation");
      if (!d.is_object()) Invalid("simulation.deviation", "must be an object");
      CheckKeys(d, "simulation.deviation", {"firm", "scale", "shift"});
      Deviation dev;
      if (d.contains("firm")) dev.firm = static_cast<int>(Unsigned(d["firm"], "simulation.deviation.firm"));
      if (d.contains("scale")) dev.scale = Number(d["scale"], "simulation.deviation.scale");
      if (d.contains("shift")) dev.shift = Number(d["shift"], "simulation.deviation.shift");
      if (dev.firm != 1 && dev.firm != 2) {
        throw Error(ErrorCode::kOutOfRange, "'simulation.deviation.firm' must be 1 or 2",
                    "simulation.deviation.firm");
      }
      cfg.deviation = dev;
    }
  }

  if (const json* opp = Section(root, "opponent")) {
    CheckKeys(*opp, "opponent", {"responder", "constant", "times", "values"});
    OpponentSpec spec;
    if (opp->contains("responder")) {
      spec.responder = static_cast<int>(Unsigned(opp->at("responder"), "opponent.responder"));
    }
    if (spec.responder != 1 && spec.responder != 2) {
      throw Error(ErrorCode::kOutOfRange, "'opponent.responder' must be 1 or 2",
                  "opponent.responder");
    }
    const double horizon = cfg.params.horizon();
    if (opp->contains("constant")) {
      const json& c = opp->at("constant");
      spec.constants = c.is_array() ? Numbers(c, "opponent.constant")
                                    : std::vector<double>{Number(c, "opponent.constant")};
      for (double a : spec.constants) {
        spec.strategies.push_back(SampledFunction::Constant(a, horizon));
      }
    }
    if (opp->contains("times") || opp->contains("values")) {
      if (!opp->contains("times") || !opp->contains("values")) {
        throw Error(ErrorCode::kMissingField, "opponent needs both 'times' and 'values'",
                    "opponent.times");
      }
      auto times = Numbers(opp->at("times"), "opponent.times");
      auto values = Numbers(opp->at("values"), "opponent.values");
      if (times.empty() || times.front() > 0.0 || times.back() < horizon) {
        throw Error(ErrorCode::kOutOfRange, "'opponent.times' must cover [0, horizon]",
                    "opponent.times");
      }
      spec.strategies.emplace_back(std::move(times), std::move(values));
    }
    if (spec.strategies.empty()) {
      throw Error(ErrorCode::kMissingField,
                  "opponent needs 'constant' or 'times' and 'values'", "opponent.constant");
    }
    cfg.opponent = std::move(spec);
  }

  if (root.contains("output_dir")) {
    if (!root["output_dir"].is_string()) Invalid("output_dir", "must be a string");
    cfg.output_dir = root["output_dir"].get<std::string>();
  }
  if (options.out_dir) cfg.output_dir = *options.out_dir;
  if (options.seed) cfg.sim.seed = *options.seed;

  if (scenario == Scenario::kSimulate) {
    StepCount(cfg.sim, cfg.params.horizon());
    const std::size_t agents = cfg.params.kind() == ModelKind::kSingleFirm ? 1
                               : cfg.params.kind() == ModelKind::kTwoFirmRegulated ? 2
                                                                                   : 0;
    if (!cfg.sim.y0.empty() && cfg.sim.y0.size() != agents) {
      throw Error(ErrorCode::kConfigMismatch,
                  "'simulation.y0' needs " + std::to_string(agents) +
                      " entries for model kind " +
                      std::string(ModelKindName(cfg.params.kind())),
                  "simulation.y0");
    }
    if (cfg.deviation && cfg.params.kind() != ModelKind::kTwoFirmNash) {
      throw Error(ErrorCode::kConfigMismatch,
                  "'simulation.deviation' applies to model kind nash only",
                  "simulation.deviation");
    }
  }
  if (scenario == Scenario::kBestResponse && !cfg.opponent) {
    throw Error(ErrorCode::kMissingField, "best-response needs an 'opponent' section",
                "opponent");
  }
  return cfg;
}

ScenarioResult RunScenario(Scenario scenario, const RunConfig& config) {
  switch (scenario) {
    case Scenario::kSingleFirm:
    case Scenario::kTwoFirm: return RunPrincipalSolve(scenario, config);
    case Scenario::kNash: return RunNashSolve(scenario, config);
    case Scenario::kBestResponse: return RunBestResponse(config);
    case Scenario::kVerify: return RunVerify(config);
    case Scenario::kSimulate: return RunSimulate(config);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown scenario", "scenario");
}

ScenarioResult RunScenario(Scenario scenario, const std::string& json_text,
                           const ScenarioOptions& options) {
  return RunScenario(scenario, ParseRunConfig(scenario, json_text, options));
}

std::string ErrorJson(const Error& e) {
  json body = {{"code", ErrorCodeName(e.code())},
               {"message", e.what()},
               {"field", e.field()}};
  if (e.code() == ErrorCode::kBlowUp || e.code() == ErrorCode::kNonFinitePath) {
    body["time"] = e.time();
  }
  return json{{"error", body}}.dump();
}

std::string ErrorJson(std::string_view code, std::string_view message) {
  return json{{"error", {{"code", code}, {"message", message}, {"field", ""}}}}.dump();
}

std::string ResidualReportJson(const ResidualReport& report) {
  return ReportJson(report).dump(2);
}

}  // namespace regprod
