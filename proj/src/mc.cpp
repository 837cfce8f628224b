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

#include "regprod/mc.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "regprod/contract.hpp"
#include "regprod/error.hpp"

namespace regprod {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t StreamSeed(std::uint64_t seed, std::uint64_t stream) {
  return SplitMix64(SplitMix64(seed) ^ SplitMix64(stream + 0x632be59bd9b4e019ULL));
}

// Fills `xi` with 2 * n_steps standard normals for one stream.
void DrawIncrements(std::uint64_t seed, std::uint64_t stream, std::vector<double>& xi) {
  std::mt19937_64 gen(StreamSeed(seed, stream));
  std::normal_distribution<double> normal;
  for (double& v : xi) v = normal(gen);
}

struct PathFailure {
  std::size_t path;
  double time;
};

// Runs `run_stream(stream, xi)` for every stream on `threads` workers with
// contiguous stream blocks. A kernel signals a diverging path by returning
// it; the failure with the smallest path index is rethrown.
template <typename Kernel>
void ForEachStream(std::size_t n_streams, std::size_t n_steps, unsigned threads,
                   Kernel&& run_stream) {
  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                  : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n_streams));
  std::vector<std::optional<PathFailure>> failures(workers);
  auto block = [&](unsigned w) {
    const std::size_t lo = n_streams * w / workers;
    const std::size_t hi = n_streams * (w + 1) / workers;
    std::vector<double> xi(2 * n_steps);
    for (std::size_t s = lo; s < hi; ++s) {
      if (auto f = run_stream(s, xi)) {
        failures[w] = f;
        return;
      }
    }
  };
  if (workers <= 1) {
    block(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(block, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& f : failures) {
    if (f) {
      throw Error(ErrorCode::kNonFinitePath,
                  "path " + std::to_string(f->path) + " became non-finite at t = " +
                      std::to_string(f->time),
                  "path", f->time);
    }
  }
}

UtilityEstimate Summarize(std::span<const double> u, bool antithetic_pairs) {
  if (u.empty()) throw Error(ErrorCode::kEmpty, "no samples to estimate from");
  if (antithetic_pairs && u.size() % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "antithetic estimate needs an even number of samples");
  }
  std::vector<double> units;
  if (antithetic_pairs) {
    units.reserve(u.size() / 2);
    for (std::size_t k = 0; k + 1 < u.size(); k += 2) units.push_back(0.5 * (u[k] + u[k + 1]));
  } else {
    units.assign(u.begin(), u.end());
  }
  double sum = 0.0;
  for (double x : units) sum += x;
  const double n = static_cast<double>(units.size());
  const double mean = sum / n;
  double ss = 0.0;
  for (double x : units) ss += (x - mean) * (x - mean);
  UtilityEstimate e;
  e.mean = mean;
  e.std_err = units.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
  e.n_paths = u.size();
  return e;
}

double Utility(double eta, double z) { return -std::exp(-eta * z); }

std::size_t StreamCount(const SimConfig& cfg) {
  return cfg.antithetic ? cfg.n_paths / 2 : cfg.n_paths;
}

}  // namespace

std::size_t StepCount(const SimConfig& cfg, double horizon) {
  if (cfg.n_paths < 2) {
    throw Error(ErrorCode::kInvalidArgument, "n_paths must be at least 2", "n_paths");
  }
  if (cfg.antithetic && cfg.n_paths % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "n_paths must be even with antithetic sampling", "n_paths");
  }
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
    throw Error(ErrorCode::kInvalidArgument, "dt must be positive", "dt");
  }
  if (!std::isfinite(cfg.x0.x1) || !std::isfinite(cfg.x0.x2)) {
    throw Error(ErrorCode::kInvalidArgument, "x0 must be finite", "x0");
  }
  const double ratio = horizon / cfg.dt;
  const double n = std::round(ratio);
  if (n < 1.0 || std::abs(ratio - n) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument,
                "horizon / dt must be an integer, got " + std::to_string(ratio), "dt");
  }
  return static_cast<std::size_t>(n);
}

UtilityEstimate EstimateUtility(std::span<const double> payoffs, double eta,
                                bool antithetic_pairs) {
  std::vector<double> u(payoffs.size());
  for (std::size_t k = 0; k < payoffs.size(); ++k) u[k] = Utility(eta, payoffs[k]);
  return Summarize(u, antithetic_pairs);
}

UtilityEstimate PairedDifference(std::span<const double> base,
                                 std::span<const double> deviated, double eta,
                                 bool antithetic_pairs) {
  if (base.size() != deviated.size()) {
    throw Error(ErrorCode::kInvalidArgument, "paired samples differ in length");
  }
  std::vector<double> d(base.size());
  for (std::size_t k = 0; k < base.size(); ++k) {
    d[k] = Utility(eta, deviated[k]) - Utility(eta, base[k]);
  }
  return Summarize(d, antithetic_pairs);
}

PrincipalSimResult SimulatePrincipal(const ModelParams& params,
                                     const QuadraticValueFn& v,
                                     const SimConfig& cfg) {
  if (!params.has_principal()) {
    throw Error(ErrorCode::kWrongKind, "principal simulation needs a principal model");
  }
  if (v.kind() && *v.kind() != params.kind()) {
    throw Error(ErrorCode::kConfigMismatch,
                "value function was solved for model " +
                    std::string(ModelKindName(*v.kind())) + ", simulation requested " +
                    std::string(ModelKindName(params.kind())),
                "model");
  }
  const double horizon = params.horizon();
  if (std::abs(v.grid().horizon() - horizon) > 1e-12 * std::max(1.0, horizon)) {
    throw Error(ErrorCode::kConfigMismatch,
                "value function horizon differs from the model horizon", "horizon");
  }
  const bool single = params.kind() == ModelKind::kSingleFirm;
  const std::size_t n_agents = single ? 1 : 2;
  std::vector<double> y0 = cfg.y0.empty() ? std::vector<double>(n_agents, 0.0) : cfg.y0;
  if (y0.size() != n_agents) {
    throw Error(ErrorCode::kConfigMismatch,
                "y0 needs " + std::to_string(n_agents) + " entries for this model", "y0");
  }
  const std::size_t n_steps = StepCount(cfg, horizon);
  const double h = horizon / static_cast<double>(n_steps);
  const double sqh = std::sqrt(h);

  // The optimal rates are linear in Dv; column j holds the rates at Dv = e_j.
  const std::size_t n_rates = single ? 2 : 4;
  std::array<std::vector<double>, 2> rate_cols;
  for (int j = 0; j < 2; ++j) {
    rate_cols[j] = RatesToVector(OptimalRates(params, Eigen::Vector2d::Unit(j)));
  }
  std::vector<Eigen::Matrix2d> a_tab(n_steps);
  std::vector<Eigen::Vector2d> b_tab(n_steps);
  for (std::size_t k = 0; k < n_steps; ++k) {
    double c;
    v.CoefficientsAt(static_cast<double>(k) * h, a_tab[k], b_tab[k], c);
  }

  const double g1 = params.gamma(1), g2 = params.gamma(2);
  const double s1 = params.sigma(1), s2 = params.sigma(2);
  const std::array<double, 2> eta_agent =
      single ? std::array<double, 2>{params.eta_agent(), 0.0}
             : std::array<double, 2>{params.eta(1), params.eta(2)};

  PrincipalSimResult out;
  out.principal_payoffs.assign(cfg.n_paths, 0.0);
  out.agent_payoffs.assign(n_agents, std::vector<double>(cfg.n_paths, 0.0));

  auto run_path = [&](std::size_t path, const std::vector<double>& xi,
                      double sign) -> std::optional<PathFailure> {
    double x1 = cfg.x0.x1, x2 = cfg.x0.x2;
    std::array<double, 2> y{y0[0], n_agents > 1 ? y0[1] : 0.0};
    std::array<double, 2> net{0.0, 0.0};  // int (f_i - c_i) dt
    double social = 0.0;
    std::array<double, 4> z{};
    for (std::size_t k = 0; k < n_steps; ++k) {
      const Eigen::Vector2d grad = a_tab[k] * Eigen::Vector2d(x1, x2) + b_tab[k];
      for (std::size_t r = 0; r < n_rates; ++r) {
        z[r] = rate_cols[0][r] * grad[0] + rate_cols[1][r] * grad[1];
      }
      const double dw1 = sign * sqh * xi[2 * k];
      const double dw2 = sign * sqh * xi[2 * k + 1];
      const StateVector x{x1, x2};
      // exposure[i] = agent i's payment sensitivity to (dW1, dW2) / sigma.
      std::array<std::array<double, 2>, 2> exposure;
      double a1, a2;
      std::array<double, 2> f, c;
      if (single) {
        a1 = g1 * z[0];
        a2 = g2 * z[1];
        exposure[0] = {z[0], z[1]};
        f[0] = Revenue(params, x);
        c[0] = EffortCost(params, a1, 1) + EffortCost(params, a2, 2);
      } else {
        a1 = g1 * z[0];
        a2 = g2 * z[3];
        exposure[0] = {z[0], z[1]};
        exposure[1] = {z[2], z[3]};
        f[0] = Revenue(params, x, RevenueScope::kFirm1);
        f[1] = Revenue(params, x, RevenueScope::kFirm2);
        c[0] = EffortCost(params, a1, 1);
        c[1] = EffortCost(params, a2, 2);
      }
      for (std::size_t i = 0; i < n_agents; ++i) {
        const double e1 = exposure[i][0], e2 = exposure[i][1];
        const double premium = 0.5 * eta_agent[i] * (s1 * s1 * e1 * e1 + s2 * s2 * e2 * e2);
        y[i] += (c[i] - f[i] + premium) * h + e1 * s1 * dw1 + e2 * s2 * dw2;
        net[i] += (f[i] - c[i]) * h;
      }
      social += SocialCost(params, x) * h;
      x1 += a1 * h + s1 * dw1;
      x2 += a2 * h + s2 * dw2;
      if (!std::isfinite(x1) || !std::isfinite(x2) || !std::isfinite(y[0]) ||
          !std::isfinite(y[1]) || !std::isfinite(social)) {
        return PathFailure{path, static_cast<double>(k + 1) * h};
      }
    }
    double paid = 0.0;
    for (std::size_t i = 0; i < n_agents; ++i) {
      paid += y[i];
      out.agent_payoffs[i][path] = y[i] + net[i];
    }
    out.principal_payoffs[path] = -paid - social;
    return std::nullopt;
  };

  ForEachStream(StreamCount(cfg), n_steps, cfg.threads,
                [&](std::size_t s, std::vector<double>& xi) -> std::optional<PathFailure> {
                  DrawIncrements(cfg.seed, s, xi);
                  if (!cfg.antithetic) return run_path(s, xi, 1.0);
                  if (auto f = run_path(2 * s, xi, 1.0)) return f;
                  return run_path(2 * s + 1, xi, -1.0);
                });

  out.principal = EstimateUtility(out.principal_payoffs, params.eta_principal(),
                                  cfg.antithetic);
  out.principal.label = "principal";
  out.principal.seed = cfg.seed;
  for (std::size_t i = 0; i < n_agents; ++i) {
    UtilityEstimate e = EstimateUtility(out.agent_payoffs[i], eta_agent[i], cfg.antithetic);
    e.label = single ? "agent" : "firm" + std::to_string(i + 1);
    e.seed = cfg.seed;
    out.agents.push_back(std::move(e));
  }
  return out;
}

NashSimResult SimulateNash(const ModelParams& params,
                           const std::pair<FeedbackStrategy, FeedbackStrategy>& strategies,
                           const SimConfig& cfg, std::optional<Deviation> deviation) {
  if (params.kind() != ModelKind::kTwoFirmNash) {
    throw Error(ErrorCode::kWrongKind, "game simulation needs model kind nash");
  }
  const auto& [first, second] = strategies;
  if (first.firm() != 1 || second.firm() != 2) {
    throw Error(ErrorCode::kInvalidArgument, "strategies must be ordered (firm 1, firm 2)");
  }
  const double horizon = params.horizon();
  for (const FeedbackStrategy* s : {&first, &second}) {
    if (std::abs(s->coefficients().grid().horizon() - horizon) >
        1e-12 * std::max(1.0, horizon)) {
      throw Error(ErrorCode::kConfigMismatch,
                  "strategy horizon differs from the model horizon", "horizon");
    }
  }
  if (deviation && deviation->firm != 1 && deviation->firm != 2) {
    throw Error(ErrorCode::kInvalidArgument, "deviating firm must be 1 or 2", "firm");
  }
  const std::size_t n_steps = StepCount(cfg, horizon);
  const double h = horizon / static_cast<double>(n_steps);
  const double sqh = std::sqrt(h);

  std::array<std::vector<AffineControl>, 2> ctl;
  for (std::size_t k = 0; k < n_steps; ++k) {
    const double t = static_cast<double>(k) * h;
    ctl[0].push_back(first.AffineAt(t));
    ctl[1].push_back(second.AffineAt(t));
  }
  if (deviation) {
    for (AffineControl& c : ctl[deviation->firm - 1]) {
      c.x *= deviation->scale;
      c.y *= deviation->scale;
      c.c = deviation->scale * c.c + deviation->shift;
    }
  }
  const double s1 = params.sigma(1), s2 = params.sigma(2);

  NashSimResult out;
  out.payoffs[0].assign(cfg.n_paths, 0.0);
  out.payoffs[1].assign(cfg.n_paths, 0.0);

  auto run_path = [&](std::size_t path, const std::vector<double>& xi,
                      double sign) -> std::optional<PathFailure> {
    double x = cfg.x0.x1, y = cfg.x0.x2;
    double pi1 = 0.0, pi2 = 0.0;
    for (std::size_t k = 0; k < n_steps; ++k) {
      const AffineControl& c1 = ctl[0][k];
      const AffineControl& c2 = ctl[1][k];
      const double a1 = c1.x * x + c1.y * y + c1.c;
      const double a2 = c2.x * x + c2.y * y + c2.c;
      const StateVector st{x, y};
      pi1 += (Revenue(params, st, RevenueScope::kFirm1) - EffortCost(params, a1, 1)) * h;
      pi2 += (Revenue(params, st, RevenueScope::kFirm2) - EffortCost(params, a2, 2)) * h;
      x += a1 * h + s1 * sign * sqh * xi[2 * k];
      y += a2 * h + s2 * sign * sqh * xi[2 * k + 1];
      if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(pi1) ||
          !std::isfinite(pi2)) {
        return PathFailure{path, static_cast<double>(k + 1) * h};
      }
    }
    out.payoffs[0][path] = pi1;
    out.payoffs[1][path] = pi2;
    return std::nullopt;
  };

  ForEachStream(StreamCount(cfg), n_steps, cfg.threads,
                [&](std::size_t s, std::vector<double>& xi) -> std::optional<PathFailure> {
                  DrawIncrements(cfg.seed, s, xi);
                  if (!cfg.antithetic) return run_path(s, xi, 1.0);
                  if (auto f = run_path(2 * s, xi, 1.0)) return f;
                  return run_path(2 * s + 1, xi, -1.0);
                });

  for (int i = 0; i < 2; ++i) {
    out.firms[i] = EstimateUtility(out.payoffs[i], params.eta(i + 1), cfg.antithetic);
    out.firms[i].label = "firm" + std::to_string(i + 1);
    out.firms[i].seed = cfg.seed;
  }
  return out;
}

}  // namespace regprod
