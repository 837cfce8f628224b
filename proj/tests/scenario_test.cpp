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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>

#include "json.hpp"
#include "regprod/io.hpp"

namespace regprod {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class ScenarioTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("regprod_scenario_" + std::string(::testing::UnitTest::GetInstance()
                                                  ->current_test_info()
                                                  ->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Out(const std::string& sub = "") const { return (dir_ / sub).string(); }

  fs::path dir_;
};

const char* kGameModel =
    R"("model": {"kind": "nash", "gamma1": 1.5, "gamma2": 1.0, "sigma1": 0.2,
                 "sigma2": 0.3, "p0": 1.0, "p1": 0.6, "p2": 0.4, "eta1": 1.0,
                 "eta2": 1.0, "horizon": 1.0})";

const char* kTwoFirmModel =
    R"("model": {"kind": "two-firm", "gamma1": 1.5, "gamma2": 1.0, "sigma1": 0.2,
                 "sigma2": 0.3, "p0": 1.0, "p1": 0.6, "p2": 0.4, "eta1": 1.0, "eta2": 1.0,
                 "eta_p": 1.0, "kappa": 1.0, "lambda": 1.0, "delta": 1.0,
                 "horizon": 1.0})";

std::string Config(const char* model, const std::string& rest = "") {
  return "{" + std::string(model) + (rest.empty() ? "" : ", " + rest) + "}";
}

Error ErrorOf(Scenario s, const std::string& text) {
  try {
    ParseRunConfig(s, text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "expected a validation error";
  return Error(ErrorCode::kIo, "none");
}

TEST_F(ScenarioTest, CsvRoundTripIsBitExact) {
  CsvTable t;
  t.header = {"a", "b"};
  t.rows = {{0.1, -1.0 / 3.0},
            {std::numeric_limits<double>::denorm_min(), 1e300},
            {std::nextafter(1.0, 2.0), -0.0}};
  fs::create_directories(dir_);
  EmitCsv(t, Out("t.csv"));
  const CsvTable back = ReadCsv(Out("t.csv"));
  EXPECT_EQ(back.header, t.header);
  ASSERT_EQ(back.rows.size(), t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_EQ(std::signbit(back.rows[i][j]), std::signbit(t.rows[i][j]));
      EXPECT_EQ(back.rows[i][j], t.rows[i][j]);
    }
  }
}

TEST_F(ScenarioTest, EmptyTableIsHeaderOnly) {
  fs::create_directories(dir_);
  EmitCsv(CsvTable{{"t", "x"}, {}}, Out("e.csv"));
  EXPECT_EQ(ReadTextFile(Out("e.csv")), "t,x\n");
}

TEST_F(ScenarioTest, RaggedRowsAndBadPathsFail) {
  EXPECT_THROW(EmitCsv(CsvTable{{"a"}, {{1.0, 2.0}}}, Out("r.csv")), Error);
  try {
    EmitCsv(CsvTable{{"a"}, {}}, "/nonexistent/dir/x.csv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST_F(ScenarioTest, TwoFirmWritesOneLinePerNode) {
  ScenarioOptions opt;
  opt.out_dir = Out();
  const ScenarioResult r = RunScenario(Scenario::kTwoFirm, Config(kTwoFirmModel), opt);
  EXPECT_EQ(r.files.size(), 2u);
  const CsvTable t = ReadCsv(Out("value_coeffs.csv"));
  EXPECT_EQ(t.header, (std::vector<std::string>{"t", "A11", "A12", "A22", "B1", "B2", "C"}));
  EXPECT_EQ(t.rows.size(), 1001u);
  const std::string text = ReadTextFile(Out("value_coeffs.csv"));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1002);
  EXPECT_EQ(text.find('\r'), std::string::npos);
  const json summary = json::parse(ReadTextFile(Out("summary.json")));
  EXPECT_EQ(summary["scenario"], "two-firm");
}

TEST_F(ScenarioTest, NashWritesThirteenColumns) {
  ScenarioOptions opt;
  opt.out_dir = Out();
  RunScenario(Scenario::kNash, Config(kGameModel), opt);
  const CsvTable t = ReadCsv(Out("nash_coeffs.csv"));
  EXPECT_EQ(t.header.size(), 13u);
  EXPECT_EQ(t.header.front(), "t");
  EXPECT_EQ(t.rows.size(), 1001u);
}

TEST_F(ScenarioTest, BestResponsePerOpponentLevel) {
  ScenarioOptions opt;
  opt.out_dir = Out();
  const auto r = RunScenario(Scenario::kBestResponse,
                             Config(kGameModel, R"("opponent": {"constant": [0, 0.5, 1]})"),
                             opt);
  EXPECT_EQ(r.files.size(), 4u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_TRUE(fs::exists(Out("best_response_" + std::to_string(i) + ".csv")));
  }
}

TEST_F(ScenarioTest, VerifyPassesGate) {
  ScenarioOptions opt;
  opt.out_dir = Out();
  RunScenario(Scenario::kVerify, Config(kTwoFirmModel), opt);
  const json summary = json::parse(ReadTextFile(Out("summary.json")));
  EXPECT_TRUE(summary["within_gate"].get<bool>());
  EXPECT_TRUE(fs::exists(Out("residuals.json")));
}

TEST_F(ScenarioTest, OutputsAreDeterministic) {
  const std::string cfg = Config(
      kTwoFirmModel, R"("numerics": {"n_paths": 200, "dt": 0.01, "seed": 9},
                        "simulation": {"dump_paths": true})");
  ScenarioOptions a, b;
  a.out_dir = Out("a");
  b.out_dir = Out("b");
  b.seed = 9;
  RunScenario(Scenario::kSimulate, cfg, a);
  RunScenario(Scenario::kSimulate, cfg, b);
  for (const char* f : {"summary.json", "paths.csv"}) {
    EXPECT_EQ(ReadTextFile(Out(std::string("a/") + f)), ReadTextFile(Out(std::string("b/") + f)))
        << f;
  }
}

TEST_F(ScenarioTest, SeedOverrideChangesEstimate) {
  const std::string cfg =
      Config(kTwoFirmModel, R"("numerics": {"n_paths": 200, "dt": 0.01, "seed": 9})");
  ScenarioOptions a, b;
  a.out_dir = Out("a");
  b.out_dir = Out("b");
  b.seed = 10;
  RunScenario(Scenario::kSimulate, cfg, a);
  RunScenario(Scenario::kSimulate, cfg, b);
  EXPECT_NE(ReadTextFile(Out("a/summary.json")), ReadTextFile(Out("b/summary.json")));
}

TEST(ParseRunConfig, ErrorsNameTheField) {
  struct Case {
    Scenario scenario;
    std::string text;
    ErrorCode code;
    std::string field;
  };
  const std::vector<Case> cases = {
      {Scenario::kNash, "{}", ErrorCode::kMissingField, "model"},
      {Scenario::kNash, "{not json", ErrorCode::kInvalidArgument, "config"},
      {Scenario::kNash, Config(kGameModel, R"("colour": 1)"), ErrorCode::kUnexpectedField,
       "colour"},
      {Scenario::kNash, Config(kGameModel, R"("numerics": {"n_nodes": 3})"),
       ErrorCode::kOutOfRange, "numerics.n_nodes"},
      {Scenario::kNash, Config(kGameModel, R"("numerics": {"dt": "small"})"),
       ErrorCode::kInvalidArgument, "numerics.dt"},
      {Scenario::kTwoFirm, Config(kGameModel), ErrorCode::kConfigMismatch, "kind"},
      {Scenario::kTwoFirm, R"({"model": {"gamma1": 1.5}})", ErrorCode::kMissingField, "gamma2"},
      {Scenario::kBestResponse, Config(kGameModel), ErrorCode::kMissingField, "opponent"},
      {Scenario::kBestResponse, Config(kGameModel, R"("opponent": {"responder": 3, "constant": 0})"),
       ErrorCode::kOutOfRange, "opponent.responder"},
      {Scenario::kSimulate, Config(kTwoFirmModel, R"("simulation": {"y0": [0]})"),
       ErrorCode::kConfigMismatch, "simulation.y0"},
      {Scenario::kSimulate, Config(kTwoFirmModel, R"("numerics": {"n_paths": 3})"),
       ErrorCode::kInvalidArgument, "n_paths"},
      {Scenario::kSimulate,
       Config(kGameModel, R"("simulation": {"deviation": {"firm": 4}})"),
       ErrorCode::kOutOfRange, "simulation.deviation.firm"},
  };
  for (const Case& c : cases) {
    const Error e = ErrorOf(c.scenario, c.text);
    EXPECT_EQ(e.code(), c.code) << c.text;
    EXPECT_EQ(e.field(), c.field) << c.text;
  }
}

TEST(ParseRunConfig, NegativeGammaIsRejected) {
  json cfg = json::parse(Config(kTwoFirmModel));
  cfg["model"]["gamma1"] = -1.0;
  const Error e = ErrorOf(Scenario::kTwoFirm, cfg.dump());
  EXPECT_EQ(e.field(), "gamma1");
  EXPECT_TRUE(IsValidationError(e.code()));
  EXPECT_NE(ErrorJson(e).find("\"gamma1\""), std::string::npos);
}

TEST(ParseRunConfig, KindMustMatchScenario) {
  const Error e = ErrorOf(Scenario::kNash, R"({"model": {"kind": "two-firm"}})");
  EXPECT_EQ(e.code(), ErrorCode::kConfigMismatch);
  EXPECT_EQ(e.field(), "kind");
}

TEST(ParseRunConfig, CommandLineOverridesFile) {
  ScenarioOptions opt;
  opt.out_dir = "elsewhere";
  opt.seed = 7;
  opt.literal_signs = true;
  const RunConfig cfg = ParseRunConfig(
      Scenario::kNash, Config(kGameModel, R"("numerics": {"seed": 1}, "output_dir": "x")"), opt);
  EXPECT_EQ(cfg.output_dir, "elsewhere");
  EXPECT_EQ(cfg.sim.seed, 7u);
  EXPECT_TRUE(cfg.params.literal_signs());
}

TEST(ErrorJson, Shape) {
  const json j = json::parse(ErrorJson(Error(ErrorCode::kBlowUp, "escape", "A", 0.25)));
  EXPECT_EQ(j["error"]["code"], ErrorCodeName(ErrorCode::kBlowUp));
  EXPECT_EQ(j["error"]["field"], "A");
  EXPECT_EQ(j["error"]["time"], 0.25);
}

}  // namespace
}  // namespace regprod
