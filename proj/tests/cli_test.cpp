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

// Runs the regprod executable end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "json.hpp"
#include "regprod/io.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliRun {
  int status;
  std::string err;
};

// Runs the CLI with `args`, capturing stderr.
CliRun Cli(const std::string& args) {
  const std::string cmd = std::string(REGPROD_CLI) + " " + args + " 2>&1 1>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "popen failed"};
  std::string err;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) err.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, err};
}

std::string Config(const std::string& name) {
  return std::string(REGPROD_CONFIG_DIR) + "/" + name;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("regprod_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  void WriteConfig(const std::string& name, const json& cfg) const {
    regprod::WriteTextFile(Path(name), cfg.dump());
  }

  fs::path dir_;
};

TEST_F(CliTest, NashWritesCoefficientsAndSummary) {
  const CliRun r = Cli("nash --config " + Config("fig2_nash.json") + " --out " + Path("o"));
  ASSERT_EQ(r.status, 0) << r.err;
  const regprod::CsvTable t = regprod::ReadCsv(Path("o/nash_coeffs.csv"));
  EXPECT_EQ(t.header.size(), 13u);
  EXPECT_TRUE(fs::exists(Path("o/summary.json")));
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  for (const char* sub : {"a", "b"}) {
    const CliRun r = Cli("nash --config " + Config("fig2_nash.json") + " --seed 5 --out " +
                      Path(sub));
    ASSERT_EQ(r.status, 0) << r.err;
  }
  EXPECT_EQ(regprod::ReadTextFile(Path("a/nash_coeffs.csv")),
            regprod::ReadTextFile(Path("b/nash_coeffs.csv")));
  EXPECT_EQ(regprod::ReadTextFile(Path("a/summary.json")),
            regprod::ReadTextFile(Path("b/summary.json")));
}

TEST_F(CliTest, NegativeGammaExitsOne) {
  json cfg = json::parse(regprod::ReadTextFile(Config("two_firm.json")));
  cfg["model"]["gamma1"] = -1;
  WriteConfig("bad.json", cfg);
  const CliRun r = Cli("two-firm --config " + Path("bad.json") + " --out " + Path("o"));
  EXPECT_EQ(r.status, 1);
  const json err = json::parse(r.err);
  EXPECT_EQ(err["error"]["field"], "gamma1");
}

TEST_F(CliTest, BlowUpExitsTwo) {
  json cfg = json::parse(regprod::ReadTextFile(Config("fig2_nash.json")));
  cfg["model"]["horizon"] = 1.5;
  cfg["numerics"]["n_nodes"] = 1501;
  WriteConfig("long.json", cfg);
  const CliRun r =
      Cli("nash --literal-signs --config " + Path("long.json") + " --out " + Path("o"));
  EXPECT_EQ(r.status, 2);
  const json err = json::parse(r.err);
  EXPECT_EQ(err["error"]["code"], "BlowUp");
  EXPECT_TRUE(err["error"].contains("time"));
}

TEST_F(CliTest, UnreadableOutputExitsTwo) {
  regprod::WriteTextFile(Path("file"), "x");
  const CliRun r = Cli("two-firm --config " + Config("two_firm.json") + " --out " +
                    Path("file/sub"));
  EXPECT_EQ(r.status, 2) << r.err;
  EXPECT_EQ(json::parse(r.err)["error"]["code"], "Io");
}

TEST_F(CliTest, MissingConfigFileExitsTwo) {
  const CliRun r = Cli("nash --config " + Path("absent.json"));
  EXPECT_EQ(r.status, 2);
  EXPECT_NO_THROW(json::parse(r.err));
}

TEST_F(CliTest, UsageErrorsExitOne) {
  for (const char* args : {"", "nash", "frobnicate --config x.json", "nash --config"}) {
    const CliRun r = Cli(args);
    EXPECT_EQ(r.status, 1) << args;
    EXPECT_NO_THROW(json::parse(r.err)) << args << ": " << r.err;
  }
  const CliRun r = Cli("simulate --config " + Config("simulate_two_firm.json") + " --seed -3");
  EXPECT_EQ(r.status, 1);
}

TEST_F(CliTest, EveryCheckedInConfigRuns) {
  const std::pair<const char*, const char*> runs[] = {
      {"single-firm", "single_firm.json"},
      {"two-firm", "two_firm.json"},
      {"nash", "fig2_nash.json"},
      {"best-response", "fig1_best_response.json"},
      {"verify", "verify_two_firm.json"},
      {"verify", "verify_nash.json"},
  };
  for (const auto& [cmd, file] : runs) {
    const CliRun r = Cli(std::string(cmd) + " --config " + Config(file) + " --out " + Path(file));
    EXPECT_EQ(r.status, 0) << cmd << " " << file << ": " << r.err;
  }
  const json residuals = json::parse(regprod::ReadTextFile(Path("verify_nash.json/residuals.json")));
  EXPECT_FALSE(residuals.empty());
}

TEST_F(CliTest, SimulateSmall) {
  json cfg = json::parse(regprod::ReadTextFile(Config("simulate_nash_deviation.json")));
  cfg["numerics"]["n_paths"] = 200;
  cfg["numerics"]["dt"] = 0.01;
  WriteConfig("sim.json", cfg);
  const CliRun r = Cli("simulate --config " + Path("sim.json") + " --out " + Path("o"));
  ASSERT_EQ(r.status, 0) << r.err;
  const json s = json::parse(regprod::ReadTextFile(Path("o/summary.json")));
  EXPECT_TRUE(s.contains("estimates"));
  EXPECT_TRUE(s.contains("deviation"));
}

}  // namespace
