// Copyright 2026 The hrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hrec/report.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "hrec/errors.h"
#include "hrec/runner.h"

namespace hrec {
namespace {

namespace fs = std::filesystem;

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path TempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("hrec_test_" + name);
  fs::remove_all(dir);
  return dir;
}

TEST(ConfigTest, DefaultsAreValid) {
  ExperimentConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  EXPECT_EQ(cfg.p_values.size(), 10u);
  EXPECT_DOUBLE_EQ(cfg.epsilon, 0.0355);
}

TEST(ConfigTest, JsonRoundTrip) {
  ExperimentConfig cfg;
  ApplyConfigJson(nlohmann::json::parse(R"({
      "experiment": "tomo-demo", "p_values": [0.1, 0.4], "epsilon": 0.02,
      "shots": 900, "seed": 123, "noise": "uniform", "noise_width": 0.3,
      "phi_offset": 0.1, "pi_pulse_angle_error": 0.01, "cpmg": false,
      "output_path": "x", "bootstrap": 150, "quadrature": "random",
      "nodes": 500, "max_nodes": 8000, "weighting": "uniform", "gamma_t": 2.0,
      "repeats": [3], "dfs_states": 7, "workers": 2})"),
                  cfg);
  EXPECT_EQ(cfg.experiment, ExperimentKind::kTomoDemo);
  EXPECT_EQ(*cfg.shots, 900);
  EXPECT_EQ(cfg.noise.distribution, PhaseDistribution::kUniform);
  EXPECT_FALSE(cfg.cpmg);
  ExperimentConfig back;
  ApplyConfigJson(ConfigToJson(cfg), back);
  EXPECT_EQ(ConfigToJson(back), ConfigToJson(cfg));
}

TEST(ConfigTest, Errors) {
  ExperimentConfig cfg;
  EXPECT_THROW(ApplyConfigJson(nlohmann::json::parse(R"({"bogus": 1})"), cfg),
               ValidationError);
  EXPECT_THROW(ApplyConfigJson(nlohmann::json::parse(R"({"epsilon": "big"})"), cfg),
               ValidationError);
  EXPECT_THROW(ApplyConfigJson(nlohmann::json::parse(R"({"noise": "pink"})"), cfg),
               ValidationError);
  EXPECT_THROW(ApplyConfigJson(nlohmann::json::parse("[1]"), cfg), ValidationError);
  ExperimentConfig bad;
  bad.p_values = {0.5, 1.5};
  EXPECT_THROW(bad.Validate(), ValidationError);
  bad = ExperimentConfig{};
  bad.shots = 0;
  EXPECT_THROW(bad.Validate(), ValidationError);
  EXPECT_THROW(LoadConfigFile("/nonexistent/cfg.json"), FileError);
  try {
    LoadConfigFile("/nonexistent/cfg.json");
  } catch (const FileError& e) {
    EXPECT_EQ(e.path(), "/nonexistent/cfg.json");
  }
}

TEST(CsvTest, TwelveDigitsAndRoundTrip) {
  EXPECT_EQ(FormatDouble(1.0 / 3.0), "0.333333333333");
  const std::vector<SweepRow> rows{
      {"x", 0.8, 0.98504958, 0.93417, 0.97, 0.003, 0.2},
      {"0", 0.01, 1.0, 1.0, 0.9999, 1e-4, 0.99}};
  const std::string csv = FormatSweepCsv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "state,p,predicted_F,predicted_F_M,mc_F,mc_sigma_F,acceptance");
  const std::vector<SweepRow> back = ParseSweepCsv(csv);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].state, "x");
  EXPECT_DOUBLE_EQ(back[0].predicted_f, 0.98504958);
  EXPECT_EQ(FormatSweepCsv(back), csv);
  EXPECT_THROW(ParseSweepCsv("wrong\n"), ValidationError);
}

TEST(SvgTest, DeterministicAndWellFormed) {
  const std::vector<BlochVector> pts{{0, 0, 1}, {0.5, 0.1, 0.2}, {0, 0, -1}};
  const std::string a = RenderBlochSvg(pts, "demo");
  EXPECT_EQ(a, RenderBlochSvg(pts, "demo"));
  EXPECT_EQ(a.rfind("<?xml", 0), 0u);
  EXPECT_NE(a.find("<svg"), std::string::npos);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
  std::size_t n = 0;
  for (std::size_t pos = a.find("class=\"point\""); pos != std::string::npos;
       pos = a.find("class=\"point\"", pos + 1)) {
    ++n;
  }
  EXPECT_EQ(n, 3u);
  EXPECT_NE(a.find("class=\"guide\""), std::string::npos);
  EXPECT_NE(RenderBlochSvg(pts, "|x> & co").find("|x&gt; &amp; co"), std::string::npos);
  EXPECT_THROW(RenderBlochSvg(std::vector<BlochVector>{}), ValidationError);
  // North pole projects above the center, south pole below.
  EXPECT_LT(ProjectBloch({0, 0, 1}).y, ProjectBloch({0, 0, -1}).y);
}

TEST(FileTest, WriteErrorsCarryPath) {
  EXPECT_THROW(WriteTextFile("/nonexistent/dir/out.txt", "x"), FileError);
}

TEST(RunnerTest, IdenticalConfigsGiveIdenticalFiles) {
  ExperimentConfig cfg;
  cfg.experiment = ExperimentKind::kSweep;
  cfg.p_values = {0.3, 0.7};
  cfg.shots = 1500;
  cfg.bootstrap = 100;
  const fs::path a = TempDir("run_a");
  const fs::path b = TempDir("run_b");
  cfg.output_path = a.string();
  const RunOutput oa = RunExperiment(cfg);
  cfg.output_path = b.string();
  cfg.workers = 2;
  const RunOutput ob = RunExperiment(cfg);
  ASSERT_EQ(oa.files.size(), ob.files.size());
  for (const std::string& f : oa.files) {
    const fs::path name = fs::path(f).filename();
    if (name == "sweep.json") continue;  // embeds output_path and workers
    EXPECT_EQ(ReadFile(a / name), ReadFile(b / name)) << name;
  }
  EXPECT_TRUE(fs::exists(a / "bloch_x_mid.svg"));
  EXPECT_EQ(ParseSweepCsv(ReadFile(a / "sweep.csv")).size(), 8u);
}

TEST(RunnerTest, AllExperimentsWriteOutputs) {
  struct Case {
    ExperimentKind kind;
    const char* csv;
  };
  for (const Case& c : {Case{ExperimentKind::kAverage, "average.csv"},
                        Case{ExperimentKind::kRepeat, "repeat.csv"},
                        Case{ExperimentKind::kDfs, "dfs.csv"},
                        Case{ExperimentKind::kTomoDemo, "tomo_demo.csv"}}) {
    ExperimentConfig cfg;
    cfg.experiment = c.kind;
    cfg.p_values = {0.5};
    cfg.shots = 3000;
    cfg.nodes = 1000;
    cfg.repeats = {1, 5};
    cfg.dfs_states = 10;
    const fs::path dir = TempDir(c.csv);
    cfg.output_path = dir.string();
    const RunOutput out = RunExperiment(cfg);
    EXPECT_TRUE(fs::exists(dir / c.csv)) << c.csv;
    EXPECT_EQ(out.metadata["tool"], "hrec");
    EXPECT_EQ(out.metadata["config"]["seed"], cfg.seed);
  }
}

// --- Command-line driver ----------------------------------------------------------

int RunCli(const std::string& args) {
  const std::string cmd = std::string(HREC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

TEST(CliTest, ExitCodes) {
  const fs::path dir = TempDir("cli_codes");
  EXPECT_EQ(RunCli("dfs --dfs-states 5 --output-path " + dir.string()), kExitOk);
  EXPECT_TRUE(fs::exists(dir / "dfs.csv"));
  EXPECT_EQ(RunCli("dfs --epsilon 2 --output-path " + dir.string()), kExitConfig);
  EXPECT_EQ(RunCli("dfs --no-such-flag"), kExitConfig);
  EXPECT_EQ(RunCli("bogus"), kExitConfig);
  EXPECT_EQ(RunCli("average --p-values 0.8 --quadrature random --nodes 100 "
                   "--max-nodes 400 --output-path " + dir.string()),
            kExitAccuracy);
  EXPECT_EQ(RunCli("dfs --output-path /proc/hrec_cannot_write"), kExitIo);
  EXPECT_EQ(RunCli("dfs --config /nonexistent.json"), kExitConfig);
}

TEST(CliTest, ConfigFileAndFlagOverride) {
  const fs::path dir = TempDir("cli_cfg");
  fs::create_directories(dir);
  const fs::path cfg = dir / "cfg.json";
  std::ofstream(cfg) << R"({"p_values": [0.2, 0.6], "dfs_states": 3, "seed": 5})";
  ASSERT_EQ(RunCli("dfs --config " + cfg.string() + " --p-values 0.3 --output-path " +
                   (dir / "out").string()),
            kExitOk);
  const auto meta = nlohmann::json::parse(ReadFile(dir / "out" / "dfs.json"));
  EXPECT_EQ(meta["config"]["p_values"], nlohmann::json::array({0.3}));
  EXPECT_EQ(meta["config"]["dfs_states"], 3);
  EXPECT_EQ(meta["config"]["seed"], 5);
}

TEST(CliTest, SameSeedSameBytes) {
  const fs::path a = TempDir("cli_a");
  const fs::path b = TempDir("cli_b");
  const std::string args = "sweep --p-values 0.4 --shots 900 --bootstrap 100 --seed 9 ";
  ASSERT_EQ(RunCli(args + "--output-path " + a.string()), kExitOk);
  ASSERT_EQ(RunCli(args + "--workers 2 --output-path " + b.string()), kExitOk);
  EXPECT_EQ(ReadFile(a / "sweep.csv"), ReadFile(b / "sweep.csv"));
  EXPECT_EQ(ReadFile(a / "bloch_y_final.svg"), ReadFile(b / "bloch_y_final.svg"));
}

}  // namespace
}  // namespace hrec
