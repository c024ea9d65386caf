// Copyright 2026 The corrnoise Authors
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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "corrnoise/canonical.hpp"
#include "corrnoise/dsl.hpp"
#include "run_config.hpp"

using namespace corrnoise;
using namespace corrnoise::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::path(::testing::TempDir()) / ("corrnoise_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::vector<std::string>> csv_rows(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(p));
  for (std::string line; std::getline(in, line);) {
    if (line.starts_with("#")) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    if (line.ends_with(",")) cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

RunConfig config(const nlohmann::json& j) { return run_config_from_json(j); }

fs::path circuit_file(const std::string& label) {
  return fs::path(CORRNOISE_DATA_DIR) / "circuits" / (label + ".circ");
}

int run_tool(const std::string& args, const fs::path& log) {
  const std::string cmd = std::string(CORRNOISE_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST(RunConfig, DefaultsAndOverrides) {
  const auto cfg = config({{"noise", {{"base_sigma", 0.1}, {"r", 2}, {"c", 0.5}}}, {"seed", 9}});
  EXPECT_EQ(cfg.ensemble.rng_seed, 9U);
  EXPECT_EQ(*cfg.base_sigma, 0.1);
  EXPECT_NEAR(cfg.require_noise().sigmas()[0], 0.2, 1e-15);
  EXPECT_EQ(cfg.fields_for(2), (std::vector<double>{0, 0}));
  EXPECT_EQ(cfg.initial_for(2).probability(0), 1.0);
  EXPECT_EQ(cfg.ramsey_wait.points().size(), 41U);
  EXPECT_THROW(config(nlohmann::json::object()).require_noise(), InputError);
}

TEST(RunConfig, RejectsBadInput) {
  EXPECT_THROW(config({{"noize", 1}}), InputError);
  EXPECT_THROW(config({{"ensemble", {{"n_realizations", 5}}}}), InputError);
  EXPECT_THROW(config({{"ensemble", {{"convergence_tol", 2.0}}}}), InputError);
  EXPECT_THROW(config({{"noise", {{"sigmas", {1, 1}}, {"correlations", {{1, 2}, {2, 1}}}}}}), InputError);
  EXPECT_THROW(config({{"dfs", "sideways"}}), InputError);
  EXPECT_THROW(config({{"static_fields", {1, 2, 3}}}).fields_for(2), InputError);
  EXPECT_THROW(config({{"initial_state", "0"}}).initial_for(2), InputError);
}

TEST(RunConfig, NoiseFileAndHash) {
  const fs::path dir = scratch("noisefile");
  std::ofstream(dir / "noise.json") << R"({"sigmas": [0.1, 0.2], "correlations": [[1, 0.3], [0.3, 1]]})";
  std::ofstream(dir / "cfg.json") << R"({"noise": "noise.json", "initial_state": {"amplitudes": [0, 1, [0, 1], 0]}})";
  RunConfig cfg = load_run_config(dir / "cfg.json");
  EXPECT_NEAR(cfg.require_noise().covariance()(0, 1), 0.3 * 0.02, 1e-15);
  EXPECT_NEAR(cfg.initial_for(2).probability(2), 0.5, 1e-15);
  const auto h = cfg.hash();
  cfg.ensemble.threads = 7;
  EXPECT_EQ(cfg.hash(), h);
  cfg.ensemble.rng_seed = 99;
  EXPECT_NE(cfg.hash(), h);
  EXPECT_THROW(load_run_config(dir / "missing.json"), InputError);
}

TEST(CmdSimulate, ZeroNoiseIsExact) {
  const fs::path out = scratch("sim_zero");
  auto cfg = config({{"noise", {{"base_sigma", 0.0}, {"r", 1}, {"c", 0}}}, {"dfs", "-"}});
  cfg.output_dir = out;
  std::ostringstream log;
  EXPECT_EQ(cmd_simulate(cfg, circuit_file("bell_sqrtswap"), log), kExitOk);
  const auto rows = csv_rows(out / "bell_sqrtswap_trajectory.csv");
  ASSERT_GT(rows.size(), 2U);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"t", "F", "infidelity", "purity", "d_g", "d_c"}));
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(std::stod(rows[i][2]), 1e-10);
  const auto md = nlohmann::json::parse(slurp(out / "bell_sqrtswap_trajectory.json"));
  EXPECT_EQ(md["circuit"], "bell_sqrtswap");
}

TEST(CmdSimulate, DcTracksDfsEntry) {
  const fs::path out = scratch("sim_dc");
  auto cfg = config({{"noise", {{"base_sigma", 0.11}, {"r", 1}, {"c", 1}}},
                     {"dfs", "-"},
                     {"ensemble", {{"n_realizations_initial", 200}, {"max_realizations", 200}}}});
  cfg.output_dir = out;
  std::ostringstream log;
  cmd_simulate(cfg, circuit_file("bell_sqrtswap"), log);
  const auto rows = csv_rows(out / "bell_sqrtswap_trajectory.csv");
  const double sigma2 = 0.11 * 0.11;
  // |00> is a Z eigenstate: d_c = 0 there, positive while X rotates qubit 2, 0 again in the DFS.
  EXPECT_EQ(std::stod(rows[1][5]), 0.0);
  double peak = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) peak = std::max(peak, std::stod(rows[i][5]));
  EXPECT_GT(peak, 0.5 * sigma2);
  EXPECT_LE(peak, 4 * sigma2 + 1e-15);
  EXPECT_NEAR(std::stod(rows.back()[5]), 0.0, 1e-15);
  EXPECT_NEAR(std::stod(rows.back()[4]), 0.0, 1e-12);
  EXPECT_EQ(std::stod(rows[1][4]), 1.0);
}

TEST(CmdSimulate, DeutschJozsaOrderingStableAcrossSeeds) {
  for (std::uint64_t seed : {1, 2, 3}) {
    auto cfg = config({{"noise", {{"base_sigma", 0.11}, {"r", 1}, {"c", 1}}},
                       {"seed", seed},
                       {"ensemble", {{"n_realizations_initial", 1000}, {"max_realizations", 1000}}}});
    cfg.output_dir = scratch("dj_seed");
    std::ostringstream log;
    cmd_simulate(cfg, circuit_file("dj_y"), log);
    cmd_simulate(cfg, circuit_file("dj_h"), log);
    const double y = std::stod(csv_rows(cfg.output_dir / "dj_y_trajectory.csv").back()[2]);
    const double h = std::stod(csv_rows(cfg.output_dir / "dj_h_trajectory.csv").back()[2]);
    EXPECT_LT(y, h) << seed;
  }
}

TEST(CmdSimulate, NonConvergenceExitsThreeButWrites) {
  auto cfg = config({{"noise", {{"base_sigma", 0.3}, {"r", 1}, {"c", 0}}},
                     {"ensemble", {{"n_realizations_initial", 20}, {"max_realizations", 20}, {"convergence_tol", 1e-9}}}});
  cfg.output_dir = scratch("sim_nc");
  std::ostringstream log;
  EXPECT_EQ(cmd_simulate(cfg, circuit_file("bell_cz"), log), kExitWarning);
  EXPECT_TRUE(fs::exists(cfg.output_dir / "bell_cz_trajectory.csv"));
}

TEST(CmdSweep, WaitCircuitExample) {
  auto cfg = config({{"noise", {{"base_sigma", 0.3}, {"r", 1}, {"c", 0}}},
                     {"initial_state", {{"amplitudes", {0, 1, 1, 0}}}},
                     {"ensemble", {{"n_realizations_initial", 1000}, {"max_realizations", 1000}}}});
  cfg.output_dir = scratch("sweep");
  std::ostringstream log;
  cmd_sweep(cfg, circuit_file("ramsey_wait"), {1.0}, {-1.0, 0.0, 1.0}, std::nullopt, log);
  const auto rows = csv_rows(cfg.output_dir / "ramsey_wait_sweep.csv");
  ASSERT_EQ(rows.size(), 4U);
  EXPECT_EQ(rows[0][3], "integrated_dc");
  const double a = std::stod(rows[1][2]), b = std::stod(rows[2][2]), c = std::stod(rows[3][2]);
  EXPECT_GT(a, b);
  EXPECT_GT(b, c);
  EXPECT_NEAR(c, 0.0, 1e-12);
  EXPECT_NEAR(std::stod(rows[3][3]), 0.0, 1e-12);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GE(std::stod(rows[i][3]), 0.0);
  auto no_base = config({{"noise", {{"sigmas", {0.1, 0.1}}, {"correlations", {{1, 0}, {0, 1}}}}}});
  EXPECT_THROW(cmd_sweep(no_base, circuit_file("ramsey_wait"), {1}, {0}, std::nullopt, log), InputError);
}

TEST(CmdRamsey, Verdicts) {
  const std::vector<std::pair<double, std::string>> cases{{1.0, "-"}, {-1.0, "+"}, {0.0, "none"}};
  for (const auto& [c, verdict] : cases) {
    auto cfg = config({{"noise", {{"base_sigma", 1.0}, {"r", 1}, {"c", c}}},
                       {"static_fields", {3.0, 1.0}},
                       {"ensemble", {{"n_realizations_initial", 500}, {"max_realizations", 500}}},
                       {"time_grid", {{"ramsey_wait", {{"start", 0}, {"stop", 1.5}, {"count", 21}}}}}});
    cfg.output_dir = scratch("ramsey");
    std::ostringstream log;
    cmd_ramsey(cfg, "both", log);
    const auto summary = nlohmann::json::parse(slurp(cfg.output_dir / "ramsey_summary.json"));
    EXPECT_EQ(summary["verdict"], verdict) << c;
    EXPECT_TRUE(fs::exists(cfg.output_dir / "ramsey_plus.csv"));
    EXPECT_TRUE(fs::exists(cfg.output_dir / "ramsey_minus.json"));
  }
  auto cfg = config({{"noise", {{"base_sigma", 1.0}, {"r", 1}, {"c", 0}}}});
  std::ostringstream log;
  EXPECT_THROW(cmd_ramsey(cfg, "sideways", log), InputError);
}

TEST(CmdScore, CanonicalOrderAndZeroScore) {
  std::vector<fs::path> files;
  for (auto label : {"dj_h", "bell_cz", "dj_y", "bell_sqrtswap"}) files.push_back(circuit_file(label));
  const fs::path out = scratch("score");
  std::ostringstream log;
  EXPECT_EQ(cmd_score(files, "-", out, log), kExitOk);
  const auto rows = csv_rows(out / "score.csv");
  ASSERT_EQ(rows.size(), 5U);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(rows[i + 1][1], canonical_labels()[i]);

  std::ofstream(out / "zonly.circ") << "qubits 2\nZ 1\nRZ 2 theta=pi/3\nCZ 1 2\n";
  std::ostringstream zlog;
  cmd_score({out / "zonly.circ"}, "-", std::nullopt, zlog);
  EXPECT_NE(zlog.str().find("0.000000"), std::string::npos);
  EXPECT_THROW(cmd_score({out / "nope.circ"}, "-", std::nullopt, zlog), IoError);
}

TEST(CmdCircuits, WritesGoldenEquivalentFiles) {
  const fs::path dir = scratch("circuits");
  std::ostringstream log;
  EXPECT_EQ(cmd_circuits(dir, log), kExitOk);
  for (auto label : canonical_labels()) {
    EXPECT_EQ(load_circuit_file(dir / (std::string(label) + ".circ")), canonical_circuit(label));
  }
}

TEST(Executable, ExitCodes) {
  const fs::path dir = scratch("exe");
  EXPECT_EQ(run_tool("score " + (dir / "missing.circ").string(), dir / "log1"), 2);
  EXPECT_NE(slurp(dir / "log1").find("missing.circ"), std::string::npos);
  std::ofstream(dir / "bad.circ") << "qubits 2\nBADGATE 1\n";
  EXPECT_EQ(run_tool("score " + (dir / "bad.circ").string(), dir / "log2"), 2);
  EXPECT_NE(slurp(dir / "log2").find("line 2"), std::string::npos);
  EXPECT_EQ(run_tool("frobnicate", dir / "log3"), 2);
  EXPECT_EQ(run_tool("circuits", dir / "log4"), 0);
}

TEST(Executable, ThreadCountDoesNotChangeCsv) {
  const fs::path dir = scratch("exe_threads");
  std::ofstream(dir / "cfg.json") << R"({"noise": {"base_sigma": 0.2, "r": 2, "c": 0.3}, "dfs": "-",
    "ensemble": {"n_realizations_initial": 1000, "max_realizations": 1000, "convergence_tol": 0.5}})";
  const std::string base = "simulate --config " + (dir / "cfg.json").string() + " " + circuit_file("dj_h").string();
  ASSERT_EQ(run_tool("--threads 1 " + base + " --output-dir " + (dir / "a").string(), dir / "la"), 0);
  ASSERT_EQ(run_tool("--threads 4 " + base + " --output-dir " + (dir / "b").string(), dir / "lb"), 0);
  EXPECT_EQ(slurp(dir / "a" / "dj_h_trajectory.csv"), slurp(dir / "b" / "dj_h_trajectory.csv"));
}
