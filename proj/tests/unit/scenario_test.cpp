// SPDX-License-Identifier: Apache-2.0
//
// jcsl - joint communication, sensing and localization simulation toolkit
// Copyright (C) 2026 The jcsl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <jcsl/error.hpp>
#include <jcsl/scenario.hpp>

#include "../../tools/command_line.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace jcsl;
using namespace jcsl::cli;
namespace fs = std::filesystem;

namespace {

class TempDir {
  public:
    TempDir()
    {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        path_ = fs::temp_directory_path() / (std::string("jcsl_") + info->test_suite_name() + "_" + info->name());
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path& path() const { return path_; }

  private:
    fs::path path_;
};

std::string slurp(const fs::path& p)
{
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text)
{
    std::ofstream os(p, std::ios::binary);
    os << text;
}

int invoke(std::vector<std::string> args, std::string* out_text = nullptr)
{
    std::ostringstream out, err;
    const int rc = run_command_line(args, out, err);
    if (out_text) *out_text = out.str();
    return rc;
}

std::vector<std::vector<double>> read_numeric_csv(const fs::path& p)
{
    std::ifstream is(p);
    std::string line;
    std::getline(is, line);
    std::vector<std::vector<double>> rows;
    while (std::getline(is, line)) {
        std::vector<double> row;
        std::istringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

TEST(Scenario, ParsesFlatConfig)
{
    const auto spec = parse_scenario(Experiment::papr_ccdf,
                                     R"({"n_subcarriers": 128, "spreading": "NONE", "n_trials": 5000, "seed": 9})");
    EXPECT_EQ(spec.waveform.n_subcarriers, 128u);
    EXPECT_EQ(spec.waveform.spreading, Spreading::NONE);
    EXPECT_EQ(spec.n_trials, 5000u);
    EXPECT_EQ(spec.seed, 9u);
}

TEST(Scenario, RejectsUnknownKeysAndMismatchedExperiment)
{
    EXPECT_THROW(parse_scenario(Experiment::ber, R"({"n_bitz": 10})"), ConfigError);
    EXPECT_THROW(parse_scenario(Experiment::ber, R"({"experiment": "doa"})"), ConfigError);
    EXPECT_THROW(parse_scenario(Experiment::radar_sim, R"({})"), ConfigError);
}

TEST(Cli, ExitCodes)
{
    TempDir tmp;
    EXPECT_EQ(invoke({}), kExitUsage);
    EXPECT_EQ(invoke({"ber"}), kExitUsage);
    EXPECT_EQ(invoke({"ber", "--config", (tmp.path() / "missing.json").string()}), kExitIo);
    spit(tmp.path() / "bad.json", R"({"n_subcarriers": 100})");
    EXPECT_EQ(invoke({"ber", "--config", (tmp.path() / "bad.json").string()}), kExitUsage);
    spit(tmp.path() / "broken.json", "{");
    EXPECT_EQ(invoke({"ber", "--config", (tmp.path() / "broken.json").string()}), kExitUsage);
}

TEST(Cli, UnknownExperimentWritesNothing)
{
    TempDir tmp;
    spit(tmp.path() / "c.json", "{}");
    const auto out = tmp.path() / "out";
    EXPECT_EQ(invoke({"teleport", "--config", (tmp.path() / "c.json").string(), "--out", out.string()}), kExitUsage);
    EXPECT_FALSE(fs::exists(out));
}

TEST(Cli, ReRunsAreByteIdentical)
{
    TempDir tmp;
    spit(tmp.path() / "c.json", R"({"n_trials": 3000, "threshold_step_db": 0.5})");
    const auto out = tmp.path() / "run";
    ASSERT_EQ(invoke({"papr_ccdf", "--config", (tmp.path() / "c.json").string(), "--out", out.string(), "--seed", "5"}),
              kExitOk);
    ASSERT_EQ(invoke({"papr_ccdf", "--config", (tmp.path() / "c.json").string(), "--out", out.string(), "--seed", "5"}),
              kExitOk);
    const auto second = fs::path(out.string() + "-1");
    ASSERT_TRUE(fs::exists(second / "run_meta.json"));
    for (const char* f : {"papr_ccdf.csv", "papr_ccdf_ofdm.csv", "papr_ccdf_dft_s_ofdm.csv"})
        EXPECT_EQ(slurp(out / f), slurp(second / f)) << f;

    const auto meta = nlohmann::json::parse(slurp(out / "run_meta.json"));
    EXPECT_EQ(meta["seed"], 5);
    EXPECT_EQ(meta["tool_version"], std::string(kToolVersion));
    EXPECT_EQ(meta["config"]["n_trials"], 3000);
}

TEST(Cli, RadarScenarioReportsTarget)
{
    TempDir tmp;
    spit(tmp.path() / "c.json", R"({"n_symbols_per_frame": 16, "targets": [{"range_m": 390.3547, "radial_velocity_mps": 0}]})");
    const auto out = tmp.path() / "radar";
    ASSERT_EQ(invoke({"radar_sim", "--config", (tmp.path() / "c.json").string(), "--out", out.string()}), kExitOk);
    const auto dets = nlohmann::json::parse(slurp(out / "detections.json"));
    ASSERT_FALSE(dets.empty());
    EXPECT_EQ(dets[0]["range_bin"], 10);
    EXPECT_EQ(dets[0]["doppler_bin"], 0);
    EXPECT_TRUE(fs::exists(out / "range_doppler.csv"));
}

TEST(Cli, BeamformWithPatternFile)
{
    TempDir tmp;
    spit(tmp.path() / "p.csv", "angle_deg,port,gain_dbi,phase_deg\n0,a,0,0\n180,a,-10,0\n0,b,-10,0\n180,b,0,90\n");
    spit(tmp.path() / "c.json", R"({"patterns_path": "p.csv", "target_angles_deg": [0, 180]})");
    const auto out = tmp.path() / "beam";
    ASSERT_EQ(invoke({"beamform", "--config", (tmp.path() / "c.json").string(), "--out", out.string()}), kExitOk);
    EXPECT_TRUE(fs::exists(out / "port_a.csv"));
    EXPECT_TRUE(fs::exists(out / "envelope.csv"));
    EXPECT_TRUE(fs::exists(out / "beamform.json"));
}

TEST(Cli, FiguresAreReproduced)
{
    TempDir tmp;
    const auto out = tmp.path() / "figs";
    ASSERT_EQ(invoke({"figures", "--out", out.string(), "--trials", "2000"}), kExitOk);

    const auto fig5 = read_numeric_csv(out / "fig5_array.csv");
    double peak = -1e9;
    for (const auto& r : fig5) peak = std::max(peak, r[1]);
    EXPECT_NEAR(peak, 9.97, 0.05);

    const auto fig4 = read_numeric_csv(out / "fig4_fixture.csv");
    ASSERT_FALSE(fig4.empty());
    for (const auto& r : fig4) EXPECT_NEAR(r[4], 4.77, 0.01);

    const auto fig3 = read_numeric_csv(out / "fig3_ccdf.csv");
    ASSERT_FALSE(fig3.empty());
    EXPECT_EQ(fig3.front().size(), 5u);
    EXPECT_DOUBLE_EQ(fig3.front()[1], 1.0);
}

TEST(Cli, ExitCodeMapping)
{
    EXPECT_EQ(exit_code_for(ConfigError("x")), kExitUsage);
    EXPECT_EQ(exit_code_for(DimensionError("x")), kExitUsage);
    EXPECT_EQ(exit_code_for(IoError("x")), kExitIo);
    EXPECT_EQ(exit_code_for(NumericError("x")), kExitNumeric);
    EXPECT_EQ(exit_code_for(std::runtime_error("x")), kExitNumeric);
}
