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
#include <jcsl/papr.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace jcsl;
using namespace jcsl::papr;

TEST(Papr, ImpulseIsSixDb)
{
    const std::vector<cd> x{1.0, 0.0, 0.0, 0.0};
    EXPECT_NEAR(papr_db(x, 1), 6.0206, 1e-4);
    EXPECT_NEAR(papr_db(x, 4), 6.0206, 1e-4);
}

TEST(Papr, ConstantEnvelopeIsZero)
{
    std::vector<cd> x(16);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::polar(1.0, 0.3 * static_cast<double>(i * i));
    EXPECT_NEAR(papr_db(x, 1), 0.0, 1e-12);
}

TEST(Papr, TwoTonesGiveThreeDb)
{
    std::vector<cd> bins(64, cd{});
    bins[3] = 1.0;
    bins[10] = std::polar(1.0, 0.7);
    EXPECT_NEAR(papr_from_subcarriers_db(bins, 4), 3.0103, 0.05);
}

TEST(Papr, ZeroSymbolIsRejected)
{
    const std::vector<cd> z(8, cd{});
    EXPECT_THROW(papr_db(z, 4), NumericError);
}

TEST(Papr, OversamplingOnlyRaisesThePeak)
{
    std::vector<cd> bins(32);
    for (std::size_t k = 0; k < bins.size(); ++k) bins[k] = std::polar(1.0, 1.3 * static_cast<double>(k * k % 7));
    EXPECT_GE(papr_from_subcarriers_db(bins, 8) + 1e-12, papr_from_subcarriers_db(bins, 1));
}

TEST(Newman, TwoTonesMatchDirectComputation)
{
    const std::vector<cd> bins{1.0, cd(0.0, 1.0)};
    EXPECT_NEAR(newman_papr_demo(2), papr_from_subcarriers_db(bins, 4), 1e-12);
    EXPECT_NEAR(newman_papr_demo(2), 10.0 * std::log10(2.0), 1e-9);
}

TEST(Newman, LowPaprForLargeN)
{
    const double newman = newman_papr_demo(256);
    EXPECT_LE(newman, 4.5);
    EXPECT_LT(newman, median_random_papr_db(256, 2000, 4));
}

TEST(ThresholdGrid, IncludesEndpoints)
{
    const auto g = threshold_grid(0.0, 14.0, 0.05);
    ASSERT_EQ(g.size(), 281u);
    EXPECT_DOUBLE_EQ(g.front(), 0.0);
    EXPECT_NEAR(g.back(), 14.0, 1e-12);
    EXPECT_THROW(threshold_grid(1.0, 0.0, 0.1), ConfigError);
}

TEST(Ccdf, IsMonotoneAndStartsAtOne)
{
    WaveformConfig cfg;
    cfg.spreading = Spreading::NONE;
    const auto grid = threshold_grid(0.0, 14.0, 0.25);
    const auto c = estimate_ccdf(cfg, 5000, grid, 12);
    ASSERT_EQ(c.points.size(), grid.size());
    EXPECT_GE(c.points.front().exceedance_probability, 0.999);
    for (std::size_t i = 1; i < c.points.size(); ++i)
        EXPECT_LE(c.points[i].exceedance_probability, c.points[i - 1].exceedance_probability);
    EXPECT_EQ(c.n_trials, 5000u);
    EXPECT_EQ(c.n_values, 5000u);
}

TEST(Ccdf, ConventionalOfdmTracksRayleighApproximation)
{
    WaveformConfig cfg;
    cfg.spreading = Spreading::NONE;
    const auto c = estimate_ccdf(cfg, 50'000, threshold_grid(0.0, 14.0, 0.05), 3);
    const double t = c.threshold_at(1e-2);
    EXPECT_GE(t, oracle::ofdm_ccdf_threshold_db(1e-2, 1.0, 256) - 0.3);
    EXPECT_LE(t, oracle::ofdm_ccdf_threshold_db(1e-2, 2.8, 256) + 0.3);
}

TEST(Ccdf, MimoPoolsPerAntennaValues)
{
    WaveformConfig cfg;
    cfg.n_tx = 2;
    cfg.allocation = Allocation::INTERLEAVED_2TX;
    const auto c = estimate_ccdf(cfg, 2000, threshold_grid(0.0, 12.0, 0.5), 8);
    EXPECT_EQ(c.n_trials, 2000u);
    EXPECT_EQ(c.n_values, 4000u);
}

TEST(Ccdf, IndependentOfThreadsAndChunking)
{
    WaveformConfig cfg;
    const auto grid = threshold_grid(0.0, 12.0, 0.1);
    CcdfOptions one;
    one.threads = 1;
    CcdfOptions many;
    many.threads = 3;
    const auto a = estimate_ccdf(cfg, 9000, grid, 77, one);
    const auto b = estimate_ccdf(cfg, 9000, grid, 77, many);
    for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_EQ(a.points[i].exceedances, b.points[i].exceedances);
    std::ostringstream sa, sb;
    write_ccdf_csv(sa, a);
    write_ccdf_csv(sb, b);
    EXPECT_EQ(sa.str(), sb.str());
    EXPECT_EQ(sa.str().substr(0, 13), "papr_db,ccdf\n");
}

TEST(Ccdf, RejectsBadInput)
{
    WaveformConfig cfg;
    const auto grid = threshold_grid(0.0, 12.0, 0.1);
    EXPECT_THROW(estimate_ccdf(cfg, 999, grid, 1), ConfigError);
    const std::vector<double> bad{0.0, 1.0, 1.0};
    EXPECT_THROW(estimate_ccdf(cfg, 1000, bad, 1), ConfigError);
}

TEST(Ccdf, ThresholdInterpolation)
{
    CcdfCurve c;
    c.points = {{0.0, 1.0, 0}, {1.0, 0.5, 0}, {2.0, 0.1, 0}};
    EXPECT_NEAR(c.threshold_at(0.3), 1.5, 1e-12);
    EXPECT_TRUE(std::isnan(c.threshold_at(0.01)));
}

TEST(Ccdf, SidecarNamesTheSeed)
{
    WaveformConfig cfg;
    const auto c = estimate_ccdf(cfg, 1000, threshold_grid(0.0, 4.0, 1.0), 42);
    EXPECT_NE(ccdf_sidecar_json(c).find("\"seed\": 42"), std::string::npos);
}
