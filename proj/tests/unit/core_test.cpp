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

#include <jcsl/core.hpp>
#include <jcsl/error.hpp>
#include <jcsl/fft.hpp>
#include <jcsl/parallel.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace jcsl;

namespace {

WaveformConfig reference_config()
{
    WaveformConfig cfg;
    cfg.n_subcarriers = 256;
    cfg.subcarrier_spacing_hz = 15e3;
    cfg.cp_samples = 52;
    cfg.modulation = Modulation::PSK8;
    return cfg;
}

} // namespace

TEST(ValidateConfig, AcceptsReferenceSetup)
{
    const auto cfg = reference_config();
    EXPECT_EQ(validate_config(cfg), cfg);
}

TEST(ValidateConfig, RejectsNonPowerOfTwo)
{
    auto cfg = reference_config();
    cfg.n_subcarriers = 255;
    try {
        validate_config(cfg);
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        EXPECT_STREQ(e.what(), "n_subcarriers not a power of two");
    }
}

TEST(ValidateConfig, InterleavingNeedsTwoAntennas)
{
    auto cfg = reference_config();
    cfg.allocation = Allocation::INTERLEAVED_2TX;
    cfg.n_tx = 1;
    EXPECT_THROW(validate_config(cfg), ConfigError);
    cfg.n_tx = 2;
    EXPECT_NO_THROW(validate_config(cfg));
}

TEST(ValidateConfig, OtherInvariants)
{
    auto cfg = reference_config();
    cfg.cp_samples = 256;
    EXPECT_THROW(validate_config(cfg), ConfigError);
    cfg = reference_config();
    cfg.oversampling_factor = 0;
    EXPECT_THROW(validate_config(cfg), ConfigError);
    cfg = reference_config();
    cfg.n_tx = 3;
    EXPECT_THROW(validate_config(cfg), ConfigError);
    cfg = reference_config();
    cfg.subcarrier_spacing_hz = -1.0;
    EXPECT_THROW(validate_config(cfg), ConfigError);
}

TEST(DeriveTiming, ReferenceNumerology)
{
    auto cfg = reference_config();
    cfg.n_symbols_per_frame = 64;
    const auto t = derive_timing(cfg);
    EXPECT_DOUBLE_EQ(t.sampling_rate_hz, 3.84e6);
    EXPECT_DOUBLE_EQ(t.bandwidth_hz, 3.84e6);
    EXPECT_NEAR(t.useful_symbol_duration_s, 66.6667e-6, 1e-10);
    EXPECT_NEAR(t.range_resolution_m, 39.0355, 1e-4);
    EXPECT_NEAR(t.max_cp_range_m, 2029.845, 1e-3);
    EXPECT_GE(t.max_cp_range_m, 2000.0);
    EXPECT_NEAR(t.total_symbol_duration_s, 80.2083e-6, 1e-10);
    EXPECT_NEAR(t.doppler_resolution_hz, 194.805, 1e-3);
    // N range bins span the unambiguous processed range.
    EXPECT_NEAR(t.range_resolution_m * 256, kSpeedOfLight / (2.0 * cfg.subcarrier_spacing_hz), 1e-6);
}

TEST(DeriveTiming, ZeroCpHasZeroRange)
{
    auto cfg = reference_config();
    cfg.cp_samples = 0;
    EXPECT_EQ(derive_timing(cfg).max_cp_range_m, 0.0);
}

TEST(DeriveTiming, IsPure)
{
    const auto a = derive_timing(reference_config());
    const auto b = derive_timing(reference_config());
    EXPECT_EQ(a, b);
}

TEST(CpForMaxRange, Examples)
{
    const auto cfg = reference_config();
    EXPECT_EQ(cp_for_max_range(2000.0, cfg), 52u);
    EXPECT_EQ(cp_for_max_range(0.0, cfg), 0u);
    EXPECT_THROW(cp_for_max_range(10'000.0, cfg), ConfigError);
    EXPECT_THROW(cp_for_max_range(-1.0, cfg), ConfigError);
}

TEST(CpForMaxRange, CoversRangeAndIsMinimal)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> range(0.0, 9'500.0);
    auto cfg = reference_config();
    for (int i = 0; i < 2000; ++i) {
        const double r = range(rng);
        cfg.cp_samples = cp_for_max_range(r, cfg);
        EXPECT_GE(derive_timing(cfg).max_cp_range_m, r);
        if (cfg.cp_samples > 0) {
            --cfg.cp_samples;
            EXPECT_LT(derive_timing(cfg).max_cp_range_m, r);
        }
    }
}

TEST(ConfigJson, StrictParsing)
{
    const auto cfg = parse_config_json(R"({"n_subcarriers": 128, "modulation": "QAM16", "spreading": "NONE",
                                            "n_tx": 2, "allocation": "INTERLEAVED_2TX", "cp_samples": 9})");
    EXPECT_EQ(cfg.n_subcarriers, 128u);
    EXPECT_EQ(cfg.modulation, Modulation::QAM16);
    EXPECT_EQ(cfg.spreading, Spreading::NONE);
    EXPECT_EQ(cfg.allocation, Allocation::INTERLEAVED_2TX);
    EXPECT_EQ(parse_config_json(config_to_json(cfg)), cfg);

    EXPECT_THROW(parse_config_json(R"({"n_subcarrier": 128})"), ConfigError);
    EXPECT_THROW(parse_config_json(R"({"modulation": "PSK16"})"), ConfigError);
    EXPECT_THROW(parse_config_json(R"({"n_subcarriers": -4})"), ConfigError);
    EXPECT_THROW(parse_config_json(R"({"n_subcarriers": 100})"), ConfigError);
    EXPECT_THROW(parse_config_json("{"), ConfigError);
}

TEST(OccupiedBins, InterleavedSetsPartitionTheBand)
{
    auto cfg = reference_config();
    cfg.n_tx = 2;
    cfg.allocation = Allocation::INTERLEAVED_2TX;
    const auto even = occupied_bins(cfg, 0);
    const auto odd = occupied_bins(cfg, 1);
    std::vector<int> hits(cfg.n_subcarriers, 0);
    for (auto k : even) hits[k] += 1;
    for (auto k : odd) hits[k] += 1;
    for (int h : hits) EXPECT_EQ(h, 1);
    for (auto k : even) EXPECT_EQ(k % 2, 0u);
}

TEST(Fft, MatchesNaiveDftForOddAndPowerOfTwoSizes)
{
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (std::size_t n : {1u, 7u, 64u, 100u}) {
        std::vector<cd> x(n);
        for (auto& v : x) v = cd(g(rng), g(rng));
        EXPECT_LT(oracle::relative_error(fft(x), oracle::naive_dft(x, -1)), 1e-12) << n;
        EXPECT_LT(oracle::relative_error(ifft(x), oracle::naive_dft(x, +1)), 1e-12) << n;
    }
}

TEST(Parallel, ChunkEngineIndependentOfThreads)
{
    std::vector<std::uint64_t> one(37), many(37);
    run_chunks(37, 1, [&](std::size_t c) { one[c] = chunk_engine(5, 2, c)(); });
    run_chunks(37, 4, [&](std::size_t c) { many[c] = chunk_engine(5, 2, c)(); });
    EXPECT_EQ(one, many);
    EXPECT_NE(chunk_engine(5, 2, 0)(), chunk_engine(5, 2, 1)());
    EXPECT_NE(chunk_engine(5, 2, 0)(), chunk_engine(6, 2, 0)());
}

TEST(Parallel, PropagatesExceptions)
{
    EXPECT_THROW(run_chunks(10, 3,
                            [](std::size_t c) {
                                if (c == 4) throw NumericError("boom");
                            }),
                 NumericError);
}
