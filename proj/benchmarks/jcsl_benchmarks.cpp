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

#include <jcsl/fft.hpp>
#include <jcsl/modem.hpp>
#include <jcsl/papr.hpp>
#include <jcsl/radar.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace jcsl;

static void BM_Fft(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    Fft plan(n, FftDirection::Forward);
    std::vector<cd> in(n, cd(1.0, 0.5)), out(n);
    for (auto _ : state) {
        plan(in, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Fft)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_CcdfTrials(benchmark::State& state)
{
    WaveformConfig cfg;
    cfg.spreading = state.range(0) ? Spreading::DFT_SPREAD : Spreading::NONE;
    const auto grid = papr::threshold_grid(0.0, 14.0, 0.1);
    papr::CcdfOptions opts;
    opts.threads = 1;
    std::uint64_t seed = 1;
    for (auto _ : state) {
        auto curve = papr::estimate_ccdf(cfg, 4096, grid, seed++, opts);
        benchmark::DoNotOptimize(curve.points.data());
    }
    state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_CcdfTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_RangeDopplerMap(benchmark::State& state)
{
    WaveformConfig cfg;
    cfg.n_symbols_per_frame = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(3);
    const auto tx = modem::spread_frame(modem::random_frame(cfg, rng), cfg);
    radar::TargetScene scene;
    scene.targets.push_back({500.0, 12.0, cd(1.0, 0.0)});
    const auto rx = radar::apply_target_channel(tx, scene, cfg);
    for (auto _ : state) {
        auto map = radar::range_doppler_map(tx, rx, cfg, radar::Window::HANN);
        benchmark::DoNotOptimize(map.magnitude.data());
    }
}
BENCHMARK(BM_RangeDopplerMap)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
