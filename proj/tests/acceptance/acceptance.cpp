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

// Acceptance suite. Run with a criterion number (1-8) or with no argument to
// run all of them; prints one PASS/FAIL line per criterion.

#include <jcsl/beamforming.hpp>
#include <jcsl/modem.hpp>
#include <jcsl/papr.hpp>
#include <jcsl/radar.hpp>
#include <jcsl/scenario.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace jcsl;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

WaveformConfig reference_waveform(Spreading s)
{
    WaveformConfig cfg;
    cfg.n_subcarriers = 256;
    cfg.subcarrier_spacing_hz = 15e3;
    cfg.cp_samples = 52;
    cfg.modulation = Modulation::PSK8;
    cfg.spreading = s;
    cfg.oversampling_factor = 4;
    return cfg;
}

double ccdf_at(const papr::CcdfCurve& c, double threshold)
{
    for (const auto& p : c.points)
        if (std::abs(p.papr_threshold_db - threshold) < 1e-9) return p.exceedance_probability;
    return std::nan("");
}

Outcome papr_tail()
{
    const auto cfg = reference_waveform(Spreading::DFT_SPREAD);
    const auto grid = papr::threshold_grid(0.0, 12.0, 0.05);
    const auto c = papr::estimate_ccdf(cfg, 2'000'000, grid, 2024);
    const double p8 = ccdf_at(c, 8.0);
    return {p8 <= 3e-5, fmt("DFT-s-OFDM CCDF(8 dB) = %.3e over %llu symbols (limit 3e-5); 1e-5 reached at %.2f dB", p8,
                            static_cast<unsigned long long>(c.n_values), c.threshold_at(1e-5))};
}

Outcome papr_gap()
{
    const auto grid = papr::threshold_grid(0.0, 14.0, 0.01);
    const auto ofdm = papr::estimate_ccdf(reference_waveform(Spreading::NONE), 1'000'000, grid, 11);
    const auto dfts = papr::estimate_ccdf(reference_waveform(Spreading::DFT_SPREAD), 1'000'000, grid, 12);
    const double t_ofdm = ofdm.threshold_at(1e-3);
    const double t_dfts = dfts.threshold_at(1e-3);
    const double lo = oracle::ofdm_ccdf_threshold_db(1e-3, 1.0, 256);
    const double hi = oracle::ofdm_ccdf_threshold_db(1e-3, 2.8, 256);
    const bool pass = t_ofdm >= 10.5 && t_ofdm <= 11.8 && t_ofdm - t_dfts >= 2.5;
    return {pass, fmt("OFDM 1e-3 at %.2f dB (window [10.5, 11.8], analytic %.2f..%.2f), DFT-s-OFDM %.2f dB, gap %.2f dB",
                      t_ofdm, lo, hi, t_dfts, t_ofdm - t_dfts)};
}

Outcome mimo_consistency()
{
    const auto grid = papr::threshold_grid(0.0, 13.0, 0.05);
    std::string detail;
    bool pass = true;
    for (auto s : {Spreading::NONE, Spreading::DFT_SPREAD}) {
        auto mimo_cfg = reference_waveform(s);
        mimo_cfg.n_tx = 2;
        mimo_cfg.allocation = Allocation::INTERLEAVED_2TX;
        auto siso_cfg = reference_waveform(s);
        siso_cfg.n_subcarriers = 128;
        const auto mimo = papr::estimate_ccdf(mimo_cfg, 200'000, grid, 31);
        const auto siso = papr::estimate_ccdf(siso_cfg, 400'000, grid, 32);
        const double n1 = static_cast<double>(mimo.n_values);
        const double n2 = static_cast<double>(siso.n_values);
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double p1 = mimo.points[i].exceedance_probability;
            const double p2 = siso.points[i].exceedance_probability;
            const double pooled = (p1 * n1 + p2 * n2) / (n1 + n2);
            const double sigma = std::sqrt(pooled * (1.0 - pooled) * (1.0 / n1 + 1.0 / n2));
            const double z = sigma > 0.0 ? std::abs(p1 - p2) / sigma : (p1 == p2 ? 0.0 : INFINITY);
            worst = std::max(worst, z);
        }
        pass = pass && worst <= 3.0;
        detail += fmt("%s max |z| = %.2f; ", s == Spreading::NONE ? "OFDM" : "DFT-s-OFDM", worst);
    }
    return {pass, detail + "bound 3 sigma at every threshold"};
}

Outcome array_baseline()
{
    std::vector<double> angles;
    for (int i = 0; i < 3600; ++i) angles.push_back(0.1 * i);
    const auto c = beam::array_factor_curves(3, 0.5, 5.2, 90.0, angles);
    const double peak = *std::max_element(c.aaf.gain_db.begin(), c.aaf.gain_db.end());
    const auto sll = beam::sidelobe_level(c.aaf);
    const bool pass = std::abs(peak - 9.97) <= 0.05 && sll && std::abs(*sll + 4.77) <= 0.3;
    return {pass, fmt("peak AAF %.3f dBi (9.97 +/- 0.05), sidelobe level %.3f dB (-4.77 +/- 0.3)", peak,
                      sll ? *sll : NAN)};
}

Outcome beamforming_bound()
{
    std::mt19937_64 rng(55);
    std::normal_distribution<double> g;
    std::vector<beam::PortPatternSet> sets{beam::synthetic_fixture()};
    for (int s = 0; s < 100; ++s) {
        auto angles = beam::azimuth_grid(5.0);
        std::vector<beam::Port> ports;
        for (int p = 0; p < 3; ++p) {
            beam::Port port{"p" + std::to_string(p), {}};
            for (std::size_t i = 0; i < angles.size(); ++i) port.field.emplace_back(g(rng), g(rng));
            ports.push_back(std::move(port));
        }
        sets.emplace_back(std::move(angles), std::move(ports));
    }

    std::uint64_t cases = 0, wins = 0;
    for (const auto& set : sets) {
        const std::size_t idx = static_cast<std::size_t>(rng() % set.n_angles());
        const auto e = set.field_vector(idx);
        auto gain = [&](const beam::BeamWeights& w) {
            cd sum{};
            for (std::size_t p = 0; p < e.size(); ++p) sum += w.values()[p] * e[p];
            return std::norm(sum);
        };
        const double best = gain(beam::optimize_weights(set, set.angles_deg()[idx]));
        for (int t = 0; t < 1000; ++t) {
            std::vector<cd> w(set.n_ports());
            for (auto& v : w) v = cd(g(rng), g(rng));
            ++cases;
            if (best >= gain(beam::BeamWeights(std::move(w)))) ++wins;
        }
    }
    return {wins == cases, fmt("optimized weights beat %llu of %llu random draws over %zu pattern sets",
                               static_cast<unsigned long long>(wins), static_cast<unsigned long long>(cases),
                               sets.size())};
}

Outcome radar_closed_loop()
{
    WaveformConfig cfg = reference_waveform(Spreading::DFT_SPREAD);
    cfg.n_symbols_per_frame = 64;
    const auto timing = derive_timing(cfg);
    const double v_bin = kSpeedOfLight * timing.doppler_resolution_hz / (2.0 * radar::kDefaultCarrierHz);
    std::mt19937_64 rng(77);
    const auto tx = modem::spread_frame(modem::random_frame(cfg, rng), cfg);

    radar::TargetScene one;
    one.targets.push_back({25.0 * timing.range_resolution_m, 10.0 * v_bin, cd(1.0)});
    const auto map = radar::range_doppler_map(tx, radar::apply_target_channel(tx, one, cfg), cfg);
    const auto imax = static_cast<std::size_t>(std::max_element(map.magnitude.begin(), map.magnitude.end()) -
                                               map.magnitude.begin());
    const bool bin_ok = imax / map.n_doppler == 25 && imax % map.n_doppler == 10;

    // Integer delay against the time-domain oracle.
    const std::size_t d = 31;
    radar::TargetScene delayed;
    delayed.targets.push_back({static_cast<double>(d) * timing.range_resolution_m, 0.0, cd(1.0)});
    const auto rx_sig = modem::modulate_subcarriers(radar::apply_target_channel(tx, delayed, cfg), cfg)[0].samples;
    const auto shifted = oracle::delay_samples(modem::modulate_subcarriers(tx, cfg)[0].samples, d);
    const std::size_t len = cfg.n_subcarriers + cfg.cp_samples;
    double err = 0.0, ref = 0.0;
    for (std::size_t l = 0; l < cfg.n_symbols_per_frame; ++l)
        for (std::size_t i = l * len + d; i < (l + 1) * len; ++i) {
            err += std::norm(rx_sig[i] - shifted[i]);
            ref += std::norm(shifted[i]);
        }
    const double delay_err = std::sqrt(err / ref);

    radar::TargetScene a, b, ab;
    a.targets.push_back({612.5, 7.3, cd(0.8, -0.1)});
    b.targets.push_back({1500.0, -20.0, cd(-0.2, 0.5)});
    ab.targets = {a.targets[0], b.targets[0]};
    const auto ra = modem::symbols_from_frame(radar::apply_target_channel(tx, a, cfg));
    const auto rb = modem::symbols_from_frame(radar::apply_target_channel(tx, b, cfg));
    const auto rab = modem::symbols_from_frame(radar::apply_target_channel(tx, ab, cfg));
    std::vector<cd> sum(ra.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ra[i] + rb[i];
    const double lin_err = oracle::relative_error(rab, sum);

    const bool pass = bin_ok && delay_err <= 1e-9 && lin_err <= 1e-14;
    return {pass, fmt("peak at (%zu, %zu), expected (25, 10); delay oracle rel. error %.2e; linearity rel. error %.2e",
                      imax / map.n_doppler, imax % map.n_doppler, delay_err, lin_err)};
}

Outcome link_level()
{
    const auto cfg = reference_waveform(Spreading::DFT_SPREAD);
    const double ebn0 = 10.0;
    const double snr[] = {modem::esn0_from_ebn0_db(ebn0, Modulation::PSK8)};
    const auto r = modem::simulate_ber(cfg, snr, 10'000'000, 4242)[0];
    const double ref = oracle::psk8_ber_union_bound(std::pow(10.0, ebn0 / 10.0));
    const double rel = r.ber / ref - 1.0;
    return {std::abs(rel) <= 0.15, fmt("BER %.4e over %llu bits, union bound %.4e, relative deviation %+.2f%%", r.ber,
                                       static_cast<unsigned long long>(r.n_bits), ref, 100.0 * rel)};
}

std::string slurp(const fs::path& p)
{
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

Outcome determinism()
{
    const fs::path root = fs::temp_directory_path() / "jcsl_acceptance_determinism";
    fs::remove_all(root);
    struct Case {
        cli::Experiment experiment;
        const char* config;
    };
    const Case cases[] = {
        {cli::Experiment::papr_ccdf, R"({"n_trials": 20000, "n_tx": 2, "allocation": "INTERLEAVED_2TX"})"},
        {cli::Experiment::ber, R"({"n_bits": 200000, "snr_db_list": [4, 8, 12]})"},
        {cli::Experiment::doa, R"({"n_trials": 3000, "snr_db": 10})"},
        {cli::Experiment::radar_sim,
         R"({"n_symbols_per_frame": 32, "snr_db": 0, "targets": [{"range_m": 800, "radial_velocity_mps": 12}]})"},
    };
    std::size_t compared = 0;
    std::string mismatch;
    for (const auto& c : cases) {
        std::vector<fs::path> dirs;
        for (std::size_t threads : {1u, 2u, 4u, 1u}) {
            auto spec = cli::parse_scenario(c.experiment, c.config);
            spec.seed = 99;
            spec.threads = threads;
            spec.output_dir = root / std::string(cli::to_string(c.experiment)) / std::to_string(dirs.size());
            dirs.push_back(cli::run(spec).output_dir);
        }
        for (const auto& entry : fs::directory_iterator(dirs[0])) {
            if (entry.path().extension() != ".csv") continue;
            const auto name = entry.path().filename();
            for (std::size_t i = 1; i < dirs.size(); ++i) {
                ++compared;
                if (slurp(dirs[0] / name) != slurp(dirs[i] / name)) mismatch += name.string() + " ";
            }
        }
    }
    fs::remove_all(root);
    return {mismatch.empty() && compared > 0,
            fmt("%zu CSV comparisons across 1/2/4 threads and reruns; mismatches: %s", compared,
                mismatch.empty() ? "none" : mismatch.c_str())};
}

} // namespace

int main(int argc, char** argv)
{
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"PAPR tail", papr_tail},
        {"PAPR gap", papr_gap},
        {"MIMO consistency", mimo_consistency},
        {"array baseline", array_baseline},
        {"beamforming bound", beamforming_bound},
        {"radar closed loop", radar_closed_loop},
        {"link level", link_level},
        {"determinism", determinism},
    };
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > 8) {
            std::fprintf(stderr, "usage: %s [criterion 1-8]\n", argv[0]);
            return 2;
        }
    }
    int failures = 0;
    for (int i = 1; i <= 8; ++i) {
        if (only && i != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i - 1].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("C%d %-18s %s  %s  [%.1f s]\n", i, criteria[i - 1].first, o.pass ? "PASS" : "FAIL",
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
