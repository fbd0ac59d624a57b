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

#include "jcsl/papr.hpp"

#include "jcsl/csv.hpp"
#include "jcsl/error.hpp"
#include "jcsl/fft.hpp"
#include "jcsl/modem.hpp"
#include "jcsl/parallel.hpp"

#include <nlohmann/json.hpp>

#include "config_json.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

namespace jcsl::papr {

namespace {

double papr_of(std::span<const cd> x)
{
    double peak = 0.0;
    double sum = 0.0;
    for (const auto& v : x) {
        const double p = std::norm(v);
        peak = std::max(peak, p);
        sum += p;
    }
    if (x.empty() || !(sum > 0.0)) throw NumericError("PAPR of a zero-energy symbol is undefined");
    return 10.0 * std::log10(peak * static_cast<double>(x.size()) / sum);
}

// Copies N subcarrier values into a zero-padded L*N spectrum in FFT order.
void pad_spectrum(std::span<const cd> bins, std::span<cd> padded)
{
    const std::size_t n = bins.size();
    const std::size_t total = padded.size();
    std::fill(padded.begin(), padded.end(), cd{});
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t dst = k < n / 2 ? k : total - n + k;
        padded[dst] = bins[k];
    }
}

} // namespace

double CcdfCurve::threshold_at(double probability) const
{
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].exceedance_probability <= probability) {
            if (i == 0) return points[0].papr_threshold_db;
            const auto& a = points[i - 1];
            const auto& b = points[i];
            const double frac =
                (a.exceedance_probability - probability) / (a.exceedance_probability - b.exceedance_probability);
            return a.papr_threshold_db + frac * (b.papr_threshold_db - a.papr_threshold_db);
        }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double papr_from_subcarriers_db(std::span<const cd> subcarriers, std::size_t oversampling_factor)
{
    if (subcarriers.empty()) throw NumericError("PAPR of an empty symbol is undefined");
    if (oversampling_factor == 0) throw ConfigError("oversampling_factor must be at least 1");
    const std::size_t total = subcarriers.size() * oversampling_factor;
    std::vector<cd> padded(total);
    pad_spectrum(subcarriers, padded);
    return papr_of(Fft(total, FftDirection::Inverse)(padded));
}

double papr_db(std::span<const cd> samples, std::size_t oversampling_factor)
{
    if (samples.empty()) throw NumericError("PAPR of an empty symbol is undefined");
    if (oversampling_factor == 1) return papr_of(samples);
    return papr_from_subcarriers_db(fft(samples), oversampling_factor);
}

std::vector<double> threshold_grid(double start_db, double stop_db, double step_db)
{
    if (!(step_db > 0.0) || !(stop_db >= start_db)) throw ConfigError("threshold grid needs step > 0 and stop >= start");
    std::vector<double> grid;
    const auto count = static_cast<std::size_t>(std::floor((stop_db - start_db) / step_db + 0.5)) + 1;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) grid.push_back(start_db + static_cast<double>(i) * step_db);
    return grid;
}

CcdfCurve estimate_ccdf(const WaveformConfig& cfg, std::uint64_t n_trials, std::span<const double> thresholds_db,
                        std::uint64_t seed, const CcdfOptions& opts)
{
    validate_config(cfg);
    if (n_trials < 1000) throw ConfigError("estimate_ccdf requires n_trials >= 10^3");
    if (thresholds_db.empty()) throw ConfigError("at least one threshold is required");
    if (std::adjacent_find(thresholds_db.begin(), thresholds_db.end(), std::greater_equal<>{}) != thresholds_db.end())
        throw ConfigError("thresholds must be strictly increasing");
    if (opts.trials_per_chunk == 0) throw ConfigError("trials_per_chunk must be positive");

    const std::size_t n = cfg.n_subcarriers;
    const std::size_t total = n * cfg.oversampling_factor;
    const std::uint64_t n_chunks = (n_trials + opts.trials_per_chunk - 1) / opts.trials_per_chunk;
    const auto points = modem::constellation(cfg.modulation);
    const int shift = 64 - modem::bits_per_symbol(cfg.modulation);

    std::vector<std::vector<std::size_t>> bins(cfg.n_tx);
    for (std::size_t a = 0; a < cfg.n_tx; ++a) bins[a] = occupied_bins(cfg, a);

    // hist[c][j]: values of chunk c exceeding exactly the first j thresholds.
    std::vector<std::vector<std::uint64_t>> hist(n_chunks);

    run_chunks(n_chunks, opts.threads, [&](std::size_t chunk) {
        auto rng = chunk_engine(seed, 0, chunk);
        const Fft idft(total, FftDirection::Inverse);
        std::vector<cd> data;
        std::vector<cd> spread;
        std::vector<cd> grid(n);
        std::vector<cd> padded(total);
        std::vector<cd> time(total);
        std::vector<std::uint64_t> h(thresholds_db.size() + 1, 0);
        std::vector<Fft> spreaders;
        for (const auto& occ : bins) spreaders.emplace_back(occ.size(), FftDirection::Forward);

        const std::uint64_t first = chunk * opts.trials_per_chunk;
        const std::uint64_t last = std::min<std::uint64_t>(first + opts.trials_per_chunk, n_trials);
        for (std::uint64_t t = first; t < last; ++t) {
            for (std::size_t a = 0; a < cfg.n_tx; ++a) {
                const auto& occ = bins[a];
                data.resize(occ.size());
                for (auto& s : data) s = points[rng() >> shift];
                if (cfg.spreading == Spreading::DFT_SPREAD) {
                    spread.resize(occ.size());
                    spreaders[a](data, spread);
                } else {
                    spread = data;
                }
                std::fill(grid.begin(), grid.end(), cd{});
                for (std::size_t q = 0; q < occ.size(); ++q) grid[occ[q]] = spread[q];
                pad_spectrum(grid, padded);
                idft(padded, time);
                const double v = papr_of(time);
                const auto j = static_cast<std::size_t>(
                    std::lower_bound(thresholds_db.begin(), thresholds_db.end(), v) - thresholds_db.begin());
                ++h[j];
            }
        }
        hist[chunk] = std::move(h);
    });

    std::vector<std::uint64_t> merged(thresholds_db.size() + 1, 0);
    for (const auto& h : hist)
        for (std::size_t j = 0; j < h.size(); ++j) merged[j] += h[j];

    CcdfCurve curve;
    curve.n_trials = n_trials;
    curve.n_values = n_trials * cfg.n_tx;
    curve.config = cfg;
    curve.seed = seed;
    curve.points.resize(thresholds_db.size());
    // Exceeding threshold i means falling in a histogram cell j > i.
    std::uint64_t above = 0;
    for (std::size_t i = thresholds_db.size(); i-- > 0;) {
        above += merged[i + 1];
        auto& p = curve.points[i];
        p.papr_threshold_db = thresholds_db[i];
        p.exceedances = above;
        p.exceedance_probability = static_cast<double>(above) / static_cast<double>(curve.n_values);
    }
    return curve;
}

double newman_papr_demo(std::size_t n_subcarriers, std::size_t oversampling_factor)
{
    if (n_subcarriers < 2) throw ConfigError("newman_papr_demo requires n >= 2");
    const auto phases = modem::newman_phases(n_subcarriers);
    std::vector<cd> bins(n_subcarriers);
    for (std::size_t k = 0; k < n_subcarriers; ++k) bins[k] = std::polar(1.0, phases[k]);
    return papr_from_subcarriers_db(bins, oversampling_factor);
}

double median_random_papr_db(std::size_t n_subcarriers, std::size_t trials, std::uint64_t seed,
                             std::size_t oversampling_factor)
{
    if (n_subcarriers < 2 || trials == 0) throw ConfigError("median_random_papr_db needs n >= 2 and trials > 0");
    auto rng = chunk_engine(seed, 0, 0);
    const auto points = modem::constellation(Modulation::PSK8);
    std::vector<double> values(trials);
    std::vector<cd> bins(n_subcarriers);
    for (auto& v : values) {
        for (auto& b : bins) b = points[rng() >> 61];
        v = papr_from_subcarriers_db(bins, oversampling_factor);
    }
    const auto mid = values.begin() + static_cast<std::ptrdiff_t>(trials / 2);
    std::nth_element(values.begin(), mid, values.end());
    if (trials % 2 == 1) return *mid;
    const double upper = *mid;
    const double lower = *std::max_element(values.begin(), mid);
    return 0.5 * (lower + upper);
}

void write_ccdf_csv(std::ostream& os, const CcdfCurve& curve)
{
    os << "papr_db,ccdf\n";
    for (const auto& p : curve.points) os << csv::num(p.papr_threshold_db) << ',' << csv::num(p.exceedance_probability) << '\n';
}

std::string ccdf_sidecar_json(const CcdfCurve& curve)
{
    nlohmann::json j;
    j["config"] = detail::config_as_json(curve.config);
    j["seed"] = curve.seed;
    j["n_trials"] = curve.n_trials;
    j["n_values"] = curve.n_values;
    return j.dump(2);
}

} // namespace jcsl::papr
