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

#include "jcsl/core.hpp"

#include "config_json.hpp"
#include "jcsl/error.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numeric>

namespace jcsl {

std::string_view to_string(Modulation m)
{
    switch (m) {
    case Modulation::BPSK: return "BPSK";
    case Modulation::QPSK: return "QPSK";
    case Modulation::PSK8: return "PSK8";
    case Modulation::QAM16: return "QAM16";
    }
    return "?";
}

std::string_view to_string(Spreading s)
{
    return s == Spreading::NONE ? "NONE" : "DFT_SPREAD";
}

std::string_view to_string(Allocation a)
{
    return a == Allocation::FULL ? "FULL" : "INTERLEAVED_2TX";
}

Modulation modulation_from_string(std::string_view s)
{
    for (auto m : {Modulation::BPSK, Modulation::QPSK, Modulation::PSK8, Modulation::QAM16})
        if (to_string(m) == s) return m;
    throw ConfigError("unknown modulation '" + std::string(s) + "'");
}

Spreading spreading_from_string(std::string_view s)
{
    for (auto v : {Spreading::NONE, Spreading::DFT_SPREAD})
        if (to_string(v) == s) return v;
    throw ConfigError("unknown spreading '" + std::string(s) + "'");
}

Allocation allocation_from_string(std::string_view s)
{
    for (auto v : {Allocation::FULL, Allocation::INTERLEAVED_2TX})
        if (to_string(v) == s) return v;
    throw ConfigError("unknown allocation '" + std::string(s) + "'");
}

double BasebandSignal::energy() const
{
    double e = 0.0;
    for (const auto& s : samples) e += std::norm(s);
    return e;
}

double BasebandSignal::mean_power() const
{
    return samples.empty() ? 0.0 : energy() / static_cast<double>(samples.size());
}

WaveformConfig validate_config(const WaveformConfig& cfg)
{
    if (cfg.n_subcarriers == 0) throw ConfigError("n_subcarriers must be positive");
    if (!std::has_single_bit(cfg.n_subcarriers)) throw ConfigError("n_subcarriers not a power of two");
    if (!(cfg.subcarrier_spacing_hz > 0.0) || !std::isfinite(cfg.subcarrier_spacing_hz))
        throw ConfigError("subcarrier_spacing_hz must be positive");
    if (cfg.cp_samples >= cfg.n_subcarriers) throw ConfigError("cp_samples must be less than n_subcarriers");
    if (cfg.n_symbols_per_frame == 0) throw ConfigError("n_symbols_per_frame must be positive");
    if (cfg.n_tx != 1 && cfg.n_tx != 2) throw ConfigError("n_tx must be 1 or 2");
    if (cfg.allocation == Allocation::INTERLEAVED_2TX) {
        if (cfg.n_tx != 2) throw ConfigError("INTERLEAVED_2TX allocation requires n_tx = 2");
        if (cfg.n_subcarriers % 2 != 0) throw ConfigError("INTERLEAVED_2TX allocation requires even n_subcarriers");
    }
    if (cfg.oversampling_factor == 0) throw ConfigError("oversampling_factor must be at least 1");
    return cfg;
}

TimingBudget derive_timing(const WaveformConfig& cfg)
{
    validate_config(cfg);
    const auto n = static_cast<double>(cfg.n_subcarriers);
    const auto cp = static_cast<double>(cfg.cp_samples);
    const auto m = static_cast<double>(cfg.n_symbols_per_frame);

    TimingBudget t;
    t.sampling_rate_hz = n * cfg.subcarrier_spacing_hz;
    t.useful_symbol_duration_s = 1.0 / cfg.subcarrier_spacing_hz;
    t.total_symbol_duration_s = (n + cp) / t.sampling_rate_hz;
    t.bandwidth_hz = t.sampling_rate_hz;
    t.range_resolution_m = kSpeedOfLight / (2.0 * t.bandwidth_hz);
    t.max_cp_range_m = kSpeedOfLight * (cp / t.sampling_rate_hz) / 2.0;
    t.doppler_resolution_hz = 1.0 / (m * t.total_symbol_duration_s);
    return t;
}

std::size_t cp_for_max_range(double max_range_m, const WaveformConfig& cfg)
{
    if (!(max_range_m >= 0.0) || !std::isfinite(max_range_m)) throw ConfigError("max_range_m must be non-negative");
    WaveformConfig probe = cfg;
    probe.cp_samples = 0;
    validate_config(probe);

    const double fs = static_cast<double>(cfg.n_subcarriers) * cfg.subcarrier_spacing_hz;
    auto cp = static_cast<std::size_t>(std::ceil(2.0 * max_range_m / kSpeedOfLight * fs));
    // ceil() of a product can land one above the minimum through rounding.
    while (cp > 0 && kSpeedOfLight * (static_cast<double>(cp - 1) / fs) / 2.0 >= max_range_m) --cp;
    while (kSpeedOfLight * (static_cast<double>(cp) / fs) / 2.0 < max_range_m) ++cp;
    if (cp >= cfg.n_subcarriers)
        throw ConfigError("required cp of " + std::to_string(cp) + " samples is not below n_subcarriers");
    return cp;
}

std::vector<std::size_t> occupied_bins(const WaveformConfig& cfg, std::size_t tx)
{
    if (tx >= cfg.n_tx) throw DimensionError("antenna index out of range");
    std::vector<std::size_t> bins;
    if (cfg.allocation == Allocation::INTERLEAVED_2TX) {
        for (std::size_t k = tx; k < cfg.n_subcarriers; k += 2) bins.push_back(k);
    } else {
        bins.resize(cfg.n_subcarriers);
        std::iota(bins.begin(), bins.end(), std::size_t{0});
    }
    return bins;
}

namespace detail {

namespace {
constexpr std::array<std::string_view, 9> kWaveformKeys = {
    "n_subcarriers",       "subcarrier_spacing_hz", "cp_samples", "modulation",         "spreading",
    "n_symbols_per_frame", "n_tx",                  "allocation", "oversampling_factor",
};

std::size_t get_count(const nlohmann::json& v, const char* key)
{
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ConfigError(std::string(key) + " must be a non-negative integer");
    return v.get<std::size_t>();
}
} // namespace

bool is_waveform_key(std::string_view key)
{
    for (auto k : kWaveformKeys)
        if (k == key) return true;
    return false;
}

WaveformConfig config_from_json(const nlohmann::json& j)
{
    if (!j.is_object()) throw ConfigError("waveform config must be a JSON object");
    WaveformConfig cfg;
    for (const auto& [key, v] : j.items()) {
        if (key == "n_subcarriers") cfg.n_subcarriers = get_count(v, "n_subcarriers");
        else if (key == "subcarrier_spacing_hz") {
            if (!v.is_number()) throw ConfigError("subcarrier_spacing_hz must be a number");
            cfg.subcarrier_spacing_hz = v.get<double>();
        }
        else if (key == "cp_samples") cfg.cp_samples = get_count(v, "cp_samples");
        else if (key == "modulation") {
            if (!v.is_string()) throw ConfigError("modulation must be a string");
            cfg.modulation = modulation_from_string(v.get<std::string>());
        }
        else if (key == "spreading") {
            if (!v.is_string()) throw ConfigError("spreading must be a string");
            cfg.spreading = spreading_from_string(v.get<std::string>());
        }
        else if (key == "n_symbols_per_frame") cfg.n_symbols_per_frame = get_count(v, "n_symbols_per_frame");
        else if (key == "n_tx") cfg.n_tx = get_count(v, "n_tx");
        else if (key == "allocation") {
            if (!v.is_string()) throw ConfigError("allocation must be a string");
            cfg.allocation = allocation_from_string(v.get<std::string>());
        }
        else if (key == "oversampling_factor") cfg.oversampling_factor = get_count(v, "oversampling_factor");
        else throw ConfigError("unknown config key '" + key + "'");
    }
    return validate_config(cfg);
}

nlohmann::json config_as_json(const WaveformConfig& cfg)
{
    nlohmann::json j;
    j["n_subcarriers"] = cfg.n_subcarriers;
    j["subcarrier_spacing_hz"] = cfg.subcarrier_spacing_hz;
    j["cp_samples"] = cfg.cp_samples;
    j["modulation"] = std::string(to_string(cfg.modulation));
    j["spreading"] = std::string(to_string(cfg.spreading));
    j["n_symbols_per_frame"] = cfg.n_symbols_per_frame;
    j["n_tx"] = cfg.n_tx;
    j["allocation"] = std::string(to_string(cfg.allocation));
    j["oversampling_factor"] = cfg.oversampling_factor;
    return j;
}

} // namespace detail

WaveformConfig parse_config_json(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("malformed config JSON: ") + e.what());
    }
    return detail::config_from_json(j);
}

std::string config_to_json(const WaveformConfig& cfg, int indent)
{
    return detail::config_as_json(cfg).dump(indent);
}

} // namespace jcsl
