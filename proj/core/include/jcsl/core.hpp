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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace jcsl {

using cd = std::complex<double>;

// Exact SI value.
inline constexpr double kSpeedOfLight = 299'792'458.0;

enum class Modulation { BPSK, QPSK, PSK8, QAM16 };
enum class Spreading { NONE, DFT_SPREAD };
enum class Allocation { FULL, INTERLEAVED_2TX };

std::string_view to_string(Modulation m);
std::string_view to_string(Spreading s);
std::string_view to_string(Allocation a);
Modulation modulation_from_string(std::string_view s);
Spreading spreading_from_string(std::string_view s);
Allocation allocation_from_string(std::string_view s);

/// Waveform parameters shared by every module. Defaults are the 256-subcarrier,
/// 15 kHz, 8-PSK DFT-spread setup with a cyclic prefix covering 2 km.
struct WaveformConfig {
    std::size_t n_subcarriers = 256;
    double subcarrier_spacing_hz = 15e3;
    std::size_t cp_samples = 52;
    Modulation modulation = Modulation::PSK8;
    Spreading spreading = Spreading::DFT_SPREAD;
    std::size_t n_symbols_per_frame = 1;
    std::size_t n_tx = 1;
    Allocation allocation = Allocation::FULL;
    std::size_t oversampling_factor = 4;

    bool operator==(const WaveformConfig&) const = default;
};

/// Quantities derived from a WaveformConfig. All durations include the cyclic
/// prefix only where the name says "total".
struct TimingBudget {
    double sampling_rate_hz = 0.0;
    double useful_symbol_duration_s = 0.0;
    double total_symbol_duration_s = 0.0;
    double bandwidth_hz = 0.0;
    double range_resolution_m = 0.0;
    double max_cp_range_m = 0.0;
    double doppler_resolution_hz = 0.0;

    bool operator==(const TimingBudget&) const = default;
};

struct BasebandSignal {
    std::vector<cd> samples;
    double sampling_rate_hz = 0.0;

    double energy() const;
    double mean_power() const;
};

/// Throws ConfigError naming the first violated invariant; returns cfg otherwise.
WaveformConfig validate_config(const WaveformConfig& cfg);

TimingBudget derive_timing(const WaveformConfig& cfg);

/// Smallest CP sample count whose duration covers the round trip to max_range_m.
/// The cp field of cfg is ignored. Throws ConfigError if the result is not below N.
std::size_t cp_for_max_range(double max_range_m, const WaveformConfig& cfg);

/// Signed frequency index of FFT bin k: k for k < N/2, k - N otherwise.
inline long signed_bin(std::size_t k, std::size_t n)
{
    return k < n / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n);
}

/// Strict JSON ingestion: keys must be WaveformConfig field names. Missing keys
/// keep their defaults; unknown keys throw ConfigError.
WaveformConfig parse_config_json(std::string_view text);
std::string config_to_json(const WaveformConfig& cfg, int indent = 2);

/// Occupied subcarriers of antenna `tx` in ascending order.
std::vector<std::size_t> occupied_bins(const WaveformConfig& cfg, std::size_t tx);

} // namespace jcsl
