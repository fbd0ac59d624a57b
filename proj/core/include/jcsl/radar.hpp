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

#include "jcsl/core.hpp"
#include "jcsl/modem.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace jcsl::radar {

/// Toolkit default carrier for example scenes (small-radar band).
inline constexpr double kDefaultCarrierHz = 24e9;
/// Documented DME-style fixed transponder delay.
inline constexpr double kDmeProcessingDelayS = 50e-6;

struct Target {
    double range_m = 0.0;
    double radial_velocity_mps = 0.0;
    cd amplitude{1.0, 0.0};
};

struct TargetScene {
    double carrier_frequency_hz = kDefaultCarrierHz;
    std::vector<Target> targets;

    /// Human-readable warnings for targets the channel model cannot represent
    /// faithfully (beyond the CP range). Empty when the scene is in range.
    std::vector<std::string> warnings(const WaveformConfig& cfg) const;
};

enum class Window { NONE, HANN };
Window window_from_string(std::string_view s);
std::string_view to_string(Window w);

/// |range profile| over (range_bin 0..N-1) x (doppler_bin 0..M-1). Normalized so
/// that a bin-centered target of amplitude a peaks at |a|.
struct RangeDopplerMap {
    std::size_t n_range = 0;
    std::size_t n_doppler = 0;
    std::vector<double> magnitude; ///< index range_bin * n_doppler + doppler_bin
    double range_bin_size_m = 0.0;
    double doppler_bin_size_hz = 0.0;
    double velocity_per_bin_mps = 0.0;

    double at(std::size_t range_bin, std::size_t doppler_bin) const
    {
        return magnitude[range_bin * n_doppler + doppler_bin];
    }
    /// Doppler bins at or above M/2 represent negative velocities.
    double velocity_of_bin(std::size_t doppler_bin) const;
};

struct Detection {
    std::size_t range_bin = 0;
    std::size_t doppler_bin = 0;
    double range_m = 0.0;
    double velocity_mps = 0.0;
    double magnitude = 0.0;
};

/// Subcarrier-domain point-target channel:
///   rx(k,l) = sum_t a_t tx(k,l) exp(-j2pi f_k df tau_t) exp(+j2pi fD_t l T)
/// with tau = 2R/c, fD = 2 v fc / c, f_k the signed bin index and T the
/// CP-inclusive symbol duration. Each transmit antenna layer passes through the
/// channel independently.
modem::SymbolFrame apply_target_channel(const modem::SymbolFrame& tx_frame, const TargetScene& scene,
                                        const WaveformConfig& cfg);

/// rx/tx on occupied bins, optional window, IFFT over subcarriers and FFT over
/// symbols. `antenna` selects one transmit layer; by default every bin is
/// divided by whichever antenna occupies it. Throws NumericError if an
/// occupied tx entry is exactly zero.
RangeDopplerMap range_doppler_map(const modem::SymbolFrame& tx_frame, const modem::SymbolFrame& rx_frame,
                                  const WaveformConfig& cfg, Window window = Window::NONE,
                                  double carrier_frequency_hz = kDefaultCarrierHz,
                                  std::optional<std::size_t> antenna = std::nullopt);

/// |sum_n rx[n + lag] conj(ref[n])| / ||ref||^2 for lag = 0..rx.size()-1,
/// rx zero-padded past its end. rx == ref gives 1 at lag 0.
std::vector<double> matched_filter_time(const BasebandSignal& rx, const BasebandSignal& ref);

/// Circular complex Gaussian noise at per-sample SNR relative to the signal's
/// mean power. snr_db = +inf returns the input unchanged.
BasebandSignal add_awgn(const BasebandSignal& signal, double snr_db, std::uint64_t seed);

/// Local maxima (8-neighbourhood, wrapping on both axes) no more than
/// threshold_db below the global maximum (20 log10 of magnitude), strongest first.
std::vector<Detection> extract_peaks(const RangeDopplerMap& map, double threshold_db_below_max,
                                     std::size_t max_peaks);

/// c (t_rt - t_proc) / 2. Throws NumericError for a negative compensated time.
double round_trip_range(double round_trip_time_s, double fixed_processing_delay_s = kDmeProcessingDelayS);

/// Long format `range_bin,doppler_bin,magnitude_db`.
void write_range_doppler_csv(std::ostream& os, const RangeDopplerMap& map);
std::string detections_json(const std::vector<Detection>& detections);

} // namespace jcsl::radar
