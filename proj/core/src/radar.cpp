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

#include "jcsl/radar.hpp"

#include "jcsl/csv.hpp"
#include "jcsl/error.hpp"
#include "jcsl/fft.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

namespace jcsl::radar {

using modem::SymbolFrame;

std::vector<std::string> TargetScene::warnings(const WaveformConfig& cfg) const
{
    const double max_range = derive_timing(cfg).max_cp_range_m;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i].range_m > max_range) {
            out.push_back("target " + std::to_string(i) + " at " + std::to_string(targets[i].range_m) +
                          " m lies beyond the CP range of " + std::to_string(max_range) +
                          " m; inter-symbol interference is not modelled");
        }
    }
    return out;
}

Window window_from_string(std::string_view s)
{
    if (s == "NONE") return Window::NONE;
    if (s == "HANN") return Window::HANN;
    throw ConfigError("unknown window '" + std::string(s) + "'");
}

std::string_view to_string(Window w)
{
    return w == Window::NONE ? "NONE" : "HANN";
}

double RangeDopplerMap::velocity_of_bin(std::size_t doppler_bin) const
{
    return static_cast<double>(signed_bin(doppler_bin, n_doppler)) * velocity_per_bin_mps;
}

SymbolFrame apply_target_channel(const SymbolFrame& tx_frame, const TargetScene& scene, const WaveformConfig& cfg)
{
    tx_frame.check_matches(cfg);
    if (!(scene.carrier_frequency_hz > 0.0)) throw ConfigError("carrier_frequency_hz must be positive");
    for (const auto& t : scene.targets)
        if (!(t.range_m >= 0.0)) throw ConfigError("target range must be non-negative");

    const TimingBudget timing = derive_timing(cfg);
    const std::size_t n = cfg.n_subcarriers;
    const std::size_t m = cfg.n_symbols_per_frame;
    const double two_pi = 2.0 * std::numbers::pi;

    // Per-target transfer function H(k, l) = a exp(-j2pi fk df tau) exp(j2pi fD l T).
    std::vector<cd> h(n * m, cd{});
    for (const auto& t : scene.targets) {
        const double tau = 2.0 * t.range_m / kSpeedOfLight;
        const double fd = 2.0 * t.radial_velocity_mps * scene.carrier_frequency_hz / kSpeedOfLight;
        for (std::size_t l = 0; l < m; ++l) {
            const double doppler_phase = two_pi * fd * static_cast<double>(l) * timing.total_symbol_duration_s;
            for (std::size_t k = 0; k < n; ++k) {
                const double delay_phase =
                    -two_pi * static_cast<double>(signed_bin(k, n)) * cfg.subcarrier_spacing_hz * tau;
                h[l * n + k] += t.amplitude * std::polar(1.0, delay_phase + doppler_phase);
            }
        }
    }

    SymbolFrame rx = tx_frame;
    for (std::size_t a = 0; a < rx.n_antennas(); ++a)
        for (std::size_t l = 0; l < m; ++l)
            for (std::size_t k = 0; k < n; ++k) rx.at(a, k, l) = tx_frame.at(a, k, l) * h[l * n + k];
    return rx;
}

namespace {

std::vector<double> window_weights(Window w, std::size_t len)
{
    std::vector<double> out(len, 1.0);
    if (w == Window::HANN && len > 1) {
        for (std::size_t i = 0; i < len; ++i)
            out[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(len));
    }
    return out;
}

} // namespace

RangeDopplerMap range_doppler_map(const SymbolFrame& tx_frame, const SymbolFrame& rx_frame, const WaveformConfig& cfg,
                                  Window window, double carrier_frequency_hz, std::optional<std::size_t> antenna)
{
    tx_frame.check_matches(cfg);
    rx_frame.check_matches(cfg);
    if (!(carrier_frequency_hz > 0.0)) throw ConfigError("carrier_frequency_hz must be positive");
    if (antenna && *antenna >= tx_frame.n_antennas()) throw DimensionError("antenna index out of range");

    const std::size_t n = cfg.n_subcarriers;
    const std::size_t m = cfg.n_symbols_per_frame;

    // owner[k]: antenna whose layer is divided at bin k, or -1 if unused.
    std::vector<long> owner(n, -1);
    for (std::size_t a = 0; a < tx_frame.n_antennas(); ++a) {
        if (antenna && *antenna != a) continue;
        for (std::size_t k = 0; k < n; ++k)
            if (tx_frame.occupied(a, k) && owner[k] < 0) owner[k] = static_cast<long>(a);
    }

    // The window runs over the occupied bins in ascending frequency order.
    std::vector<std::size_t> used;
    for (std::size_t k = 0; k < n; ++k)
        if (owner[k] >= 0) used.push_back(k);
    std::sort(used.begin(), used.end(),
              [n](std::size_t x, std::size_t y) { return signed_bin(x, n) < signed_bin(y, n); });
    const auto range_window = window_weights(window, used.size());
    const auto doppler_window = window_weights(window, m);
    std::vector<double> wk(n, 0.0);
    double range_gain = 0.0;
    for (std::size_t i = 0; i < used.size(); ++i) {
        wk[used[i]] = range_window[i];
        range_gain += range_window[i];
    }
    double doppler_gain = 0.0;
    for (double v : doppler_window) doppler_gain += v;

    // Divided spectrum, then range profiles (IFFT over k) per symbol.
    const Fft idft(n, FftDirection::Inverse);
    std::vector<cd> profiles(n * m);
    std::vector<cd> ratio(n);
    for (std::size_t l = 0; l < m; ++l) {
        for (std::size_t k = 0; k < n; ++k) {
            ratio[k] = cd{};
            if (owner[k] < 0) continue;
            const auto a = static_cast<std::size_t>(owner[k]);
            const cd t = tx_frame.at(a, k, l);
            if (t == cd{}) throw NumericError("occupied transmit symbol is exactly zero; cannot divide");
            ratio[k] = rx_frame.at(a, k, l) / t * wk[k];
        }
        idft(ratio, std::span<cd>(profiles.data() + l * n, n));
    }

    // Doppler FFT over symbols per range bin.
    const Fft dft(m, FftDirection::Forward);
    RangeDopplerMap map;
    map.n_range = n;
    map.n_doppler = m;
    map.magnitude.assign(n * m, 0.0);
    const TimingBudget timing = derive_timing(cfg);
    map.range_bin_size_m = timing.range_resolution_m;
    map.doppler_bin_size_hz = timing.doppler_resolution_hz;
    map.velocity_per_bin_mps = kSpeedOfLight * timing.doppler_resolution_hz / (2.0 * carrier_frequency_hz);

    // Undo the two unitary scalings and the window coherent gains.
    const double norm = (range_gain > 0.0 && doppler_gain > 0.0)
                            ? std::sqrt(static_cast<double>(n)) * std::sqrt(static_cast<double>(m)) /
                                  (range_gain * doppler_gain)
                            : 0.0;
    std::vector<cd> slow(m);
    std::vector<cd> spectrum(m);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t l = 0; l < m; ++l) slow[l] = profiles[l * n + r] * doppler_window[l];
        dft(slow, spectrum);
        for (std::size_t d = 0; d < m; ++d) map.magnitude[r * m + d] = std::abs(spectrum[d]) * norm;
    }
    return map;
}

std::vector<double> matched_filter_time(const BasebandSignal& rx, const BasebandSignal& ref)
{
    if (ref.samples.empty()) throw NumericError("matched filter reference is empty");
    const double ref_energy = ref.energy();
    if (!(ref_energy > 0.0)) throw NumericError("matched filter reference has zero energy");
    if (rx.samples.empty()) return {};

    std::size_t len = 1;
    while (len < rx.samples.size() + ref.samples.size() - 1) len <<= 1;
    std::vector<cd> a(len, cd{});
    std::vector<cd> b(len, cd{});
    std::copy(rx.samples.begin(), rx.samples.end(), a.begin());
    std::copy(ref.samples.begin(), ref.samples.end(), b.begin());
    const Fft dft(len, FftDirection::Forward);
    const Fft idft(len, FftDirection::Inverse);
    auto fa = dft(a);
    const auto fb = dft(b);
    for (std::size_t i = 0; i < len; ++i) fa[i] *= std::conj(fb[i]);
    // Unitary transforms: the circular correlation is sqrt(len) * idft(fa).
    const auto corr = idft(fa);
    const double scale = std::sqrt(static_cast<double>(len)) / ref_energy;

    std::vector<double> out(rx.samples.size());
    for (std::size_t lag = 0; lag < out.size(); ++lag) out[lag] = std::abs(corr[lag]) * scale;
    return out;
}

BasebandSignal add_awgn(const BasebandSignal& signal, double snr_db, std::uint64_t seed)
{
    if (std::isinf(snr_db) && snr_db > 0) return signal;
    const double p = signal.mean_power();
    if (!(p > 0.0)) throw NumericError("add_awgn requires a signal with positive energy");
    const double sigma = std::sqrt(p / std::pow(10.0, snr_db / 10.0) / 2.0);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    BasebandSignal out = signal;
    for (auto& x : out.samples) {
        const double re = sigma * gauss(rng);
        const double im = sigma * gauss(rng);
        x += cd(re, im);
    }
    return out;
}

std::vector<Detection> extract_peaks(const RangeDopplerMap& map, double threshold_db_below_max, std::size_t max_peaks)
{
    if (map.magnitude.size() != map.n_range * map.n_doppler || map.magnitude.empty())
        throw DimensionError("range-Doppler map is degenerate");
    const double peak = *std::max_element(map.magnitude.begin(), map.magnitude.end());
    if (!(peak > 0.0)) return {};
    const double floor = peak * std::pow(10.0, -std::abs(threshold_db_below_max) / 20.0);

    const auto nr = static_cast<long>(map.n_range);
    const auto nd = static_cast<long>(map.n_doppler);
    auto idx = [&](long r, long d) {
        r = ((r % nr) + nr) % nr;
        d = ((d % nd) + nd) % nd;
        return static_cast<std::size_t>(r * nd + d);
    };

    std::vector<Detection> out;
    for (long r = 0; r < nr; ++r) {
        for (long d = 0; d < nd; ++d) {
            const std::size_t self = idx(r, d);
            const double v = map.magnitude[self];
            if (v < floor) continue;
            bool is_max = true;
            for (long dr = -1; dr <= 1 && is_max; ++dr) {
                for (long dd = -1; dd <= 1; ++dd) {
                    const std::size_t other = idx(r + dr, d + dd);
                    if (other == self) continue;
                    const double w = map.magnitude[other];
                    // Plateaus keep only their first cell in raster order.
                    if (w > v || (w == v && other < self)) {
                        is_max = false;
                        break;
                    }
                }
            }
            if (!is_max) continue;
            Detection det;
            det.range_bin = static_cast<std::size_t>(r);
            det.doppler_bin = static_cast<std::size_t>(d);
            det.range_m = static_cast<double>(r) * map.range_bin_size_m;
            det.velocity_mps = map.velocity_of_bin(det.doppler_bin);
            det.magnitude = v;
            out.push_back(det);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Detection& a, const Detection& b) { return a.magnitude > b.magnitude; });
    if (out.size() > max_peaks) out.resize(max_peaks);
    return out;
}

double round_trip_range(double round_trip_time_s, double fixed_processing_delay_s)
{
    const double t = round_trip_time_s - fixed_processing_delay_s;
    if (t < 0.0) throw NumericError("round-trip time is shorter than the fixed processing delay");
    return kSpeedOfLight * t / 2.0;
}

void write_range_doppler_csv(std::ostream& os, const RangeDopplerMap& map)
{
    os << "range_bin,doppler_bin,magnitude_db\n";
    for (std::size_t r = 0; r < map.n_range; ++r)
        for (std::size_t d = 0; d < map.n_doppler; ++d)
            os << r << ',' << d << ',' << csv::num(20.0 * std::log10(map.at(r, d))) << '\n';
}

std::string detections_json(const std::vector<Detection>& detections)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : detections) {
        arr.push_back({{"range_bin", d.range_bin},
                       {"doppler_bin", d.doppler_bin},
                       {"range_m", d.range_m},
                       {"velocity_mps", d.velocity_mps},
                       {"magnitude", d.magnitude}});
    }
    return arr.dump(2);
}

} // namespace jcsl::radar
