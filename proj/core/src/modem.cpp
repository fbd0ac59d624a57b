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

#include "jcsl/modem.hpp"

#include "jcsl/error.hpp"
#include "jcsl/fft.hpp"
#include "jcsl/parallel.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace jcsl::modem {

SymbolFrame::SymbolFrame(std::size_t n_subcarriers, std::size_t n_symbols, std::size_t n_antennas)
    : n_subcarriers_(n_subcarriers), n_symbols_(n_symbols),
      grids_(n_antennas, std::vector<cd>(n_subcarriers * n_symbols)),
      masks_(n_antennas, std::vector<std::uint8_t>(n_subcarriers, 1))
{
}

SymbolFrame SymbolFrame::empty_for(const WaveformConfig& cfg)
{
    validate_config(cfg);
    SymbolFrame f(cfg.n_subcarriers, cfg.n_symbols_per_frame, cfg.n_tx);
    for (std::size_t a = 0; a < cfg.n_tx; ++a) {
        for (std::size_t k = 0; k < cfg.n_subcarriers; ++k) f.set_occupied(a, k, false);
        for (auto k : jcsl::occupied_bins(cfg, a)) f.set_occupied(a, k, true);
    }
    return f;
}

std::vector<std::size_t> SymbolFrame::occupied_bins(std::size_t antenna) const
{
    std::vector<std::size_t> bins;
    for (std::size_t k = 0; k < n_subcarriers_; ++k)
        if (masks_[antenna][k]) bins.push_back(k);
    return bins;
}

double SymbolFrame::energy() const
{
    double e = 0.0;
    for (const auto& g : grids_)
        for (const auto& s : g) e += std::norm(s);
    return e;
}

void SymbolFrame::check_matches(const WaveformConfig& cfg) const
{
    if (n_subcarriers_ != cfg.n_subcarriers || n_symbols_ != cfg.n_symbols_per_frame || n_antennas() != cfg.n_tx)
        throw DimensionError("symbol frame dimensions do not match the waveform config");
}

int bits_per_symbol(Modulation m)
{
    switch (m) {
    case Modulation::BPSK: return 1;
    case Modulation::QPSK: return 2;
    case Modulation::PSK8: return 3;
    case Modulation::QAM16: return 4;
    }
    return 0;
}

namespace {

std::array<cd, 2> make_bpsk() { return {cd(1, 0), cd(-1, 0)}; }

std::array<cd, 4> make_qpsk()
{
    std::array<cd, 4> pts{};
    const double a = 1.0 / std::sqrt(2.0);
    for (unsigned label = 0; label < 4; ++label) {
        const double i = (label & 2u) ? -a : a;
        const double q = (label & 1u) ? -a : a;
        pts[label] = cd(i, q);
    }
    return pts;
}

std::array<cd, 8> make_psk8()
{
    std::array<cd, 8> pts{};
    for (unsigned m = 0; m < 8; ++m) {
        const unsigned gray = m ^ (m >> 1);
        pts[gray] = std::polar(1.0, 2.0 * std::numbers::pi * m / 8.0);
    }
    pts[0] = cd(1.0, 0.0);
    return pts;
}

std::array<cd, 16> make_qam16()
{
    // 2-bit Gray code per axis: 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3
    constexpr std::array<double, 4> level = {-3.0, -1.0, 3.0, 1.0};
    std::array<cd, 16> pts{};
    const double scale = 1.0 / std::sqrt(10.0);
    for (unsigned label = 0; label < 16; ++label)
        pts[label] = cd(level[label >> 2], level[label & 3u]) * scale;
    return pts;
}

const std::array<cd, 2> kBpsk = make_bpsk();
const std::array<cd, 4> kQpsk = make_qpsk();
const std::array<cd, 8> kPsk8 = make_psk8();
const std::array<cd, 16> kQam16 = make_qam16();

} // namespace

std::span<const cd> constellation(Modulation m)
{
    switch (m) {
    case Modulation::BPSK: return kBpsk;
    case Modulation::QPSK: return kQpsk;
    case Modulation::PSK8: return kPsk8;
    case Modulation::QAM16: return kQam16;
    }
    return {};
}

std::vector<cd> map_bits(std::span<const std::uint8_t> bits, Modulation m)
{
    const auto bps = static_cast<std::size_t>(bits_per_symbol(m));
    if (bits.size() % bps != 0)
        throw DimensionError("bit count " + std::to_string(bits.size()) + " is not a multiple of " +
                             std::to_string(bps));
    const auto points = constellation(m);
    std::vector<cd> out(bits.size() / bps);
    for (std::size_t i = 0; i < out.size(); ++i) {
        unsigned label = 0;
        for (std::size_t b = 0; b < bps; ++b) label = (label << 1) | (bits[i * bps + b] & 1u);
        out[i] = points[label];
    }
    return out;
}

Bits demap_symbols(std::span<const cd> symbols, Modulation m)
{
    const auto bps = static_cast<std::size_t>(bits_per_symbol(m));
    const auto points = constellation(m);
    Bits out(symbols.size() * bps);
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t p = 0; p < points.size(); ++p) {
            const double d = std::norm(symbols[i] - points[p]);
            if (d < best_d) {
                best_d = d;
                best = p;
            }
        }
        for (std::size_t b = 0; b < bps; ++b) out[i * bps + b] = static_cast<std::uint8_t>((best >> (bps - 1 - b)) & 1u);
    }
    return out;
}

std::vector<cd> dft_spread(std::span<const cd> block)
{
    if (block.empty()) return {};
    return fft(block);
}

std::vector<cd> dft_despread(std::span<const cd> block)
{
    if (block.empty()) return {};
    return ifft(block);
}

SymbolFrame frame_from_symbols(std::span<const cd> data, const WaveformConfig& cfg)
{
    SymbolFrame frame = SymbolFrame::empty_for(cfg);
    std::size_t pos = 0;
    for (std::size_t a = 0; a < frame.n_antennas(); ++a) {
        const auto bins = frame.occupied_bins(a);
        for (std::size_t l = 0; l < frame.n_symbols(); ++l) {
            if (pos + bins.size() > data.size()) throw DimensionError("too few data symbols for the frame");
            for (auto k : bins) frame.at(a, k, l) = data[pos++];
        }
    }
    if (pos != data.size()) throw DimensionError("too many data symbols for the frame");
    return frame;
}

std::vector<cd> symbols_from_frame(const SymbolFrame& frame)
{
    std::vector<cd> out;
    for (std::size_t a = 0; a < frame.n_antennas(); ++a) {
        const auto bins = frame.occupied_bins(a);
        for (std::size_t l = 0; l < frame.n_symbols(); ++l)
            for (auto k : bins) out.push_back(frame.at(a, k, l));
    }
    return out;
}

SymbolFrame random_frame(const WaveformConfig& cfg, std::mt19937_64& rng)
{
    SymbolFrame frame = SymbolFrame::empty_for(cfg);
    const auto points = constellation(cfg.modulation);
    const int shift = 64 - bits_per_symbol(cfg.modulation);
    for (std::size_t a = 0; a < frame.n_antennas(); ++a) {
        const auto bins = frame.occupied_bins(a);
        for (std::size_t l = 0; l < frame.n_symbols(); ++l)
            for (auto k : bins) frame.at(a, k, l) = points[rng() >> shift];
    }
    return frame;
}

namespace {

SymbolFrame transform_blocks(const SymbolFrame& in, const WaveformConfig& cfg, FftDirection dir)
{
    in.check_matches(cfg);
    SymbolFrame out = in;
    if (cfg.spreading == Spreading::NONE) return out;
    std::vector<cd> block;
    std::vector<cd> result;
    for (std::size_t a = 0; a < in.n_antennas(); ++a) {
        const auto bins = in.occupied_bins(a);
        if (bins.empty()) continue;
        const Fft dft(bins.size(), dir);
        block.resize(bins.size());
        result.resize(bins.size());
        for (std::size_t l = 0; l < in.n_symbols(); ++l) {
            for (std::size_t q = 0; q < bins.size(); ++q) block[q] = in.at(a, bins[q], l);
            dft(block, result);
            for (std::size_t q = 0; q < bins.size(); ++q) out.at(a, bins[q], l) = result[q];
        }
    }
    return out;
}

} // namespace

SymbolFrame spread_frame(const SymbolFrame& data, const WaveformConfig& cfg)
{
    return transform_blocks(data, cfg, FftDirection::Forward);
}

SymbolFrame despread_frame(const SymbolFrame& subcarriers, const WaveformConfig& cfg)
{
    return transform_blocks(subcarriers, cfg, FftDirection::Inverse);
}

std::vector<BasebandSignal> modulate_subcarriers(const SymbolFrame& subcarriers, const WaveformConfig& cfg)
{
    subcarriers.check_matches(cfg);
    const std::size_t n = cfg.n_subcarriers;
    const std::size_t cp = cfg.cp_samples;
    const double fs = static_cast<double>(n) * cfg.subcarrier_spacing_hz;
    const Fft idft(n, FftDirection::Inverse);

    std::vector<BasebandSignal> out(subcarriers.n_antennas());
    std::vector<cd> body(n);
    for (std::size_t a = 0; a < subcarriers.n_antennas(); ++a) {
        auto& sig = out[a];
        sig.sampling_rate_hz = fs;
        sig.samples.reserve(subcarriers.n_symbols() * (n + cp));
        for (std::size_t l = 0; l < subcarriers.n_symbols(); ++l) {
            idft(subcarriers.symbol(a, l), body);
            sig.samples.insert(sig.samples.end(), body.end() - static_cast<std::ptrdiff_t>(cp), body.end());
            sig.samples.insert(sig.samples.end(), body.begin(), body.end());
        }
    }
    return out;
}

std::vector<BasebandSignal> ofdm_modulate(const SymbolFrame& frame, const WaveformConfig& cfg)
{
    return modulate_subcarriers(spread_frame(frame, cfg), cfg);
}

std::vector<cd> demodulate_grid(const BasebandSignal& signal, const WaveformConfig& cfg)
{
    validate_config(cfg);
    const std::size_t n = cfg.n_subcarriers;
    const std::size_t cp = cfg.cp_samples;
    const std::size_t m = cfg.n_symbols_per_frame;
    if (signal.samples.size() != m * (n + cp))
        throw DimensionError("signal length " + std::to_string(signal.samples.size()) + " differs from M*(N+cp) = " +
                             std::to_string(m * (n + cp)));
    const Fft dft(n, FftDirection::Forward);
    std::vector<cd> grid(n * m);
    for (std::size_t l = 0; l < m; ++l) {
        const std::span<const cd> body(signal.samples.data() + l * (n + cp) + cp, n);
        dft(body, std::span<cd>(grid.data() + l * n, n));
    }
    return grid;
}

SymbolFrame demodulate_subcarriers(std::span<const BasebandSignal> signals, const WaveformConfig& cfg)
{
    SymbolFrame frame = SymbolFrame::empty_for(cfg);
    const bool summed = signals.size() == 1 && cfg.n_tx == 2 && cfg.allocation == Allocation::INTERLEAVED_2TX;
    if (signals.size() != cfg.n_tx && !summed)
        throw DimensionError("expected one received stream per antenna or one interleaved sum");

    for (std::size_t a = 0; a < cfg.n_tx; ++a) {
        const auto grid = demodulate_grid(signals[summed ? 0 : a], cfg);
        const auto bins = frame.occupied_bins(a);
        for (std::size_t l = 0; l < frame.n_symbols(); ++l)
            for (auto k : bins) frame.at(a, k, l) = grid[l * cfg.n_subcarriers + k];
    }
    return frame;
}

SymbolFrame ofdm_demodulate(std::span<const BasebandSignal> signals, const WaveformConfig& cfg)
{
    return despread_frame(demodulate_subcarriers(signals, cfg), cfg);
}

SymbolFrame ofdm_demodulate(const BasebandSignal& signal, const WaveformConfig& cfg)
{
    return ofdm_demodulate(std::span<const BasebandSignal>(&signal, 1), cfg);
}

BasebandSignal sum_signals(std::span<const BasebandSignal> signals)
{
    if (signals.empty()) return {};
    BasebandSignal out = signals[0];
    for (std::size_t i = 1; i < signals.size(); ++i) {
        if (signals[i].samples.size() != out.samples.size()) throw DimensionError("signal lengths differ");
        for (std::size_t n = 0; n < out.samples.size(); ++n) out.samples[n] += signals[i].samples[n];
    }
    return out;
}

std::vector<double> newman_phases(std::size_t n)
{
    if (n == 0) throw ConfigError("newman_phases requires n >= 1");
    std::vector<double> phases(n);
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t k = 0; k < n; ++k) {
        // (k^2 mod 2n) keeps the argument exact before scaling by pi/n.
        const auto r = static_cast<double>((k * k) % (2 * n));
        double phi = std::numbers::pi * r / static_cast<double>(n);
        if (phi >= two_pi) phi -= two_pi;
        phases[k] = phi;
    }
    return phases;
}

double esn0_from_ebn0_db(double ebn0_db, Modulation m)
{
    return ebn0_db + 10.0 * std::log10(static_cast<double>(bits_per_symbol(m)));
}

std::vector<BerPoint> simulate_ber(const WaveformConfig& cfg, std::span<const double> snr_db_list,
                                   std::uint64_t n_bits, std::uint64_t seed, const BerOptions& opts)
{
    validate_config(cfg);
    if (n_bits < 10'000) throw ConfigError("simulate_ber requires n_bits >= 10^4");
    if (opts.frames_per_chunk == 0) throw ConfigError("frames_per_chunk must be positive");

    const auto bps = static_cast<std::uint64_t>(bits_per_symbol(cfg.modulation));
    std::uint64_t symbols_per_frame = 0;
    for (std::size_t a = 0; a < cfg.n_tx; ++a)
        symbols_per_frame += jcsl::occupied_bins(cfg, a).size() * cfg.n_symbols_per_frame;
    const std::uint64_t bits_per_frame = symbols_per_frame * bps;
    const std::uint64_t n_frames = (n_bits + bits_per_frame - 1) / bits_per_frame;
    const std::uint64_t n_chunks = (n_frames + opts.frames_per_chunk - 1) / opts.frames_per_chunk;

    // Interleaved antennas are separable from their sum; FULL 2-TX would need
    // MIMO detection, so each antenna is received on its own stream there.
    const bool combine = cfg.n_tx == 1 || cfg.allocation == Allocation::INTERLEAVED_2TX;

    std::vector<BerPoint> points;
    points.reserve(snr_db_list.size());
    for (std::size_t si = 0; si < snr_db_list.size(); ++si) {
        const double snr_db = snr_db_list[si];
        const bool noiseless = std::isinf(snr_db) && snr_db > 0;
        const double sigma = noiseless ? 0.0 : std::sqrt(std::pow(10.0, -snr_db / 10.0) / 2.0);

        std::vector<std::uint64_t> errors(n_chunks, 0);
        run_chunks(n_chunks, opts.threads, [&](std::size_t chunk) {
            auto rng = chunk_engine(seed, si, chunk);
            std::normal_distribution<double> gauss(0.0, 1.0);
            const std::uint64_t first = chunk * opts.frames_per_chunk;
            const std::uint64_t last = std::min<std::uint64_t>(first + opts.frames_per_chunk, n_frames);
            std::uint64_t errs = 0;
            Bits bits(bits_per_frame);
            for (std::uint64_t f = first; f < last; ++f) {
                for (auto& b : bits) b = static_cast<std::uint8_t>(rng() >> 63);
                const auto tx = ofdm_modulate(frame_from_symbols(map_bits(bits, cfg.modulation), cfg), cfg);
                std::vector<BasebandSignal> rx;
                if (combine) rx.push_back(sum_signals(tx));
                else rx = tx;
                if (!noiseless)
                    for (auto& s : rx)
                        for (auto& x : s.samples) {
                            const double re = sigma * gauss(rng);
                            const double im = sigma * gauss(rng);
                            x += cd(re, im);
                        }
                const auto decided = demap_symbols(symbols_from_frame(ofdm_demodulate(rx, cfg)), cfg.modulation);
                for (std::size_t i = 0; i < bits.size(); ++i) errs += bits[i] != decided[i];
            }
            errors[chunk] = errs;
        });

        BerPoint p;
        p.snr_db = snr_db;
        p.ebn0_db = snr_db - 10.0 * std::log10(static_cast<double>(bps));
        p.n_bits = n_frames * bits_per_frame;
        for (auto e : errors) p.n_errors += e;
        p.ber = static_cast<double>(p.n_errors) / static_cast<double>(p.n_bits);
        points.push_back(p);
    }
    return points;
}

} // namespace jcsl::modem
