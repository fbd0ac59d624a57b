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

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace jcsl::modem {

using Bits = std::vector<std::uint8_t>;

/// Complex grid of OFDM symbols, one layer per transmit antenna. Entry (k, l)
/// is subcarrier k of OFDM symbol l; storage is symbol-major so each symbol's
/// subcarriers are contiguous. Bins outside an antenna's occupancy are zero.
class SymbolFrame {
  public:
    SymbolFrame() = default;
    SymbolFrame(std::size_t n_subcarriers, std::size_t n_symbols, std::size_t n_antennas);

    /// Zero frame with the occupancy layout of cfg.
    static SymbolFrame empty_for(const WaveformConfig& cfg);

    std::size_t n_subcarriers() const { return n_subcarriers_; }
    std::size_t n_symbols() const { return n_symbols_; }
    std::size_t n_antennas() const { return grids_.size(); }

    cd& at(std::size_t antenna, std::size_t k, std::size_t l) { return grids_[antenna][l * n_subcarriers_ + k]; }
    const cd& at(std::size_t antenna, std::size_t k, std::size_t l) const
    {
        return grids_[antenna][l * n_subcarriers_ + k];
    }

    std::span<cd> symbol(std::size_t antenna, std::size_t l)
    {
        return {grids_[antenna].data() + l * n_subcarriers_, n_subcarriers_};
    }
    std::span<const cd> symbol(std::size_t antenna, std::size_t l) const
    {
        return {grids_[antenna].data() + l * n_subcarriers_, n_subcarriers_};
    }

    bool occupied(std::size_t antenna, std::size_t k) const { return masks_[antenna][k] != 0; }
    void set_occupied(std::size_t antenna, std::size_t k, bool on) { masks_[antenna][k] = on ? 1 : 0; }
    std::vector<std::size_t> occupied_bins(std::size_t antenna) const;

    /// Sum of |s|^2 over all antennas and entries.
    double energy() const;

    /// Throws DimensionError unless the frame has cfg's N, M and n_tx.
    void check_matches(const WaveformConfig& cfg) const;

  private:
    std::size_t n_subcarriers_ = 0;
    std::size_t n_symbols_ = 0;
    std::vector<std::vector<cd>> grids_;
    std::vector<std::vector<std::uint8_t>> masks_;
};

int bits_per_symbol(Modulation m);

/// Constellation points indexed by their bit label (MSB = first bit).
/// Gray-coded, unit average energy:
///   BPSK  label b       -> 1 - 2b
///   QPSK  label b0b1    -> ((1 - 2b0) + j(1 - 2b1)) / sqrt(2)
///   PSK8  label g       -> exp(j 2 pi m / 8), where g = m ^ (m >> 1)
///   QAM16 label b0b1b2b3-> (I + jQ) / sqrt(10), I from b0b1 and Q from b2b3
///                          with 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3
std::span<const cd> constellation(Modulation m);

/// Throws DimensionError if bits.size() is not a multiple of bits_per_symbol.
std::vector<cd> map_bits(std::span<const std::uint8_t> bits, Modulation m);

/// Hard decision to the nearest constellation point; exact ties resolve to the
/// lower label.
Bits demap_symbols(std::span<const cd> symbols, Modulation m);

/// Unitary DFT of a block (DFT-spread precoder) and its inverse.
std::vector<cd> dft_spread(std::span<const cd> block);
std::vector<cd> dft_despread(std::span<const cd> block);

/// Places data symbols onto the occupied bins of every antenna: antenna by
/// antenna, then symbol by symbol, then ascending bin. Size must equal the total
/// occupied-bin count of the frame.
SymbolFrame frame_from_symbols(std::span<const cd> data, const WaveformConfig& cfg);

/// Inverse of frame_from_symbols.
std::vector<cd> symbols_from_frame(const SymbolFrame& frame);

/// Uniformly random constellation symbols on every occupied bin.
SymbolFrame random_frame(const WaveformConfig& cfg, std::mt19937_64& rng);

/// Data-domain frame -> subcarrier-domain frame: with DFT_SPREAD each
/// (antenna, symbol) block of occupied bins is replaced by its unitary DFT,
/// in ascending bin order. With NONE it is a copy.
SymbolFrame spread_frame(const SymbolFrame& data, const WaveformConfig& cfg);
SymbolFrame despread_frame(const SymbolFrame& subcarriers, const WaveformConfig& cfg);

/// Per antenna: unitary IFFT of each subcarrier-domain symbol, CP prepended,
/// symbols concatenated. No spreading is applied.
std::vector<BasebandSignal> modulate_subcarriers(const SymbolFrame& subcarriers, const WaveformConfig& cfg);

/// Data-domain frame -> one baseband signal per antenna (spreads when cfg says so).
std::vector<BasebandSignal> ofdm_modulate(const SymbolFrame& frame, const WaveformConfig& cfg);

/// Full N x M FFT grid of one received stream (CP stripped, unitary FFT), no
/// occupancy masking and no despreading. Symbol-major like SymbolFrame.
std::vector<cd> demodulate_grid(const BasebandSignal& signal, const WaveformConfig& cfg);

/// Subcarrier-domain frame from received streams. Either one stream per
/// antenna, or a single stream carrying the sum of interleaved antennas (each
/// antenna then reads its own occupied bins).
SymbolFrame demodulate_subcarriers(std::span<const BasebandSignal> signals, const WaveformConfig& cfg);

/// Inverse of ofdm_modulate: demodulates and despreads when cfg says so.
SymbolFrame ofdm_demodulate(std::span<const BasebandSignal> signals, const WaveformConfig& cfg);
SymbolFrame ofdm_demodulate(const BasebandSignal& signal, const WaveformConfig& cfg);

/// Element-wise sum of equally long signals (ideal combining at one receiver).
BasebandSignal sum_signals(std::span<const BasebandSignal> signals);

/// phi_k = pi (k-1)^2 / n mod 2 pi, k = 1..n.
std::vector<double> newman_phases(std::size_t n);

struct BerPoint {
    double snr_db = 0.0;  ///< Es/N0 per occupied subcarrier
    double ebn0_db = 0.0; ///< snr_db - 10 log10(bits per symbol)
    std::uint64_t n_bits = 0;
    std::uint64_t n_errors = 0;
    double ber = 0.0;
};

struct BerOptions {
    std::size_t threads = 0;
    std::size_t frames_per_chunk = 16;
};

/// Monte-Carlo mod -> AWGN -> demod -> demap chain. Noise is complex Gaussian in
/// the time domain with variance 10^(-snr_db/10) per sample, which equals N0
/// per subcarrier under the unitary FFT. Transmit antennas are summed at the
/// receiver. snr_db = +inf disables noise. Requires n_bits >= 10^4; at least
/// n_bits bits are simulated (whole frames).
std::vector<BerPoint> simulate_ber(const WaveformConfig& cfg, std::span<const double> snr_db_list,
                                   std::uint64_t n_bits, std::uint64_t seed, const BerOptions& opts = {});

/// Es/N0 in dB that corresponds to a given Eb/N0.
double esn0_from_ebn0_db(double ebn0_db, Modulation m);

} // namespace jcsl::modem
