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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace jcsl::papr {

struct CcdfPoint {
    double papr_threshold_db = 0.0;
    double exceedance_probability = 0.0;
    std::uint64_t exceedances = 0;
};

/// Empirical CCDF P(PAPR > threshold). n_values counts the pooled per-antenna
/// PAPR samples (n_trials * n_tx).
struct CcdfCurve {
    std::vector<CcdfPoint> points;
    std::uint64_t n_trials = 0;
    std::uint64_t n_values = 0;
    WaveformConfig config;
    std::uint64_t seed = 0;

    /// Threshold where the curve falls to `probability`, linearly interpolated
    /// between grid points. NaN if the curve never reaches it.
    double threshold_at(double probability) const;
};

/// 10 log10(max|x|^2 / mean|x|^2) of one symbol body after oversampling by
/// zero-padding its spectrum (FFT order, padding inserted at the band edge).
/// Throws NumericError on empty or zero-energy input.
double papr_db(std::span<const cd> samples, std::size_t oversampling_factor);

/// Same measurement starting from the N subcarrier values of one symbol.
double papr_from_subcarriers_db(std::span<const cd> subcarriers, std::size_t oversampling_factor);

struct CcdfOptions {
    std::size_t threads = 0;
    std::size_t trials_per_chunk = 4096;
};

/// Monte-Carlo CCDF. One trial is one random OFDM symbol (i.i.d. uniform
/// constellation symbols on every occupied bin, spread when cfg says so); each
/// antenna contributes its own PAPR value. Thresholds must be strictly
/// increasing. Deterministic in (cfg, n_trials, thresholds, seed) regardless
/// of opts.threads.
CcdfCurve estimate_ccdf(const WaveformConfig& cfg, std::uint64_t n_trials, std::span<const double> thresholds_db,
                        std::uint64_t seed, const CcdfOptions& opts = {});

/// start, start+step, ... up to and including stop (within step/2).
std::vector<double> threshold_grid(double start_db, double stop_db, double step_db);

/// PAPR of the n-tone symbol carrying unit-magnitude symbols with Newman phases.
double newman_papr_demo(std::size_t n_subcarriers, std::size_t oversampling_factor = 4);

/// Median PAPR of n-tone symbols with uniformly random 8-PSK phases.
double median_random_papr_db(std::size_t n_subcarriers, std::size_t trials, std::uint64_t seed,
                             std::size_t oversampling_factor = 4);

/// `papr_db,ccdf` with one row per threshold.
void write_ccdf_csv(std::ostream& os, const CcdfCurve& curve);
/// Config, seed and trial counts of a curve.
std::string ccdf_sidecar_json(const CcdfCurve& curve);

} // namespace jcsl::papr
