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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace jcsl::beam {

struct Port {
    std::string label;
    std::vector<cd> field; ///< linear complex far-field amplitude per grid angle
};

/// Per-port complex far-field gains on a shared azimuth grid.
class PortPatternSet {
  public:
    /// Validates: at least one port, angles strictly increasing within [0, 360),
    /// every port sampled on the full grid.
    PortPatternSet(std::vector<double> angles_deg, std::vector<Port> ports);

    const std::vector<double>& angles_deg() const { return angles_; }
    const std::vector<Port>& ports() const { return ports_; }
    std::size_t n_angles() const { return angles_.size(); }
    std::size_t n_ports() const { return ports_.size(); }

    /// Grid index closest to the given angle, measured on the circle.
    std::size_t nearest_index(double angle_deg) const;
    /// Field of every port at grid index i.
    std::vector<cd> field_vector(std::size_t i) const;

  private:
    std::vector<double> angles_;
    std::vector<Port> ports_;
};

/// Complex combining weights, normalized to unit total power on construction.
class BeamWeights {
  public:
    explicit BeamWeights(std::vector<cd> w);
    const std::vector<cd>& values() const { return w_; }
    std::size_t size() const { return w_.size(); }

  private:
    std::vector<cd> w_;
};

struct GainCurve {
    std::vector<double> angles_deg;
    std::vector<double> gain_db;
};

/// Angle grid 0, step, ... < 360.
std::vector<double> azimuth_grid(double step_deg = 5.0);

/// Stand-in for unpublished measured data: omni 1, sqrt(2) cos(phi), sqrt(2) sin(phi),
/// labelled mode1/mode4/mode5.
PortPatternSet synthetic_fixture(double step_deg = 5.0);

/// CSV `angle_deg,port,gain_dbi,phase_deg`; field = sqrt(10^(dBi/10)) exp(j phase).
PortPatternSet read_patterns(std::istream& is);
PortPatternSet load_patterns(const std::filesystem::path& path);
void write_patterns(std::ostream& os, const PortPatternSet& patterns);

/// Gain of a single port, in dBi.
GainCurve port_gain(const PortPatternSet& patterns, std::size_t port);

/// G(phi) = |sum_i w_i e_i(phi)|^2 in dBi.
GainCurve combined_gain(const PortPatternSet& patterns, const BeamWeights& weights);

/// Upper bound sum_i |e_i(phi)|^2 in dBi, reached by steering to each angle.
GainCurve envelope_gain(const PortPatternSet& patterns);

/// Conjugate field matching at the grid point nearest target_angle_deg.
/// Throws NumericError if every port has a null there.
BeamWeights optimize_weights(const PortPatternSet& patterns, double target_angle_deg);

struct SteeredBeam {
    GainCurve curve;
    BeamWeights weights;
    double mainlobe_angle_deg = 0.0; ///< argmax of curve; may differ from the target
};

SteeredBeam steered_pattern(const PortPatternSet& patterns, double target_angle_deg);

struct ArrayFactorGain {
    double af_db = 0.0;  ///< 10 log10 |AF|
    double aaf_db = 0.0; ///< af_db + element gain
};

/// Uniform linear array: AF = sin(n psi / 2) / sin(psi / 2),
/// psi = 2 pi d (cos theta - cos theta_steer), with |AF| -> n at the singularity.
/// Angles are measured from the array axis, so broadside is 90 deg.
ArrayFactorGain array_factor_gain(std::size_t n_elements, double spacing_wavelengths, double element_gain_dbi,
                                  double steer_deg, double angle_deg);

struct ArrayCurves {
    GainCurve aaf;
    GainCurve af;
};
ArrayCurves array_factor_curves(std::size_t n_elements, double spacing_wavelengths, double element_gain_dbi,
                                double steer_deg, std::span<const double> angles_deg);

/// Highest lobe outside the mainlobe, relative to the mainlobe maximum (dB).
/// Lobes that reach the global maximum (within 1e-6 dB) all count as mainlobe;
/// a full 360 deg uniform grid is treated as circular. Empty if no other lobe.
std::optional<double> sidelobe_level(const GainCurve& curve);

/// Grid search of |sum_i conj(e_i(phi)) x_i|^2 / sum_i |e_i(phi)|^2. Exact ties
/// go to the lowest angle. Throws NumericError when fewer than two ports are
/// given or the metric is flat over the grid.
double estimate_doa(std::span<const cd> port_snapshots, const PortPatternSet& patterns);

struct DoaTrial {
    double true_deg = 0.0;
    double estimated_deg = 0.0;
    double error_deg = 0.0; ///< signed circular error in (-180, 180]
};

/// Monte-Carlo DoA: each trial draws a uniformly random grid angle, synthesizes
/// x_i = e_i(phi) plus complex Gaussian noise with per-port SNR relative to the
/// mean port power at phi, and runs estimate_doa. snr_db = +inf is noiseless.
std::vector<DoaTrial> simulate_doa(const PortPatternSet& patterns, double snr_db, std::size_t n_trials,
                                   std::uint64_t seed, std::size_t threads = 0);
double doa_rmse_deg(std::span<const DoaTrial> trials);

/// `angle_deg,gain_dbi`.
void write_gain_csv(std::ostream& os, const GainCurve& curve);

} // namespace jcsl::beam
