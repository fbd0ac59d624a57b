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
#include "jcsl/radar.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jcsl::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitNumeric = 4;

enum class Experiment { papr_ccdf, radar_sim, ber, beamform, array_factor, doa, figures };

std::optional<Experiment> experiment_from_string(std::string_view name);
std::string_view to_string(Experiment e);

/// Everything one run needs. Parsed from a single flat JSON object whose keys
/// are the WaveformConfig fields plus the scenario keys below; unknown keys are
/// rejected.
struct ScenarioSpec {
    Experiment experiment = Experiment::papr_ccdf;
    WaveformConfig waveform;
    std::uint64_t seed = 1;
    std::size_t threads = 0;
    std::filesystem::path output_dir;

    // papr_ccdf, figures, doa
    std::optional<std::uint64_t> n_trials;
    double threshold_start_db = 0.0;
    double threshold_stop_db = 14.0;
    double threshold_step_db = 0.05;

    // ber
    std::uint64_t n_bits = 1'000'000;
    std::vector<double> snr_db_list{0.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0};

    // radar_sim, doa
    std::optional<double> snr_db;
    radar::TargetScene scene;
    bool has_scene = false;
    radar::Window window = radar::Window::NONE;
    double detection_threshold_db = 20.0;
    std::size_t max_peaks = 10;

    // beamform, doa
    std::optional<std::filesystem::path> patterns_path;
    std::vector<double> target_angles_deg{30.0};
    double angle_step_deg = 5.0;

    // array_factor
    std::size_t n_elements = 3;
    double spacing_wavelengths = 0.5;
    double element_gain_dbi = 5.2;
    double steer_deg = 90.0;
};

/// Strict parse. Relative paths inside the document resolve against base_dir.
/// Throws ConfigError for unknown keys, wrong types or a missing scene.
ScenarioSpec parse_scenario(Experiment experiment, std::string_view json_text,
                            const std::filesystem::path& base_dir = {});

/// Effective scenario as JSON (echoed into run_meta.json).
std::string scenario_to_json(const ScenarioSpec& spec);

struct RunResult {
    std::filesystem::path output_dir;
    std::vector<std::string> files;
    std::vector<std::string> warnings;
};

/// Executes the experiment and writes its artifacts plus run_meta.json. An
/// output directory that already holds a run_meta.json is never reused: the
/// run goes to <dir>-1, <dir>-2, ... instead. Errors propagate as jcsl::Error.
RunResult run(const ScenarioSpec& spec);

/// Figures 3 (PAPR CCDFs), 4 (synthetic-fixture beamforming) and 5 (3-element
/// array) into spec.output_dir (default "figures").
RunResult reproduce_figures(const ScenarioSpec& spec);

/// Maps an exception to the documented exit code.
int exit_code_for(const std::exception& e);

} // namespace jcsl::cli
