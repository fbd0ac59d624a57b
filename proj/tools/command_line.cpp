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

#include "command_line.hpp"

#include "jcsl/error.hpp"
#include "jcsl/scenario.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace jcsl::cli {

namespace {

constexpr const char* kExperimentList = "papr_ccdf, radar_sim, ber, beamform, array_factor, doa, figures";

} // namespace

int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Joint communication, sensing and localization waveform and antenna simulations", "jcsl"};
    std::string experiment_name;
    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    app.add_option("experiment", experiment_name, std::string("Experiment: ") + kExperimentList)->required();
    auto* config_opt = app.add_option("--config", config_path, "Flat JSON scenario config");
    auto* out_opt = app.add_option("--out", out_dir, "Output directory");
    auto* seed_opt = app.add_option("--seed", seed, "64-bit master seed (overrides the config)");
    auto* trials_opt = app.add_option("--trials", trials, "Trial count (bits for ber; overrides the config)");

    std::vector<std::string> argv_storage{"jcsl"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "jcsl: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    const auto experiment = experiment_from_string(experiment_name);
    if (!experiment) {
        err << "jcsl: unknown experiment '" << experiment_name << "' (expected one of " << kExperimentList << ")\n";
        return kExitUsage;
    }

    try {
        std::string text = "{}";
        std::filesystem::path base;
        if (*config_opt) {
            std::ifstream is(config_path);
            if (!is) throw IoError("cannot read config file " + config_path);
            std::ostringstream ss;
            ss << is.rdbuf();
            text = ss.str();
            base = std::filesystem::path(config_path).parent_path();
        } else if (*experiment != Experiment::figures) {
            err << "jcsl: --config is required for " << experiment_name << "\n";
            return kExitUsage;
        }

        ScenarioSpec spec = parse_scenario(*experiment, text, base);
        if (*out_opt) spec.output_dir = out_dir;
        if (*seed_opt) spec.seed = seed;
        if (*trials_opt) {
            if (*experiment == Experiment::ber) spec.n_bits = trials;
            else spec.n_trials = trials;
        }

        const RunResult result = run(spec);
        for (const auto& w : result.warnings) err << "jcsl: warning: " << w << "\n";
        out << result.output_dir.string() << "\n";
        for (const auto& f : result.files) out << "  " << f << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        err << "jcsl: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

} // namespace jcsl::cli
