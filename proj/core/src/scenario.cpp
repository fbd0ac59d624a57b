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

#include "jcsl/scenario.hpp"

#include "config_json.hpp"
#include "jcsl/beamforming.hpp"
#include "jcsl/csv.hpp"
#include "jcsl/error.hpp"
#include "jcsl/modem.hpp"
#include "jcsl/papr.hpp"
#include "jcsl/parallel.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace jcsl::cli {

namespace {

constexpr std::uint64_t kDefaultPaprTrials = 100'000;
constexpr std::uint64_t kFigureTrials = 2'000'000;
constexpr std::uint64_t kDefaultDoaTrials = 1'000;

struct ExperimentName {
    Experiment e;
    std::string_view name;
};
constexpr ExperimentName kExperiments[] = {
    {Experiment::papr_ccdf, "papr_ccdf"}, {Experiment::radar_sim, "radar_sim"},
    {Experiment::ber, "ber"},             {Experiment::beamform, "beamform"},
    {Experiment::array_factor, "array_factor"}, {Experiment::doa, "doa"},
    {Experiment::figures, "figures"},
};

double get_double(const json& v, const std::string& key)
{
    if (!v.is_number()) throw ConfigError(key + " must be a number");
    return v.get<double>();
}

std::uint64_t get_u64(const json& v, const std::string& key)
{
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<long long>() < 0))
        throw ConfigError(key + " must be a non-negative integer");
    return v.get<std::uint64_t>();
}

std::vector<double> get_double_list(const json& v, const std::string& key)
{
    if (!v.is_array()) throw ConfigError(key + " must be an array of numbers");
    std::vector<double> out;
    for (const auto& x : v) out.push_back(get_double(x, key));
    return out;
}

std::string get_string(const json& v, const std::string& key)
{
    if (!v.is_string()) throw ConfigError(key + " must be a string");
    return v.get<std::string>();
}

fs::path resolve(const fs::path& base, const std::string& p)
{
    fs::path path(p);
    return path.is_absolute() || base.empty() ? path : base / path;
}

std::vector<radar::Target> parse_targets(const json& v)
{
    if (!v.is_array()) throw ConfigError("targets must be an array");
    std::vector<radar::Target> out;
    for (const auto& t : v) {
        if (!t.is_object()) throw ConfigError("each target must be an object");
        radar::Target target;
        for (const auto& [key, val] : t.items()) {
            if (key == "range_m") target.range_m = get_double(val, key);
            else if (key == "radial_velocity_mps") target.radial_velocity_mps = get_double(val, key);
            else if (key == "amplitude") {
                if (val.is_number()) target.amplitude = cd(val.get<double>(), 0.0);
                else if (val.is_array() && val.size() == 2)
                    target.amplitude = cd(get_double(val[0], key), get_double(val[1], key));
                else throw ConfigError("amplitude must be a number or [re, im]");
            }
            else throw ConfigError("unknown target key '" + key + "'");
        }
        if (!(target.range_m >= 0.0)) throw ConfigError("target range_m must be non-negative");
        out.push_back(target);
    }
    return out;
}

void parse_scene_file(const fs::path& path, radar::TargetScene& scene)
{
    std::ifstream is(path);
    if (!is) throw IoError("cannot open scene file " + path.string());
    json j;
    try {
        j = json::parse(is);
    } catch (const json::parse_error& e) {
        throw ConfigError("malformed scene file " + path.string() + ": " + e.what());
    }
    if (!j.is_object()) throw ConfigError("scene file must hold a JSON object");
    for (const auto& [key, val] : j.items()) {
        if (key == "carrier_frequency_hz") scene.carrier_frequency_hz = get_double(val, key);
        else if (key == "targets") scene.targets = parse_targets(val);
        else throw ConfigError("unknown scene key '" + key + "'");
    }
}

// Collects artifact files and fails loudly on any write error.
class Artifacts {
  public:
    explicit Artifacts(fs::path dir) : dir_(std::move(dir)) {}

    void write(const std::string& name, const std::string& content)
    {
        std::ofstream os(dir_ / name, std::ios::binary | std::ios::trunc);
        if (!os) throw IoError("cannot write " + (dir_ / name).string());
        os << content;
        os.close();
        if (!os) throw IoError("failed writing " + (dir_ / name).string());
        files_.push_back(name);
    }

    const fs::path& dir() const { return dir_; }
    const std::vector<std::string>& files() const { return files_; }

  private:
    fs::path dir_;
    std::vector<std::string> files_;
};

fs::path prepare_output_dir(const fs::path& requested)
{
    fs::path dir = requested;
    for (int k = 1; fs::exists(dir / "run_meta.json"); ++k) dir = fs::path(requested.string() + "-" + std::to_string(k));
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());
    return dir;
}

std::string slug(double v)
{
    std::ostringstream ss;
    ss << v;
    std::string s = ss.str();
    for (auto& c : s)
        if (c == '.') c = 'p';
        else if (c == '-') c = 'm';
    return s;
}

beam::PortPatternSet patterns_for(const ScenarioSpec& spec)
{
    return spec.patterns_path ? beam::load_patterns(*spec.patterns_path) : beam::synthetic_fixture(spec.angle_step_deg);
}

WaveformConfig with_spreading(WaveformConfig cfg, Spreading s)
{
    cfg.spreading = s;
    return cfg;
}

void run_papr_ccdf(const ScenarioSpec& spec, Artifacts& out)
{
    const auto thresholds = papr::threshold_grid(spec.threshold_start_db, spec.threshold_stop_db, spec.threshold_step_db);
    const std::uint64_t trials = spec.n_trials.value_or(kDefaultPaprTrials);
    papr::CcdfOptions opts;
    opts.threads = spec.threads;
    const auto ofdm = papr::estimate_ccdf(with_spreading(spec.waveform, Spreading::NONE), trials, thresholds, spec.seed, opts);
    const auto dfts =
        papr::estimate_ccdf(with_spreading(spec.waveform, Spreading::DFT_SPREAD), trials, thresholds, spec.seed, opts);

    std::ostringstream wide;
    wide << "papr_db,ccdf_ofdm,ccdf_dft_s_ofdm\n";
    for (std::size_t i = 0; i < thresholds.size(); ++i)
        wide << csv::num(thresholds[i]) << ',' << csv::num(ofdm.points[i].exceedance_probability) << ','
             << csv::num(dfts.points[i].exceedance_probability) << '\n';
    out.write("papr_ccdf.csv", wide.str());

    for (const auto& [name, curve] : {std::pair{"papr_ccdf_ofdm", &ofdm}, std::pair{"papr_ccdf_dft_s_ofdm", &dfts}}) {
        std::ostringstream ss;
        papr::write_ccdf_csv(ss, *curve);
        out.write(std::string(name) + ".csv", ss.str());
        out.write(std::string(name) + ".json", papr::ccdf_sidecar_json(*curve) + "\n");
    }
}

void run_radar(const ScenarioSpec& spec, Artifacts& out, std::vector<std::string>& warnings)
{
    const auto& cfg = spec.waveform;
    for (auto& w : spec.scene.warnings(cfg)) warnings.push_back(w);

    auto rng = chunk_engine(spec.seed, 1, 0);
    const auto tx = modem::spread_frame(modem::random_frame(cfg, rng), cfg);
    auto rx = radar::apply_target_channel(tx, spec.scene, cfg);
    if (spec.snr_db) {
        auto signals = modem::modulate_subcarriers(rx, cfg);
        for (std::size_t a = 0; a < signals.size(); ++a) {
            if (signals[a].energy() > 0.0)
                signals[a] = radar::add_awgn(signals[a], *spec.snr_db, spec.seed + 0x9e3779b97f4a7c15ull * (a + 1));
        }
        rx = modem::demodulate_subcarriers(signals, cfg);
    }
    const auto map = radar::range_doppler_map(tx, rx, cfg, spec.window, spec.scene.carrier_frequency_hz);
    const auto peaks = radar::extract_peaks(map, spec.detection_threshold_db, spec.max_peaks);

    std::ostringstream ss;
    radar::write_range_doppler_csv(ss, map);
    out.write("range_doppler.csv", ss.str());
    out.write("detections.json", radar::detections_json(peaks) + "\n");
}

void run_ber(const ScenarioSpec& spec, Artifacts& out)
{
    modem::BerOptions opts;
    opts.threads = spec.threads;
    const auto points = modem::simulate_ber(spec.waveform, spec.snr_db_list, spec.n_bits, spec.seed, opts);
    std::ostringstream ss;
    ss << "snr_db,ebn0_db,n_bits,n_errors,ber\n";
    for (const auto& p : points)
        ss << csv::num(p.snr_db) << ',' << csv::num(p.ebn0_db) << ',' << p.n_bits << ',' << p.n_errors << ','
           << csv::num(p.ber) << '\n';
    out.write("ber.csv", ss.str());
}

json weights_json(const beam::BeamWeights& w)
{
    json arr = json::array();
    for (const auto& v : w.values()) arr.push_back({v.real(), v.imag()});
    return arr;
}

std::string curve_csv(const beam::GainCurve& c)
{
    std::ostringstream ss;
    beam::write_gain_csv(ss, c);
    return ss.str();
}

json sll_json(const beam::GainCurve& c)
{
    const auto sll = beam::sidelobe_level(c);
    return sll ? json(*sll) : json(nullptr);
}

void run_beamform(const ScenarioSpec& spec, Artifacts& out)
{
    const auto patterns = patterns_for(spec);
    json summary;
    summary["ports"] = json::array();
    for (std::size_t p = 0; p < patterns.n_ports(); ++p) {
        const auto curve = beam::port_gain(patterns, p);
        const auto& label = patterns.ports()[p].label;
        out.write("port_" + label + ".csv", curve_csv(curve));
        summary["ports"].push_back({{"label", label}, {"sidelobe_level_db", sll_json(curve)}});
    }
    out.write("envelope.csv", curve_csv(beam::envelope_gain(patterns)));

    summary["steered"] = json::array();
    for (double target : spec.target_angles_deg) {
        const auto beam = beam::steered_pattern(patterns, target);
        out.write("steer_" + slug(target) + ".csv", curve_csv(beam.curve));
        const std::size_t idx = patterns.nearest_index(target);
        summary["steered"].push_back({{"target_angle_deg", target},
                                      {"grid_angle_deg", patterns.angles_deg()[idx]},
                                      {"gain_at_target_dbi", beam.curve.gain_db[idx]},
                                      {"mainlobe_angle_deg", beam.mainlobe_angle_deg},
                                      {"sidelobe_level_db", sll_json(beam.curve)},
                                      {"weights", weights_json(beam.weights)}});
    }
    out.write("beamform.json", summary.dump(2) + "\n");
}

void run_array_factor(const ScenarioSpec& spec, Artifacts& out)
{
    const auto angles = beam::azimuth_grid(spec.angle_step_deg);
    const auto curves =
        beam::array_factor_curves(spec.n_elements, spec.spacing_wavelengths, spec.element_gain_dbi, spec.steer_deg, angles);
    std::ostringstream ss;
    ss << "angle_deg,af_db,aaf_db\n";
    for (std::size_t i = 0; i < angles.size(); ++i)
        ss << csv::num(angles[i]) << ',' << csv::num(curves.af.gain_db[i]) << ',' << csv::num(curves.aaf.gain_db[i]) << '\n';
    out.write("array_factor.csv", ss.str());

    json summary;
    summary["peak_aaf_db"] = *std::max_element(curves.aaf.gain_db.begin(), curves.aaf.gain_db.end());
    summary["sidelobe_level_db"] = sll_json(curves.aaf);
    out.write("array_factor.json", summary.dump(2) + "\n");
}

void run_doa(const ScenarioSpec& spec, Artifacts& out)
{
    const auto patterns = patterns_for(spec);
    const double snr = spec.snr_db.value_or(20.0);
    const auto trials = beam::simulate_doa(patterns, snr, spec.n_trials.value_or(kDefaultDoaTrials), spec.seed, spec.threads);
    std::ostringstream ss;
    ss << "trial,true_deg,estimated_deg,error_deg\n";
    for (std::size_t i = 0; i < trials.size(); ++i)
        ss << i << ',' << csv::num(trials[i].true_deg) << ',' << csv::num(trials[i].estimated_deg) << ','
           << csv::num(trials[i].error_deg) << '\n';
    out.write("doa.csv", ss.str());
    json summary;
    summary["snr_db"] = snr;
    summary["n_trials"] = trials.size();
    summary["rmse_deg"] = beam::doa_rmse_deg(trials);
    out.write("doa.json", summary.dump(2) + "\n");
}

void write_meta(const ScenarioSpec& spec, Artifacts& out, const std::vector<std::string>& warnings, double wall_s)
{
    json meta;
    meta["experiment"] = std::string(to_string(spec.experiment));
    meta["config"] = json::parse(scenario_to_json(spec));
    meta["seed"] = spec.seed;
    meta["tool_version"] = std::string(kToolVersion);
    meta["wall_time_s"] = wall_s;
    meta["files"] = out.files();
    meta["warnings"] = warnings;
    out.write("run_meta.json", meta.dump(2) + "\n");
}

fs::path default_output_dir(const ScenarioSpec& spec)
{
    if (!spec.output_dir.empty()) return spec.output_dir;
    if (spec.experiment == Experiment::figures) return "figures";
    return fs::path("out") / std::string(to_string(spec.experiment));
}

void run_figures(const ScenarioSpec& spec, Artifacts& out)
{
    // Fig. 3: SISO and 2-TX interleaved, OFDM and DFT-s-OFDM.
    const auto thresholds = papr::threshold_grid(spec.threshold_start_db, spec.threshold_stop_db, spec.threshold_step_db);
    const std::uint64_t trials = spec.n_trials.value_or(kFigureTrials);
    papr::CcdfOptions opts;
    opts.threads = spec.threads;
    WaveformConfig siso = spec.waveform;
    siso.n_tx = 1;
    siso.allocation = Allocation::FULL;
    WaveformConfig mimo = spec.waveform;
    mimo.n_tx = 2;
    mimo.allocation = Allocation::INTERLEAVED_2TX;
    const papr::CcdfCurve curves[] = {
        papr::estimate_ccdf(with_spreading(siso, Spreading::NONE), trials, thresholds, spec.seed, opts),
        papr::estimate_ccdf(with_spreading(siso, Spreading::DFT_SPREAD), trials, thresholds, spec.seed, opts),
        papr::estimate_ccdf(with_spreading(mimo, Spreading::NONE), trials, thresholds, spec.seed, opts),
        papr::estimate_ccdf(with_spreading(mimo, Spreading::DFT_SPREAD), trials, thresholds, spec.seed, opts),
    };
    std::ostringstream fig3;
    fig3 << "papr_db,siso_ofdm,siso_dft_s_ofdm,mimo_ofdm,mimo_dft_s_ofdm\n";
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        fig3 << csv::num(thresholds[i]);
        for (const auto& c : curves) fig3 << ',' << csv::num(c.points[i].exceedance_probability);
        fig3 << '\n';
    }
    out.write("fig3_ccdf.csv", fig3.str());

    // Fig. 4 with the synthetic fixture standing in for the measured antenna.
    const auto fixture = beam::synthetic_fixture(spec.angle_step_deg);
    const beam::GainCurve fig4_cols[] = {
        beam::port_gain(fixture, 0),
        beam::port_gain(fixture, 1),
        beam::port_gain(fixture, 2),
        beam::envelope_gain(fixture),
        beam::steered_pattern(fixture, 30.0).curve,
    };
    std::ostringstream fig4;
    fig4 << "angle_deg,g1_dbi,g4_dbi,g5_dbi,gmax_dbi,g30_dbi\n";
    for (std::size_t i = 0; i < fixture.n_angles(); ++i) {
        fig4 << csv::num(fixture.angles_deg()[i]);
        for (const auto& c : fig4_cols) fig4 << ',' << csv::num(c.gain_db[i]);
        fig4 << '\n';
    }
    out.write("fig4_fixture.csv", fig4.str());

    // Fig. 5: uniformly fed 3-element array, half-wavelength spacing, 5.2 dBi monopoles.
    const auto angles = beam::azimuth_grid(1.0);
    const auto array = beam::array_factor_curves(3, 0.5, 5.2, 90.0, angles);
    std::ostringstream fig5;
    fig5 << "angle_deg,aaf_db,ant_db,af_db\n";
    for (std::size_t i = 0; i < angles.size(); ++i)
        fig5 << csv::num(angles[i]) << ',' << csv::num(array.aaf.gain_db[i]) << ',' << csv::num(5.2) << ','
             << csv::num(array.af.gain_db[i]) << '\n';
    out.write("fig5_array.csv", fig5.str());
}

} // namespace

std::optional<Experiment> experiment_from_string(std::string_view name)
{
    for (const auto& e : kExperiments)
        if (e.name == name) return e.e;
    return std::nullopt;
}

std::string_view to_string(Experiment e)
{
    for (const auto& x : kExperiments)
        if (x.e == e) return x.name;
    return "?";
}

ScenarioSpec parse_scenario(Experiment experiment, std::string_view json_text, const fs::path& base_dir)
{
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed config JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");

    ScenarioSpec spec;
    spec.experiment = experiment;
    json waveform = json::object();
    bool has_targets = false;
    std::optional<fs::path> scene_path;
    std::optional<double> carrier;

    for (const auto& [key, v] : j.items()) {
        if (detail::is_waveform_key(key)) waveform[key] = v;
        else if (key == "experiment") {
            if (get_string(v, key) != to_string(experiment))
                throw ConfigError("config is for experiment '" + v.get<std::string>() + "', not '" +
                                  std::string(to_string(experiment)) + "'");
        }
        else if (key == "seed") spec.seed = get_u64(v, key);
        else if (key == "threads") spec.threads = get_u64(v, key);
        else if (key == "output_dir") spec.output_dir = resolve(base_dir, get_string(v, key));
        else if (key == "n_trials") spec.n_trials = get_u64(v, key);
        else if (key == "threshold_start_db") spec.threshold_start_db = get_double(v, key);
        else if (key == "threshold_stop_db") spec.threshold_stop_db = get_double(v, key);
        else if (key == "threshold_step_db") spec.threshold_step_db = get_double(v, key);
        else if (key == "n_bits") spec.n_bits = get_u64(v, key);
        else if (key == "snr_db_list") spec.snr_db_list = get_double_list(v, key);
        else if (key == "snr_db") spec.snr_db = get_double(v, key);
        else if (key == "carrier_frequency_hz") carrier = get_double(v, key);
        else if (key == "targets") {
            spec.scene.targets = parse_targets(v);
            has_targets = true;
        }
        else if (key == "scene_path") scene_path = resolve(base_dir, get_string(v, key));
        else if (key == "window") spec.window = radar::window_from_string(get_string(v, key));
        else if (key == "detection_threshold_db") spec.detection_threshold_db = get_double(v, key);
        else if (key == "max_peaks") spec.max_peaks = get_u64(v, key);
        else if (key == "patterns_path") spec.patterns_path = resolve(base_dir, get_string(v, key));
        else if (key == "target_angles_deg") spec.target_angles_deg = get_double_list(v, key);
        else if (key == "angle_step_deg") spec.angle_step_deg = get_double(v, key);
        else if (key == "n_elements") spec.n_elements = get_u64(v, key);
        else if (key == "spacing_wavelengths") spec.spacing_wavelengths = get_double(v, key);
        else if (key == "element_gain_dbi") spec.element_gain_dbi = get_double(v, key);
        else if (key == "steer_deg") spec.steer_deg = get_double(v, key);
        else throw ConfigError("unknown config key '" + key + "'");
    }

    spec.waveform = detail::config_from_json(waveform);
    if (has_targets && scene_path) throw ConfigError("give either targets or scene_path, not both");
    if (scene_path) parse_scene_file(*scene_path, spec.scene);
    if (carrier) spec.scene.carrier_frequency_hz = *carrier;
    spec.has_scene = has_targets || scene_path.has_value();
    if (experiment == Experiment::radar_sim && !spec.has_scene)
        throw ConfigError("radar_sim requires 'targets' or 'scene_path'");
    return spec;
}

std::string scenario_to_json(const ScenarioSpec& spec)
{
    json j = detail::config_as_json(spec.waveform);
    j["experiment"] = std::string(to_string(spec.experiment));
    j["seed"] = spec.seed;
    switch (spec.experiment) {
    case Experiment::papr_ccdf:
    case Experiment::figures:
        j["n_trials"] = spec.n_trials.value_or(spec.experiment == Experiment::figures ? kFigureTrials : kDefaultPaprTrials);
        j["threshold_start_db"] = spec.threshold_start_db;
        j["threshold_stop_db"] = spec.threshold_stop_db;
        j["threshold_step_db"] = spec.threshold_step_db;
        if (spec.experiment == Experiment::figures) j["angle_step_deg"] = spec.angle_step_deg;
        break;
    case Experiment::radar_sim: {
        j["carrier_frequency_hz"] = spec.scene.carrier_frequency_hz;
        json targets = json::array();
        for (const auto& t : spec.scene.targets)
            targets.push_back({{"range_m", t.range_m},
                               {"radial_velocity_mps", t.radial_velocity_mps},
                               {"amplitude", {t.amplitude.real(), t.amplitude.imag()}}});
        j["targets"] = targets;
        if (spec.snr_db) j["snr_db"] = *spec.snr_db;
        j["window"] = std::string(radar::to_string(spec.window));
        j["detection_threshold_db"] = spec.detection_threshold_db;
        j["max_peaks"] = spec.max_peaks;
        break;
    }
    case Experiment::ber:
        j["n_bits"] = spec.n_bits;
        j["snr_db_list"] = spec.snr_db_list;
        break;
    case Experiment::beamform:
        if (spec.patterns_path) j["patterns_path"] = spec.patterns_path->string();
        j["target_angles_deg"] = spec.target_angles_deg;
        j["angle_step_deg"] = spec.angle_step_deg;
        break;
    case Experiment::array_factor:
        j["n_elements"] = spec.n_elements;
        j["spacing_wavelengths"] = spec.spacing_wavelengths;
        j["element_gain_dbi"] = spec.element_gain_dbi;
        j["steer_deg"] = spec.steer_deg;
        j["angle_step_deg"] = spec.angle_step_deg;
        break;
    case Experiment::doa:
        if (spec.patterns_path) j["patterns_path"] = spec.patterns_path->string();
        j["n_trials"] = spec.n_trials.value_or(kDefaultDoaTrials);
        j["snr_db"] = spec.snr_db.value_or(20.0);
        j["angle_step_deg"] = spec.angle_step_deg;
        break;
    }
    return j.dump(2);
}

RunResult run(const ScenarioSpec& spec)
{
    const auto start = std::chrono::steady_clock::now();
    validate_config(spec.waveform);
    Artifacts out(prepare_output_dir(default_output_dir(spec)));
    std::vector<std::string> warnings;

    switch (spec.experiment) {
    case Experiment::papr_ccdf: run_papr_ccdf(spec, out); break;
    case Experiment::radar_sim: run_radar(spec, out, warnings); break;
    case Experiment::ber: run_ber(spec, out); break;
    case Experiment::beamform: run_beamform(spec, out); break;
    case Experiment::array_factor: run_array_factor(spec, out); break;
    case Experiment::doa: run_doa(spec, out); break;
    case Experiment::figures: run_figures(spec, out); break;
    }

    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_meta(spec, out, warnings, wall);
    return {out.dir(), out.files(), warnings};
}

RunResult reproduce_figures(const ScenarioSpec& spec)
{
    ScenarioSpec s = spec;
    s.experiment = Experiment::figures;
    return run(s);
}

int exit_code_for(const std::exception& e)
{
    if (dynamic_cast<const IoError*>(&e)) return kExitIo;
    if (dynamic_cast<const ConfigError*>(&e)) return kExitUsage;
    return kExitNumeric;
}

} // namespace jcsl::cli
