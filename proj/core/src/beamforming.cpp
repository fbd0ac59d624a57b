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

#include "jcsl/beamforming.hpp"

#include "jcsl/csv.hpp"
#include "jcsl/error.hpp"
#include "jcsl/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

namespace jcsl::beam {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

double to_dbi(double power) { return 10.0 * std::log10(power); }

double circular_distance(double a, double b)
{
    double d = std::fmod(std::abs(a - b), 360.0);
    return std::min(d, 360.0 - d);
}

} // namespace

PortPatternSet::PortPatternSet(std::vector<double> angles_deg, std::vector<Port> ports)
    : angles_(std::move(angles_deg)), ports_(std::move(ports))
{
    if (ports_.empty()) throw ConfigError("pattern set needs at least one port");
    if (angles_.empty()) throw ConfigError("pattern set needs a non-empty angle grid");
    for (std::size_t i = 0; i < angles_.size(); ++i) {
        if (!(angles_[i] >= 0.0 && angles_[i] < 360.0)) throw ConfigError("pattern angles must lie in [0, 360)");
        if (i > 0 && !(angles_[i] > angles_[i - 1])) throw ConfigError("pattern angles must be strictly increasing");
    }
    for (const auto& p : ports_)
        if (p.field.size() != angles_.size())
            throw DimensionError("port '" + p.label + "' is not sampled on the shared angle grid");
}

std::size_t PortPatternSet::nearest_index(double angle_deg) const
{
    std::size_t best = 0;
    double best_d = circular_distance(angles_[0], angle_deg);
    for (std::size_t i = 1; i < angles_.size(); ++i) {
        const double d = circular_distance(angles_[i], angle_deg);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

std::vector<cd> PortPatternSet::field_vector(std::size_t i) const
{
    std::vector<cd> e(ports_.size());
    for (std::size_t p = 0; p < ports_.size(); ++p) e[p] = ports_[p].field[i];
    return e;
}

BeamWeights::BeamWeights(std::vector<cd> w) : w_(std::move(w))
{
    double power = 0.0;
    for (const auto& v : w_) power += std::norm(v);
    if (w_.empty() || !(power > 0.0) || !std::isfinite(power)) throw NumericError("beam weights have zero power");
    const double scale = 1.0 / std::sqrt(power);
    for (auto& v : w_) v *= scale;
}

std::vector<double> azimuth_grid(double step_deg)
{
    if (!(step_deg > 0.0) || step_deg > 360.0) throw ConfigError("angle step must be in (0, 360]");
    std::vector<double> grid;
    for (std::size_t i = 0;; ++i) {
        const double a = static_cast<double>(i) * step_deg;
        if (a >= 360.0 - 1e-9) break;
        grid.push_back(a);
    }
    return grid;
}

PortPatternSet synthetic_fixture(double step_deg)
{
    auto angles = azimuth_grid(step_deg);
    std::vector<Port> ports{{"mode1", {}}, {"mode4", {}}, {"mode5", {}}};
    for (double a : angles) {
        ports[0].field.emplace_back(1.0, 0.0);
        ports[1].field.emplace_back(std::sqrt(2.0) * std::cos(a * kDeg), 0.0);
        ports[2].field.emplace_back(std::sqrt(2.0) * std::sin(a * kDeg), 0.0);
    }
    return PortPatternSet(std::move(angles), std::move(ports));
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
        while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double parse_number(const std::string& s, std::size_t line_no)
{
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
        throw IoError("pattern file line " + std::to_string(line_no) + ": '" + s + "' is not a number");
    return v;
}

} // namespace

PortPatternSet read_patterns(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line)) throw IoError("pattern file is empty");
    const auto header = split_csv_line(line);
    auto column = [&](const char* name) {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) throw IoError(std::string("pattern file is missing column '") + name + "'");
        return static_cast<std::size_t>(it - header.begin());
    };
    const std::size_t c_angle = column("angle_deg");
    const std::size_t c_port = column("port");
    const std::size_t c_gain = column("gain_dbi");
    const std::size_t c_phase = column("phase_deg");

    std::vector<std::string> order;
    std::map<std::string, std::pair<std::vector<double>, std::vector<cd>>> by_port;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw IoError("pattern file line " + std::to_string(line_no) + " has " + std::to_string(cells.size()) +
                          " columns, expected " + std::to_string(header.size()));
        const double angle = parse_number(cells[c_angle], line_no);
        const double gain = parse_number(cells[c_gain], line_no);
        const double phase = parse_number(cells[c_phase], line_no);
        const std::string& label = cells[c_port];
        if (label.empty()) throw IoError("pattern file line " + std::to_string(line_no) + " has an empty port label");

        auto [it, inserted] = by_port.try_emplace(label);
        if (inserted) order.push_back(label);
        auto& [angles, field] = it->second;
        if (!angles.empty() && !(angle > angles.back()))
            throw IoError("pattern file: angles of port '" + label + "' are not ascending at line " +
                          std::to_string(line_no));
        angles.push_back(angle);
        field.push_back(std::polar(std::sqrt(std::pow(10.0, gain / 10.0)), phase * kDeg));
    }
    if (order.empty()) throw IoError("pattern file has no data rows");

    const auto& grid = by_port.at(order.front()).first;
    std::vector<Port> ports;
    for (const auto& label : order) {
        auto& [angles, field] = by_port.at(label);
        if (angles != grid) throw IoError("pattern file: port '" + label + "' uses a different angle grid");
        ports.push_back({label, std::move(field)});
    }
    try {
        return PortPatternSet(grid, std::move(ports));
    } catch (const ConfigError& e) {
        throw IoError(std::string("pattern file: ") + e.what());
    }
}

PortPatternSet load_patterns(const std::filesystem::path& path)
{
    std::ifstream is(path);
    if (!is) throw IoError("cannot open pattern file " + path.string());
    return read_patterns(is);
}

void write_patterns(std::ostream& os, const PortPatternSet& patterns)
{
    os << "angle_deg,port,gain_dbi,phase_deg\n";
    char buf[64];
    for (const auto& port : patterns.ports()) {
        for (std::size_t i = 0; i < patterns.n_angles(); ++i) {
            const cd e = port.field[i];
            // Full precision: pattern files are inputs and must roundtrip.
            std::snprintf(buf, sizeof buf, "%.17g", patterns.angles_deg()[i]);
            os << buf << ',' << port.label << ',';
            std::snprintf(buf, sizeof buf, "%.17g", to_dbi(std::norm(e)));
            os << buf << ',';
            std::snprintf(buf, sizeof buf, "%.17g", std::arg(e) / kDeg);
            os << buf << '\n';
        }
    }
}

GainCurve port_gain(const PortPatternSet& patterns, std::size_t port)
{
    if (port >= patterns.n_ports()) throw DimensionError("port index out of range");
    GainCurve c{patterns.angles_deg(), {}};
    for (const auto& e : patterns.ports()[port].field) c.gain_db.push_back(to_dbi(std::norm(e)));
    return c;
}

GainCurve combined_gain(const PortPatternSet& patterns, const BeamWeights& weights)
{
    if (weights.size() != patterns.n_ports())
        throw DimensionError("weight count " + std::to_string(weights.size()) + " differs from port count " +
                             std::to_string(patterns.n_ports()));
    GainCurve c{patterns.angles_deg(), {}};
    c.gain_db.reserve(patterns.n_angles());
    const auto& w = weights.values();
    for (std::size_t i = 0; i < patterns.n_angles(); ++i) {
        cd sum{};
        for (std::size_t p = 0; p < w.size(); ++p) sum += w[p] * patterns.ports()[p].field[i];
        c.gain_db.push_back(to_dbi(std::norm(sum)));
    }
    return c;
}

GainCurve envelope_gain(const PortPatternSet& patterns)
{
    GainCurve c{patterns.angles_deg(), {}};
    for (std::size_t i = 0; i < patterns.n_angles(); ++i) {
        double power = 0.0;
        for (const auto& port : patterns.ports()) power += std::norm(port.field[i]);
        c.gain_db.push_back(to_dbi(power));
    }
    return c;
}

BeamWeights optimize_weights(const PortPatternSet& patterns, double target_angle_deg)
{
    const auto e = patterns.field_vector(patterns.nearest_index(target_angle_deg));
    double power = 0.0;
    for (const auto& v : e) power += std::norm(v);
    if (!(power > 0.0)) throw NumericError("every port has a null at the target angle");
    std::vector<cd> w(e.size());
    for (std::size_t p = 0; p < e.size(); ++p) w[p] = std::conj(e[p]);
    return BeamWeights(std::move(w));
}

SteeredBeam steered_pattern(const PortPatternSet& patterns, double target_angle_deg)
{
    auto weights = optimize_weights(patterns, target_angle_deg);
    auto curve = combined_gain(patterns, weights);
    const auto peak = std::max_element(curve.gain_db.begin(), curve.gain_db.end());
    const double mainlobe = curve.angles_deg[static_cast<std::size_t>(peak - curve.gain_db.begin())];
    return {std::move(curve), std::move(weights), mainlobe};
}

ArrayFactorGain array_factor_gain(std::size_t n_elements, double spacing_wavelengths, double element_gain_dbi,
                                  double steer_deg, double angle_deg)
{
    if (n_elements == 0) throw ConfigError("array needs at least one element");
    if (!(spacing_wavelengths > 0.0)) throw ConfigError("element spacing must be positive");
    const double n = static_cast<double>(n_elements);
    const double psi =
        2.0 * std::numbers::pi * spacing_wavelengths * (std::cos(angle_deg * kDeg) - std::cos(steer_deg * kDeg));
    const double den = std::sin(psi / 2.0);
    const double af = std::abs(den) < 1e-12 ? n : std::abs(std::sin(n * psi / 2.0) / den);
    ArrayFactorGain g;
    g.af_db = 10.0 * std::log10(af);
    g.aaf_db = g.af_db + element_gain_dbi;
    return g;
}

ArrayCurves array_factor_curves(std::size_t n_elements, double spacing_wavelengths, double element_gain_dbi,
                                double steer_deg, std::span<const double> angles_deg)
{
    ArrayCurves c;
    c.aaf.angles_deg.assign(angles_deg.begin(), angles_deg.end());
    c.af.angles_deg = c.aaf.angles_deg;
    for (double a : angles_deg) {
        const auto g = array_factor_gain(n_elements, spacing_wavelengths, element_gain_dbi, steer_deg, a);
        c.aaf.gain_db.push_back(g.aaf_db);
        c.af.gain_db.push_back(g.af_db);
    }
    return c;
}

namespace {

bool is_full_circle(const std::vector<double>& angles)
{
    if (angles.size() < 3) return false;
    const double step = angles[1] - angles[0];
    for (std::size_t i = 1; i < angles.size(); ++i)
        if (std::abs(angles[i] - angles[i - 1] - step) > 1e-9 * std::max(1.0, step)) return false;
    return std::abs(static_cast<double>(angles.size()) * step - 360.0) < 1e-6;
}

} // namespace

std::optional<double> sidelobe_level(const GainCurve& curve)
{
    const auto& g = curve.gain_db;
    const std::size_t n = g.size();
    if (n == 0) return std::nullopt;
    const bool circular = curve.angles_deg.size() == n && is_full_circle(curve.angles_deg);
    const double gmax = *std::max_element(g.begin(), g.end());
    constexpr double kTieDb = 1e-6;

    std::vector<char> in_main(n, 0);
    auto step = [&](std::size_t i, int dir, std::size_t& next) {
        if (circular) {
            next = dir < 0 ? (i + n - 1) % n : (i + 1) % n;
            return true;
        }
        if (dir < 0 && i == 0) return false;
        if (dir > 0 && i + 1 == n) return false;
        next = dir < 0 ? i - 1 : i + 1;
        return true;
    };
    for (std::size_t peak = 0; peak < n; ++peak) {
        if (g[peak] < gmax - kTieDb || in_main[peak]) continue;
        in_main[peak] = 1;
        for (int dir : {-1, 1}) {
            std::size_t i = peak;
            std::size_t next = 0;
            // Walk downhill (or flat) until the slope turns upward.
            while (step(i, dir, next) && !in_main[next] && g[next] <= g[i]) {
                in_main[next] = 1;
                i = next;
            }
        }
    }

    std::optional<double> best;
    for (std::size_t i = 0; i < n; ++i)
        if (!in_main[i] && (!best || g[i] > *best)) best = g[i];
    if (!best) return std::nullopt;
    return *best - gmax;
}

double estimate_doa(std::span<const cd> port_snapshots, const PortPatternSet& patterns)
{
    if (patterns.n_ports() < 2) throw NumericError("DoA unresolvable: at least two ports are required");
    if (port_snapshots.size() != patterns.n_ports())
        throw DimensionError("snapshot count differs from port count");
    double snap_energy = 0.0;
    for (const auto& x : port_snapshots) snap_energy += std::norm(x);
    if (!(snap_energy > 0.0)) throw NumericError("DoA snapshot has zero energy");

    std::vector<double> metric(patterns.n_angles(), 0.0);
    for (std::size_t i = 0; i < patterns.n_angles(); ++i) {
        cd corr{};
        double norm = 0.0;
        for (std::size_t p = 0; p < patterns.n_ports(); ++p) {
            const cd e = patterns.ports()[p].field[i];
            corr += std::conj(e) * port_snapshots[p];
            norm += std::norm(e);
        }
        metric[i] = norm > 0.0 ? std::norm(corr) / norm : 0.0;
    }
    const auto lo = std::min_element(metric.begin(), metric.end());
    const auto hi = std::max_element(metric.begin(), metric.end());
    if (*hi - *lo <= 1e-12 * *hi) throw NumericError("DoA unresolvable: the pattern metric is flat over the grid");
    // First maximum, i.e. the lowest angle on ties.
    return patterns.angles_deg()[static_cast<std::size_t>(hi - metric.begin())];
}

std::vector<DoaTrial> simulate_doa(const PortPatternSet& patterns, double snr_db, std::size_t n_trials,
                                   std::uint64_t seed, std::size_t threads)
{
    constexpr std::size_t kTrialsPerChunk = 256;
    const bool noiseless = std::isinf(snr_db) && snr_db > 0;
    const double snr_lin = std::pow(10.0, snr_db / 10.0);
    std::vector<DoaTrial> out(n_trials);
    const std::size_t n_chunks = (n_trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
    run_chunks(n_chunks, threads, [&](std::size_t chunk) {
        auto rng = chunk_engine(seed, 0, chunk);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<cd> x(patterns.n_ports());
        const std::size_t last = std::min(n_trials, (chunk + 1) * kTrialsPerChunk);
        for (std::size_t t = chunk * kTrialsPerChunk; t < last; ++t) {
            const auto idx = static_cast<std::size_t>(rng() % patterns.n_angles());
            const auto e = patterns.field_vector(idx);
            double mean_power = 0.0;
            for (const auto& v : e) mean_power += std::norm(v);
            mean_power /= static_cast<double>(e.size());
            const double sigma = noiseless ? 0.0 : std::sqrt(mean_power / snr_lin / 2.0);
            for (std::size_t p = 0; p < e.size(); ++p) {
                const double re = sigma * gauss(rng);
                const double im = sigma * gauss(rng);
                x[p] = e[p] + cd(re, im);
            }
            DoaTrial& trial = out[t];
            trial.true_deg = patterns.angles_deg()[idx];
            trial.estimated_deg = estimate_doa(x, patterns);
            double err = std::fmod(trial.estimated_deg - trial.true_deg, 360.0);
            if (err > 180.0) err -= 360.0;
            if (err <= -180.0) err += 360.0;
            trial.error_deg = err;
        }
    });
    return out;
}

double doa_rmse_deg(std::span<const DoaTrial> trials)
{
    if (trials.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& t : trials) sum += t.error_deg * t.error_deg;
    return std::sqrt(sum / static_cast<double>(trials.size()));
}

void write_gain_csv(std::ostream& os, const GainCurve& curve)
{
    os << "angle_deg,gain_dbi\n";
    for (std::size_t i = 0; i < curve.gain_db.size(); ++i)
        os << csv::num(curve.angles_deg[i]) << ',' << csv::num(curve.gain_db[i]) << '\n';
}

} // namespace jcsl::beam
