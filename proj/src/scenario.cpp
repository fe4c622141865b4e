// SPDX-License-Identifier: Apache-2.0
//
// risradar: RIS-assisted OFDM radar interference mitigation toolkit
// Copyright (C) 2026 The risradar authors
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

#include "risradar/scenario.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <sstream>

#include "risradar/error.hpp"
#include "risradar/text_io.hpp"

namespace risradar {

namespace {

struct Field {
    const char* key;
    std::function<void(Scenario&, std::string_view)> set;
    std::function<std::string(const Scenario&)> get;
};

std::string join(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + format_double(v[i]);
    return out;
}

std::vector<double> parse_list(std::string_view text) {
    std::vector<double> out;
    if (trim(text).empty())
        return out;
    for (auto f : split(text, ','))
        out.push_back(parse_double(f));
    return out;
}

std::size_t parse_size(std::string_view text) { return static_cast<std::size_t>(parse_u64(text)); }

#define RIS_DOUBLE(k, member)                                                                                   \
    Field {                                                                                                     \
        k, [](Scenario& s, std::string_view v) { s.member = parse_double(v); },                                 \
            [](const Scenario& s) { return format_double(s.member); }                                           \
    }
#define RIS_SIZE(k, member)                                                                                     \
    Field {                                                                                                     \
        k, [](Scenario& s, std::string_view v) { s.member = parse_size(v); },                                   \
            [](const Scenario& s) { return std::to_string(s.member); }                                          \
    }
#define RIS_LIST(k, member)                                                                                     \
    Field {                                                                                                     \
        k, [](Scenario& s, std::string_view v) { s.member = parse_list(v); },                                   \
            [](const Scenario& s) { return join(s.member); }                                                    \
    }

const std::vector<Field>& fields() {
    static const std::vector<Field> table = {
        RIS_DOUBLE("ofdm.carrier_freq_hz", ofdm.carrier_freq_hz),
        RIS_DOUBLE("ofdm.bandwidth_hz", ofdm.bandwidth_hz),
        RIS_SIZE("ofdm.num_subcarriers", ofdm.num_subcarriers),
        RIS_SIZE("ofdm.num_symbols", ofdm.num_symbols),
        RIS_DOUBLE("ofdm.cp_ratio", ofdm.cp_ratio),
        RIS_SIZE("geometry.peak_elements", peak_elements),
        RIS_DOUBLE("geometry.element_spacing", element_spacing),
        RIS_DOUBLE("angles.target_rad", target_angle),
        RIS_DOUBLE("angles.interferer_rad", interferer_angle),
        RIS_DOUBLE("target.range_m", target_range_m),
        RIS_DOUBLE("target.velocity_mps", target_velocity_mps),
        RIS_DOUBLE("target.amplitude", target_amplitude),
        RIS_DOUBLE("interference.delay_s", interference_delay_s),
        RIS_DOUBLE("interference.doppler_scale", interference_doppler_scale),
        RIS_DOUBLE("noise.variance", noise_variance),
        RIS_DOUBLE("frame.static_amplitude", static_amplitude),
        RIS_SIZE("network.num_layers", network.num_layers),
        RIS_SIZE("network.hidden_width", network.hidden_width),
        RIS_DOUBLE("network.learning_rate", network.learning_rate),
        RIS_SIZE("network.num_iterations", network.num_iterations),
        Field{"network.init_seed", [](Scenario& s, std::string_view v) { s.network.init_seed = parse_u64(v); },
              [](const Scenario& s) { return std::to_string(s.network.init_seed); }},
        RIS_SIZE("notch.count", notch_count),
        RIS_DOUBLE("notch.spacing_rad", notch_spacing),
        RIS_SIZE("notch.multi_count", multi_notch_count),
        RIS_LIST("notch.epsilons", epsilons),
        RIS_LIST("sweep.power_ratios_db", power_ratios_db),
        RIS_LIST("sweep.angle_offsets_rad", angle_offsets_rad),
        RIS_SIZE("sweep.trials", trials),
        RIS_SIZE("sweep.pad_range", pad_range),
        RIS_SIZE("sweep.pad_velocity", pad_velocity),
        RIS_DOUBLE("sweep.suppression_threshold_db", suppression_threshold_db),
        Field{"run.seed", [](Scenario& s, std::string_view v) { s.seed = parse_u64(v); },
              [](const Scenario& s) { return std::to_string(s.seed); }},
        Field{"run.output_dir", [](Scenario& s, std::string_view v) { s.output_dir = std::string(trim(v)); },
              [](const Scenario& s) { return s.output_dir; }},
        RIS_SIZE("run.grid_points", grid_points),
        Field{"run.subcarrier_mode",
              [](Scenario& s, std::string_view v) {
                  v = trim(v);
                  if (v == "carrier-only")
                      s.mode = SubcarrierMode::CarrierOnly;
                  else if (v == "all-subcarriers")
                      s.mode = SubcarrierMode::AllSubcarriers;
                  else
                      throw Error(ErrorCode::Parse, "run.subcarrier_mode must be carrier-only or all-subcarriers");
              },
              [](const Scenario& s) {
                  return std::string(s.mode == SubcarrierMode::CarrierOnly ? "carrier-only" : "all-subcarriers");
              }},
        RIS_SIZE("run.threads", threads),
    };
    return table;
}

#undef RIS_DOUBLE
#undef RIS_SIZE
#undef RIS_LIST

bool in_angle_domain(double a) { return std::isfinite(a) && a >= 0.0 && a <= kPi; }

} // namespace

void Scenario::set(std::string_view key, std::string_view value) {
    key = trim(key);
    for (const auto& f : fields()) {
        if (key == f.key) {
            try {
                f.set(*this, value);
            } catch (const Error& e) {
                throw Error(ErrorCode::Parse, std::string(key) + ": " + e.what());
            }
            return;
        }
    }
    throw Error(ErrorCode::Parse, "unknown scenario key '" + std::string(key) + "'");
}

void Scenario::validate() const {
    auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidScenario, what); };
    if (ofdm.num_subcarriers * ofdm.num_symbols == 0)
        fail("empty OFDM grid: ofdm.num_subcarriers * ofdm.num_symbols is 0");
    ofdm.validate();
    if (peak_elements == 0)
        fail("geometry.peak_elements must be positive");
    if (!(element_spacing > 0.0))
        fail("geometry.element_spacing must be positive");
    if (!in_angle_domain(target_angle))
        fail("angle out of range: angles.target_rad must lie in [0, pi]");
    if (!in_angle_domain(interferer_angle))
        fail("angle out of range: angles.interferer_rad must lie in [0, pi]");
    for (double d : angle_offsets_rad)
        if (!in_angle_domain(interferer_angle + d))
            fail("angle out of range: interferer angle plus sweep offset " + format_double(d) + " leaves [0, pi]");
    if (notch_spacing < 0.0)
        fail("negative notch spacing: notch.spacing_rad must be >= 0");
    for (double e : epsilons)
        if (!(e >= 0.0))
            fail("negative notch spacing: every notch.epsilons entry must be >= 0");
    if (notch_count == 0 || multi_notch_count == 0)
        fail("notch.count and notch.multi_count must be at least 1");
    if (trials == 0)
        fail("zero trials: sweep.trials must be at least 1");
    if (pad_range == 0 || pad_velocity == 0)
        fail("sweep.pad_range and sweep.pad_velocity must be at least 1");
    if (!(target_range_m >= 0.0 && target_range_m < ofdm.unambiguous_range()))
        fail("target.range_m must lie in [0, unambiguous range)");
    if (!(noise_variance >= 0.0))
        fail("noise.variance must be >= 0");
    if (grid_points < 2)
        fail("run.grid_points must be at least 2");
    network.validate();
}

std::string Scenario::to_text() const {
    std::string out;
    for (const auto& f : fields())
        out += std::string(f.key) + " = " + f.get(*this) + "\n";
    return out;
}

ArrayGeometry Scenario::peak_geometry() const {
    return ArrayGeometry{peak_elements, element_spacing, {}};
}

Scenario parse_scenario(std::istream& is) {
    Scenario s;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        std::string_view body = trim(std::string_view(line).substr(0, hash));
        if (body.empty())
            continue;
        const auto eq = body.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorCode::Parse, "scenario line " + std::to_string(lineno) + ": expected 'key = value'");
        try {
            s.set(body.substr(0, eq), body.substr(eq + 1));
        } catch (const Error& e) {
            throw Error(ErrorCode::Parse, "scenario line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is)
        throw Error(ErrorCode::Io, "cannot open scenario " + path.string());
    return parse_scenario(is);
}

} // namespace risradar
