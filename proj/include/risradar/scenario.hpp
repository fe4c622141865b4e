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

// Declarative experiment scenario: flat "section.key = value" text, '#'
// comments, comma-separated lists. Unknown keys are rejected.

#ifndef RISRADAR_SCENARIO_HPP
#define RISRADAR_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "risradar/array.hpp"
#include "risradar/peak_network.hpp"

namespace risradar {

struct Scenario {
    OfdmParams ofdm;

    std::size_t peak_elements = 200;     // geometry.peak_elements
    double element_spacing = 0.5;        // geometry.element_spacing

    double target_angle = 2.0 * kPi / 5.0; // angles.target_rad
    double interferer_angle = kPi / 4.0;   // angles.interferer_rad

    double target_range_m = 30.0;
    double target_velocity_mps = 20.0;
    double target_amplitude = 1.0;

    double interference_delay_s = 1.0e-7;
    double interference_doppler_scale = 0.0;

    double noise_variance = 1.0;
    double static_amplitude = 10.0; // frame.static_amplitude: direct-path term removed by frame subtraction

    PeakNetSpec network;

    std::size_t notch_count = 1;        // K for the pattern study and the sweep
    double notch_spacing = 0.0;
    std::size_t multi_notch_count = 4;  // K for the multi-notch study
    std::vector<double> epsilons{0.0, 1e-3, 1e-2};

    std::vector<double> power_ratios_db{0, 5, 10, 15, 20, 25, 30, 35, 40};
    std::vector<double> angle_offsets_rad{-0.02, -0.015, -0.01, -0.005, 0.0, 0.005, 0.01, 0.015, 0.02};
    std::size_t trials = 50;
    std::size_t pad_range = 4;
    std::size_t pad_velocity = 4;
    double suppression_threshold_db = -30.0;

    std::uint64_t seed = 1;
    std::string output_dir = "out";
    std::size_t grid_points = 721;
    SubcarrierMode mode = SubcarrierMode::CarrierOnly;
    std::size_t threads = 0; // 0: hardware concurrency

    /// Assigns one key; throws Error(Parse) for unknown keys or bad values.
    void set(std::string_view key, std::string_view value);
    /// Throws Error(InvalidScenario) with a diagnostic naming the failed rule.
    void validate() const;
    /// Canonical "key = value" listing of every field (stable ordering).
    std::string to_text() const;

    ArrayGeometry peak_geometry() const;
};

Scenario parse_scenario(std::istream& is);
Scenario load_scenario(const std::filesystem::path& path);

} // namespace risradar

#endif
