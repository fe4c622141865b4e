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

// Symbol-domain OFDM radar simulation. Everything lives on the post-FFT,
// symbol-divided grid y[n, m] (N subcarriers x M symbols):
//
//   y[n,m] = g_t(n,m) e^{-j2 pi n df tau} e^{+j2 pi fc nu m T}
//          + g_i(n,m) (d_i/d_v)(n,m) e^{-j2 pi n df tau_i} e^{+j2 pi fc nu_i m T}
//          + z[n,m]
//
// with RIS gains g_t = alpha (C_m^T b_n(theta)) and g_i = alpha_i (C_m^T b_n(theta_i)).

#ifndef RISRADAR_RADAR_SIM_HPP
#define RISRADAR_RADAR_SIM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "risradar/array.hpp"

namespace risradar {

using ComplexGrid = Eigen::MatrixXcd;

struct TargetParams {
    double range_m = 30.0;
    double velocity_mps = 0.0;
    double angle_rad = 2.0 * kPi / 5.0;
    cd amplitude{1.0, 0.0};

    double delay_s() const { return 2.0 * range_m / kSpeedOfLight; }
    double doppler_scale() const { return 2.0 * velocity_mps / kSpeedOfLight; }
};

struct InterferenceParams {
    double delay_s = 0.0;
    double doppler_scale = 0.0;
    double angle_rad = kPi / 4.0;
    cd amplitude{1.0, 0.0};
    std::uint64_t symbol_seed = 0;
};

struct NoiseParams {
    double variance = 0.0;
    std::uint64_t seed = 0;
};

/// Unit-power QPSK symbols, one per (subcarrier, symbol).
struct SymbolGrid {
    ComplexGrid symbols;
    std::uint64_t seed = 0;
};

SymbolGrid generate_symbols(const OfdmParams& params, std::uint64_t seed);

struct SimulationInput {
    OfdmParams params;
    ArrayGeometry geometry;
    RisConfig config;
    TargetParams target;
    std::optional<InterferenceParams> interference;
    NoiseParams noise;
    SymbolGrid symbols;
    SubcarrierMode mode = SubcarrierMode::CarrierOnly;
};

ComplexGrid simulate_received(const SimulationInput& input);

/// (y_a - y_b) / 2 for frames recorded with configurations C and -C.
ComplexGrid frame_difference(const ComplexGrid& y_a, const ComplexGrid& y_b);

/// Simulates the frame pair (C, -C), adds static_term to both frames, draws
/// independent noise for each and returns their frame difference. The second
/// frame's noise seed is derived from input.noise.seed.
ComplexGrid simulate_frame_pair(const SimulationInput& input, const ComplexGrid& static_term);

struct RvMap {
    ComplexGrid values; // range bins x velocity bins
    double range_bin_m = 0.0;
    double velocity_bin_mps = 0.0;
    std::size_t pad_range = 1;
    std::size_t pad_velocity = 1;

    std::size_t range_bins() const { return static_cast<std::size_t>(values.rows()); }
    std::size_t velocity_bins() const { return static_cast<std::size_t>(values.cols()); }
    double range_of_bin(std::size_t k) const { return static_cast<double>(k) * range_bin_m; }
    /// Upper half of the velocity axis maps to negative velocities.
    double velocity_of_bin(std::size_t q) const;
};

/// Unnormalized inverse DFT over subcarriers (length pad_range * N) and forward
/// DFT over symbols (length pad_velocity * M), both zero-padded, no window.
RvMap rv_map(const ComplexGrid& y, const OfdmParams& params, std::size_t pad_range = 1,
             std::size_t pad_velocity = 1);

struct TargetEstimate {
    double range_m = 0.0;
    double velocity_mps = 0.0;
    double peak_power = 0.0;
    std::size_t range_bin = 0;
    std::size_t velocity_bin = 0;
};

/// Maximum-likelihood peak: argmax |map|, ties to the lowest range bin, then
/// the lowest velocity bin.
TargetEstimate estimate_target(const RvMap& map);

double range_error(double true_range_m, double estimated_range_m);

} // namespace risradar

#endif
