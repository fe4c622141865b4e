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

// Closed-form RIS configurations (peak, notch, multi-notch), combination by
// convolution, and the SINR objective.
//
// Convolving two configuration columns multiplies their carrier patterns:
// pattern(a * b)(theta) = pattern(a)(theta) * pattern(b)(theta). Every
// combination in this module relies on that identity.

#ifndef RISRADAR_SYNTHESIS_HPP
#define RISRADAR_SYNTHESIS_HPP

#include <cstddef>

#include "risradar/array.hpp"

namespace risradar {

/// Conjugate phase alignment, c_l = exp(+j pi l cos theta_t). Its carrier
/// pattern magnitude at theta_t is exactly L_p.
RisConfig analytic_peak(double theta_t, std::size_t num_elements);

/// Two-element configuration [1, -exp(+j pi cos theta_n)] whose carrier pattern
/// vanishes at theta_n.
RisConfig notch_config(double theta_n);

struct NotchSpec {
    double angle_rad = kPi / 4.0;
    std::size_t count = 1;     // K
    double spacing_rad = 0.0;  // epsilon
};

/// Angles theta_n + (k - (K-1)/2) * epsilon, k = 0..K-1.
std::vector<double> notch_angles(const NotchSpec& spec);

/// Convolution of K two-element notches; K+1 elements, not renormalized.
RisConfig multi_notch(const NotchSpec& spec);

/// Per-slot discrete linear convolution. A single-slot operand is broadcast
/// against a multi-slot one.
RisConfig combine_convolve(const RisConfig& a, const RisConfig& b);

/// Scales the configuration so that its largest coefficient magnitude is 1.
RisConfig renormalize(const RisConfig& config);

/// combine_convolve followed by renormalize.
RisConfig combine_normalized(const RisConfig& a, const RisConfig& b);

/// |pattern(theta_t)| / sum_l |c_l|: the achieved gain relative to the best
/// phase alignment of the same magnitudes. Uses slot 0 and the carrier pattern.
double peak_gain_ratio(const RisConfig& config, double theta_t);

struct SinrReport {
    double signal_power = 0.0;
    double interference_power = 0.0;
    double noise_power = 0.0;
    double sinr_linear = 0.0;
    double sinr_db = 0.0;
};

SinrReport sinr(const ArrayGeometry& geometry, const RisConfig& config, const OfdmParams& params, double theta,
                double theta_i, double sigma2, SubcarrierMode mode = SubcarrierMode::CarrierOnly);

/// Suppression metrics of a notch pattern around the interferer angle, measured
/// on the carrier pattern normalized to its maximum over [0, pi].
struct SuppressionMetrics {
    double threshold_db = -30.0;
    double bandwidth_rad = 0.0;        // contiguous span below threshold containing theta_i
    double lower_edge_rad = 0.0;
    double upper_edge_rad = 0.0;
    double min_inband_suppression_db = 0.0; // -max normalized dB over the notch design band
    double depth_at_center_db = 0.0;        // normalized dB at theta_i
};

SuppressionMetrics suppression_metrics(const RisConfig& notch, const NotchSpec& spec, double threshold_db = -30.0,
                                       double floor_db = kDefaultDbFloor);

/// Maximum of |carrier_pattern|^2 over [0, pi], grid search refined by golden section.
double carrier_pattern_peak_power(std::span<const cd> column);

} // namespace risradar

#endif
