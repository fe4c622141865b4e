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

#include "risradar/array.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "risradar/error.hpp"

namespace risradar {

namespace {

void require_angle(double theta, const char* what) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > kPi)
        throw Error(ErrorCode::InputDomain,
                    std::string(what) + ": angle " + std::to_string(theta) + " rad outside [0, pi]");
}

// lambda / lambda_n for the requested mode.
double wavelength_ratio(const OfdmParams& params, std::size_t n, SubcarrierMode mode) {
    if (mode == SubcarrierMode::CarrierOnly)
        return 1.0;
    return params.wavelength() / params.subcarrier_wavelength(n);
}

} // namespace

void OfdmParams::validate() const {
    if (!(carrier_freq_hz > 0.0) || !std::isfinite(carrier_freq_hz))
        throw Error(ErrorCode::InvalidScenario, "ofdm.carrier_freq_hz must be positive");
    if (!(bandwidth_hz > 0.0) || !std::isfinite(bandwidth_hz))
        throw Error(ErrorCode::InvalidScenario, "ofdm.bandwidth_hz must be positive");
    if (num_subcarriers == 0 || num_symbols == 0)
        throw Error(ErrorCode::InvalidScenario,
                    "ofdm grid is empty: num_subcarriers * num_symbols must be nonzero");
    if (!(cp_ratio >= 0.0 && cp_ratio < 1.0))
        throw Error(ErrorCode::InvalidScenario, "ofdm.cp_ratio must lie in [0, 1)");
}

double OfdmParams::subcarrier_wavelength(std::size_t n) const {
    return kSpeedOfLight / (carrier_freq_hz + static_cast<double>(n) * subcarrier_spacing());
}

double OfdmParams::velocity_bin_size() const {
    return kSpeedOfLight /
           (2.0 * carrier_freq_hz * static_cast<double>(num_symbols) * total_symbol_time());
}

RisConfig::RisConfig(Eigen::MatrixXcd coefficients) : coeffs_(std::move(coefficients)) {
    if (!coeffs_.allFinite())
        throw Error(ErrorCode::InputDomain, "RIS configuration has non-finite coefficients");
}

RisConfig RisConfig::from_vector(std::span<const cd> values) {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(values.size()), 1);
    for (std::size_t l = 0; l < values.size(); ++l)
        m(static_cast<Eigen::Index>(l), 0) = values[l];
    return RisConfig(std::move(m));
}

bool RisConfig::is_static() const {
    for (Eigen::Index m = 1; m < coeffs_.cols(); ++m)
        if (coeffs_.col(m) != coeffs_.col(0))
            return false;
    return true;
}

std::vector<cd> RisConfig::column_vector(std::size_t slot) const {
    const auto col = coeffs_.col(static_cast<Eigen::Index>(slot));
    return std::vector<cd>(col.data(), col.data() + col.size());
}

SteeringVector steering_vector(const ArrayGeometry& geometry, const OfdmParams& params, std::size_t n,
                               double theta, SubcarrierMode mode) {
    if (n >= params.num_subcarriers)
        throw Error(ErrorCode::InputDomain, "steering_vector: subcarrier index " + std::to_string(n) +
                                                " out of range");
    require_angle(theta, "steering_vector");
    if (!geometry.element_offsets_m.empty() && geometry.element_offsets_m.size() != geometry.num_elements)
        throw Error(ErrorCode::Shape, "steering_vector: element offset count differs from element count");

    const double ratio = wavelength_ratio(params, n, mode);
    const double lambda_n = mode == SubcarrierMode::CarrierOnly ? params.wavelength()
                                                                : params.subcarrier_wavelength(n);
    const double step = -2.0 * kPi * geometry.element_spacing_wavelengths * ratio * std::cos(theta);

    SteeringVector sv;
    sv.subcarrier = n;
    sv.angle_rad = theta;
    sv.values.resize(static_cast<Eigen::Index>(geometry.num_elements));
    for (std::size_t l = 0; l < geometry.num_elements; ++l) {
        double phase = step * static_cast<double>(l);
        const double d = geometry.offset(l);
        if (d != 0.0)
            phase -= 2.0 * kPi * d / lambda_n;
        sv.values(static_cast<Eigen::Index>(l)) = std::polar(1.0, phase);
    }
    return sv;
}

cd pattern_value(const ArrayGeometry& geometry, std::span<const cd> column, const OfdmParams& params,
                 std::size_t n, double theta, SubcarrierMode mode) {
    if (column.size() != geometry.num_elements)
        throw Error(ErrorCode::Shape, "pattern_value: configuration has " + std::to_string(column.size()) +
                                          " elements, geometry has " + std::to_string(geometry.num_elements));
    const auto sv = steering_vector(geometry, params, n, theta, mode);
    cd acc{0.0, 0.0};
    for (std::size_t l = 0; l < column.size(); ++l)
        acc += column[l] * sv.values(static_cast<Eigen::Index>(l));
    return acc;
}

cd carrier_pattern(std::span<const cd> column, double theta) {
    const double step = -kPi * std::cos(theta);
    cd acc{0.0, 0.0};
    for (std::size_t l = 0; l < column.size(); ++l)
        acc += column[l] * std::polar(1.0, step * static_cast<double>(l));
    return acc;
}

double subcarrier_power(const ArrayGeometry& geometry, const RisConfig& config, const OfdmParams& params,
                        std::size_t n, double phi) {
    if (config.num_elements() != geometry.num_elements)
        throw Error(ErrorCode::Shape, "power_pattern: configuration/geometry element count mismatch");
    const auto sv = steering_vector(geometry, params, n, phi, SubcarrierMode::AllSubcarriers);
    return (config.coefficients().transpose() * sv.values).squaredNorm();
}

std::vector<double> power_pattern(const ArrayGeometry& geometry, const RisConfig& config,
                                  const OfdmParams& params, std::span<const double> angles,
                                  SubcarrierMode mode) {
    if (config.num_elements() != geometry.num_elements)
        throw Error(ErrorCode::Shape, "power_pattern: configuration/geometry element count mismatch");
    if (angles.empty())
        throw Error(ErrorCode::Shape, "power_pattern: empty angle grid");

    const Eigen::MatrixXcd ct = config.coefficients().transpose();
    const std::size_t bands = mode == SubcarrierMode::CarrierOnly ? 1 : params.num_subcarriers;
    std::vector<double> out(angles.size(), 0.0);
    for (std::size_t a = 0; a < angles.size(); ++a) {
        double acc = 0.0;
        for (std::size_t n = 0; n < bands; ++n) {
            const auto sv = steering_vector(geometry, params, n, angles[a], mode);
            acc += (ct * sv.values).squaredNorm();
        }
        out[a] = acc;
    }
    return out;
}

std::vector<double> power_pattern(const RisConfig& config, std::span<const double> angles) {
    if (angles.empty())
        throw Error(ErrorCode::Shape, "power_pattern: empty angle grid");
    std::vector<double> out(angles.size(), 0.0);
    for (std::size_t m = 0; m < config.num_slots(); ++m) {
        const auto col = config.column_vector(m);
        for (std::size_t a = 0; a < angles.size(); ++a)
            out[a] += std::norm(carrier_pattern(col, angles[a]));
    }
    return out;
}

std::vector<double> normalize_pattern_db(std::span<const double> pattern, double floor_db) {
    double peak = 0.0;
    for (double p : pattern) {
        if (!std::isfinite(p) || p < 0.0)
            throw Error(ErrorCode::InputDomain, "normalize_pattern_db: power values must be finite and >= 0");
        peak = std::max(peak, p);
    }
    if (!(peak > 0.0))
        throw Error(ErrorCode::DegenerateInput, "normalize_pattern_db: pattern has no positive entry");

    std::vector<double> out(pattern.size());
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (pattern[i] == 0.0) {
            out[i] = floor_db;
            continue;
        }
        out[i] = std::max(floor_db, 10.0 * std::log10(pattern[i] / peak));
    }
    return out;
}

std::vector<double> angle_grid(std::size_t points) {
    if (points < 2)
        throw Error(ErrorCode::InputDomain, "angle_grid: need at least two points");
    std::vector<double> grid(points);
    const double last = static_cast<double>(points - 1);
    for (std::size_t k = 0; k < points; ++k)
        grid[k] = kPi * static_cast<double>(k) / last;
    grid.back() = kPi;
    return grid;
}

} // namespace risradar
